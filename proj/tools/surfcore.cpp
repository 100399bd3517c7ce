// surfcore: command-line front end. Every command loads its inputs, calls one
// library operation and prints the result.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "surfcore/corpus.hpp"
#include "surfcore/errors.hpp"
#include "surfcore/io.hpp"
#include "surfcore/lattice.hpp"
#include "surfcore/oracle.hpp"
#include "surfcore/verify.hpp"

using namespace surfcore;
using io::Json;

namespace {

struct Options {
    std::string graph;
    std::string tower;
    std::string cycle;
    std::string cycle2;
    std::optional<std::size_t> level;
    bool json = false;
    bool trace = false;
    std::optional<long> max_search;
};

io::Workspace load(const Options& o) {
    if (!o.tower.empty() && !o.graph.empty()) throw InputError("give either --graph or --tower");
    if (!o.tower.empty()) return io::load_tower(o.tower);
    if (!o.graph.empty()) return io::load_graph(o.graph);
    throw InputError("--graph or --tower is required");
}

Cycle need_cycle(const io::Workspace& w, const std::string& spec, const char* flag,
                 std::optional<std::size_t> level) {
    if (spec.empty()) throw InputError(std::string(flag) + " is required");
    return w.cycle(spec, level);
}

std::size_t level_of(const io::Workspace& w, const Options& o) {
    return o.level.value_or(w.tower.top_level());
}

Json trace_json(const ClosureTrace& t) {
    Json a = Json::array();
    for (const auto& s : t)
        a.push_back(Json{{"vertex", s.vertex}, {"coeff", io::integer_json(s.coeff)},
                         {"violation", io::integer_json(s.violation)}});
    return a;
}

std::string render(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object()) {
        bool flat = true;
        for (const auto& [k, x] : v.items()) flat = flat && (x.is_number() || x.is_string());
        if (flat) {
            std::string s;
            for (const auto& [k, x] : v.items())
                s += (s.empty() ? "" : ",") + k + ":" + (x.is_string() ? x.get<std::string>() : x.dump());
            return s.empty() ? "0" : s;
        }
    }
    return v.dump();
}

void print(const Json& result, const Options& o) {
    if (o.json) {
        std::cout << result.dump() << "\n";
        return;
    }
    if (!result.is_object()) {
        std::cout << render(result) << "\n";
        return;
    }
    for (const auto& [k, v] : result.items()) {
        if (k == "trace" && v.is_array()) {
            std::cout << "trace:\n";
            for (const auto& step : v) std::cout << "  " << render(step) << "\n";
            continue;
        }
        std::cout << k << ": " << render(v) << "\n";
    }
}

oracle::SearchBound bound_for(const Options& o, const std::optional<Cycle>& z) {
    oracle::SearchBound b = z ? oracle::default_bound(*z) : oracle::SearchBound{};
    if (o.max_search) b.max_coeff = *o.max_search;
    return b;
}

Json core_json(const CoreReport& r, bool trace) {
    Json j{{"Y", io::cycle_json(r.y)},
           {"colon", io::cycle_json(r.colon_cycle)},
           {"core", io::cycle_json(r.core_cycle)},
           {"good", r.good},
           {"iterations", io::integer_json(r.iterations_to_good)}};
    if (trace) {
        Json steps = Json::array();
        for (std::size_t i = 0; i < r.contracted.size(); ++i)
            steps.push_back(Json{{"contract", r.contracted[i]}, {"b", io::integer_json(r.b[i])}});
        j["trace"] = std::move(steps);
    }
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Lattice computations on resolution graphs of normal surface singularities"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c, bool with_cycle) {
        c->add_option("--graph", o.graph, "graph document or corpus name");
        c->add_option("--tower", o.tower, "tower script");
        if (with_cycle) {
            c->add_option("--cycle", o.cycle, "cycle name or inline 'E0:2,E1:3'");
            c->add_option("--level", o.level, "tower level of the cycle (default: top)");
        }
        c->add_flag("--json", o.json, "machine-readable output");
        c->add_flag("--trace", o.trace, "step-by-step log");
        c->add_option("--max-search", o.max_search, "coefficient bound for oracle searches");
    };
    auto sub = [&](const char* name, const char* help, bool with_cycle) {
        auto* c = app.add_subcommand(name, help);
        add_common(c, with_cycle);
        return c;
    };

    Json out;
    int status = 0;
    bool printed = false;  // command wrote its own output

    sub("validate", "check the graph invariants", false)->callback([&] {
        GraphPtr g;
        if (!o.tower.empty())
            g = io::parse_tower_script(io::read_file(o.tower)).tower.top();
        else if (std::filesystem::exists(o.graph))
            g = io::parse_graph_document(io::read_file(o.graph)).graph;
        else
            g = corpus::lookup(o.graph).tower.top();
        const auto& r = g->report();
        out = Json{{"valid", r.valid()},
                   {"symmetric", r.symmetric},
                   {"connected", r.connected},
                   {"negative_definite", r.negative_definite},
                   {"adjunction_ok", r.adjunction_ok},
                   {"failures", r.failures}};
        if (!r.valid()) status = 2;
    });

    std::string start;
    auto* fc = sub("fundamental-cycle", "minimal nonzero anti-nef cycle", false);
    fc->add_option("--start", start, "starting vertex");
    fc->callback([&] {
        auto w = load(o);
        const auto& g = w.graph();
        ClosureTrace t;
        const auto z = fundamental_cycle(g, start.empty() ? 0 : g->index_of(start), &t);
        out = Json{{"Zf", io::cycle_json(z)}};
        if (o.trace) out["trace"] = trace_json(t);
    });

    sub("canonical-cycle", "rational cycle Z_K with Z_K.E = -K.E", false)->callback([&] {
        auto w = load(o);
        out = Json{{"ZK", io::qcycle_json(canonical_cycle(w.graph()))},
                   {"numerically_gorenstein", is_numerically_gorenstein(w.graph())}};
    });

    sub("is-rational", "Artin's criterion", false)->callback([&] {
        auto w = load(o);
        const auto zf = fundamental_cycle(w.graph());
        out = Json{{"rational", is_rational(w.graph())},
                   {"Zf", io::cycle_json(zf)},
                   {"pa", io::rational_json(arithmetic_genus(zf))}};
    });

    sub("antinef-closure", "least anti-nef cycle above D", true)->callback([&] {
        auto w = load(o);
        ClosureTrace t;
        const auto z = antinef_closure(need_cycle(w, o.cycle, "--cycle", o.level), &t);
        out = Json{{"closure", io::cycle_json(z)}};
        if (o.trace) out["trace"] = trace_json(t);
    });

    sub("pa", "arithmetic genus", true)->callback([&] {
        auto w = load(o);
        out = Json{{"pa", io::rational_json(arithmetic_genus(need_cycle(w, o.cycle, "--cycle", o.level)))}};
    });

    sub("multiplicity", "e(I_Z) = -Z^2", true)->callback([&] {
        auto w = load(o);
        const auto z = need_cycle(w, o.cycle, "--cycle", o.level);
        if (!z.is_positive() || !is_antinef(z))
            throw PreconditionError("multiplicity: Z must be anti-nef and nonzero");
        out = Json{{"multiplicity", io::integer_json(multiplicity(z))}};
    });

    std::optional<std::string> pg_text, h1_text;
    auto* col = sub("colength", "l(A/I_Z) by Riemann-Roch", true);
    col->add_option("--pg", pg_text, "geometric genus (default: the model's)");
    col->add_option("--h1", h1_text, "h^1(O(-Z)) (default: pg for p_g-numeric Z)");
    col->callback([&] {
        auto w = load(o);
        const auto z = need_cycle(w, o.cycle, "--cycle", o.level);
        Integer pg, h1;
        if (pg_text) {
            pg = parse_rational(*pg_text).get_num();
        } else {
            pg = w.require_model().pg();
        }
        if (h1_text) {
            h1 = parse_rational(*h1_text).get_num();
        } else {
            const auto ideal = represent(w.require_model(), w.tower, level_of(w, o), z);
            if (!ideal.h1) throw PreconditionError("colength: --h1 is required for this cycle");
            h1 = *ideal.h1;
        }
        out = Json{{"colength", io::integer_json(colength(z, pg, h1))}};
    });

    std::string at, edge, new_id;
    auto* bu = sub("blowup", "blow up a point of the top graph", false);
    bu->add_option("--at", at, "vertex for a free point");
    bu->add_option("--edge", edge, "'A,B' for the intersection point of A and B");
    bu->add_option("--new", new_id, "id of the new curve")->required();
    bu->callback([&] {
        auto w = load(o);
        BlowupCenter c;
        c.new_id = new_id;
        if (at.empty() == edge.empty()) throw InputError("give exactly one of --at and --edge");
        if (!at.empty()) {
            c.where = FreePoint{at};
        } else {
            const auto comma = edge.find(',');
            if (comma == std::string::npos) throw InputError("--edge expects 'A,B'");
            c.where = EdgePoint{edge.substr(0, comma), edge.substr(comma + 1)};
        }
        out = io::graph_document_json({blowup(w.graph(), c).graph, {}, std::nullopt});
        o.json = true;
    });

    std::string vertex;
    auto* co = sub("contract", "contract a rational (-1)-curve", false);
    co->add_option("--vertex", vertex, "curve to contract")->required();
    co->callback([&] {
        auto w = load(o);
        out = io::graph_document_json({contract(w.graph(), vertex).graph, {}, std::nullopt});
        o.json = true;
    });

    std::optional<std::size_t> from, to;
    auto* pb = sub("pullback", "total transform along the tower", true);
    pb->add_option("--from", from, "source level (default 0)");
    pb->add_option("--to", to, "target level (default top)");
    pb->callback([&] {
        auto w = load(o);
        const auto f = from.value_or(0), t = to.value_or(w.tower.top_level());
        out = Json{{"pullback", io::cycle_json(pullback(w.tower, f, t, need_cycle(w, o.cycle, "--cycle", f)))}};
    });

    auto* pf = sub("pushforward", "direct image along the tower", true);
    pf->add_option("--from", from, "source level (default top)");
    pf->add_option("--to", to, "target level (default 0)");
    pf->callback([&] {
        auto w = load(o);
        const auto f = from.value_or(w.tower.top_level()), t = to.value_or(0);
        out = Json{{"pushforward", io::cycle_json(pushforward(w.tower, f, t, need_cycle(w, o.cycle, "--cycle", f)))}};
    });

    auto* rk = sub("relative-canonical", "K_{X_top/X_bottom}", false);
    rk->add_option("--from", from, "upper level (default top)");
    rk->add_option("--to", to, "lower level (default 0)");
    rk->callback([&] {
        auto w = load(o);
        const auto k = relative_canonical(w.tower, from.value_or(w.tower.top_level()), to.value_or(0));
        out = Json{{"K", io::cycle_json(k)}, {"contracts_to_smooth", k.is_zero() || contracts_to_smooth(k)}};
    });

    sub("pg-test", "is I_Z a p_g-ideal (degree-zero test on supp C)", true)->callback([&] {
        auto w = load(o);
        const auto ideal = represent(w.require_model(), w.tower, level_of(w, o),
                                     need_cycle(w, o.cycle, "--cycle", o.level));
        out = Json{{"pg_numeric", is_pg_numeric(ideal)}, {"C", io::cycle_json(ideal.cohom)}};
    });

    auto ideal_of = [&](const io::Workspace& w, const std::string& spec, const char* flag) {
        return represent(w.require_model(), w.tower, level_of(w, o), need_cycle(w, spec, flag, o.level));
    };

    sub("colon-core", "Q:I and core(I) for a p_g-ideal", true)->callback([&] {
        auto w = load(o);
        out = core_json(colon_and_core(ideal_of(w, o.cycle, "--cycle")), o.trace);
    });

    sub("good-test", "minimal representation criterion", true)->callback([&] {
        auto w = load(o);
        const auto ideal = ideal_of(w, o.cycle, "--cycle");
        out = Json{{"good", is_good(ideal)}};
        if (ideal.model.gorenstein()) out["e_equals_2l"] = good_gorenstein_crosscheck(ideal);
    });

    sub("good-closure", "minimal good ideal containing I", true)->callback([&] {
        auto w = load(o);
        const auto g = good_closure(ideal_of(w, o.cycle, "--cycle"));
        Json ids = Json::array();
        for (const auto& v : g.graph()->vertices()) ids.push_back(v.id);
        out = Json{{"closure", io::cycle_json(g.z)}, {"graph", ids}};
    });

    auto* cm = sub("core-monotone", "colon and core containments for I2 in I1", true);
    cm->add_option("--cycle2", o.cycle2, "cycle of the smaller ideal")->required();
    cm->callback([&] {
        auto w = load(o);
        out = Json{{"holds", core_monotone_check(ideal_of(w, o.cycle, "--cycle"),
                                                 ideal_of(w, o.cycle2, "--cycle2"))}};
    });

    long ce = 0, cg = 0, ca = 0;
    std::optional<std::string> cpg;
    auto* cone = app.add_subcommand("cone", "graded cone over a curve");
    cone->add_option("--e", ce, "degree of D")->required();
    cone->add_option("--g", cg, "genus of the curve")->required();
    cone->add_option("--a", ca, "a with aD ~ K_C")->required();
    cone->add_option("--pg", cpg, "geometric genus (default g)");
    cone->add_flag("--json", o.json, "machine-readable output");
    cone->callback([&] {
        std::optional<Integer> pg;
        if (cpg) pg = parse_rational(*cpg).get_num();
        const auto c = cone_model(ce, cg, ca, pg);
        const auto& s = c.stats;
        out = Json{{"Z", io::cycle_json(c.ideal.z)},
                   {"colength", io::integer_json(s.colength)},
                   {"expected_colength", io::integer_json(s.expected_colength)},
                   {"mu", io::integer_json(s.mu)},
                   {"expected_mu", io::integer_json(s.expected_mu)},
                   {"mult_gap", io::integer_json(s.mult_gap)},
                   {"expected_mult_gap", io::integer_json(s.expected_mult_gap)},
                   {"good", s.good},
                   {"all_ok", s.all_ok()}};
        if (!s.all_ok()) status = 3;
    });

    auto* orc = app.add_subcommand("oracle", "exhaustive verifiers");
    orc->require_subcommand(1);
    auto osub = [&](const char* name, const char* help, bool with_cycle) {
        auto* c = orc->add_subcommand(name, help);
        add_common(c, with_cycle);
        return c;
    };
    osub("max-y", "largest admissible Y <= Z by enumeration", true)->callback([&] {
        auto w = load(o);
        const auto ideal = ideal_of(w, o.cycle, "--cycle");
        const auto r = oracle::enumerate_max_y(ideal.z, ideal.cohom, bound_for(o, ideal.z));
        out = Json{{"Y", r.y ? io::cycle_json(*r.y) : Json(nullptr)},
                   {"admissible", r.admissible},
                   {"searched", r.searched}};
        if (!r.y) throw TheoremViolation("admissible set has no maximum");
        const auto rep = colon_and_core(ideal);
        out["agrees"] = *r.y == rep.y;
        if (!(*r.y == rep.y))
            throw TheoremViolation("oracle Y = " + format_cycle(*r.y) + " but colon_and_core Y = " +
                                   format_cycle(rep.y));
    });
    osub("zf", "fundamental cycle by enumeration", false)->callback([&] {
        auto w = load(o);
        const auto z = oracle::fundamental_cycle_bruteforce(w.graph(), bound_for(o, std::nullopt));
        out = Json{{"Zf", io::cycle_json(z)}, {"agrees", z == fundamental_cycle(w.graph())}};
        if (!(z == fundamental_cycle(w.graph())))
            throw TheoremViolation("oracle and Laufer fundamental cycles differ");
    });
    osub("negdef", "negative definiteness by enumeration", false)->callback([&] {
        GraphPtr g;
        if (!o.tower.empty())
            g = io::parse_tower_script(io::read_file(o.tower)).tower.top();
        else if (std::filesystem::exists(o.graph))
            g = io::parse_graph_document(io::read_file(o.graph)).graph;
        else
            g = corpus::lookup(o.graph).tower.top();
        auto b = bound_for(o, std::nullopt);
        if (!o.max_search) b.max_coeff = 3;
        const bool nd = oracle::negdef_bruteforce(*g, b);
        out = Json{{"negative_definite", nd}, {"minors", g->report().negative_definite}};
        if (nd != g->report().negative_definite && g->report().negative_definite)
            throw TheoremViolation("minor test and enumeration disagree");
    });

    auto* corp = app.add_subcommand("corpus", "built-in examples");
    corp->require_subcommand(1);
    corp->add_subcommand("list", "names of the built-in entries")->callback([&] {
        for (const auto& n : corpus::names()) std::cout << n << "\n";
        std::cout << "HJ(n,q)\ncone(e,g,a)\n";
        printed = true;
    });
    std::string show_name;
    auto* show = corp->add_subcommand("show", "graph document of an entry");
    show->add_option("name", show_name)->required();
    show->callback([&] {
        std::cout << io::emit(io::graph_document_json(io::entry_document(corpus::lookup(show_name))));
        printed = true;
    });
    std::uint64_t seed = verify::kDefaultSeed;
    auto* ver = corp->add_subcommand("verify", "run the acceptance suite");
    ver->add_option("--seed", seed, "random seed");
    ver->add_flag("--json", o.json, "machine-readable output");
    ver->callback([&] {
        Json rows = Json::array();
        bool ok = true;
        for (int id = 1; id <= 9; ++id) {
            const auto r = verify::criterion(id, seed);
            ok = ok && r.passed;
            if (o.json)
                rows.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
            else
                std::cout << verify::format_result(r) << std::endl;
        }
        if (o.json) std::cout << rows.dump() << "\n";
        printed = true;
        status = ok ? 0 : 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    if (!printed) print(out, o);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

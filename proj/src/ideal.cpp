#include "surfcore/ideal.hpp"

#include <algorithm>

#include "surfcore/errors.hpp"
#include "surfcore/lattice.hpp"

namespace surfcore {

namespace {

// E_i lies in supp C or crosses a curve of supp C.
bool meets_support(const DualGraph& g, std::size_t i, const Cycle& c) {
    if (c[i] > 0) return true;
    for (auto j : g.neighbors(i))
        if (c[j] > 0) return true;
    return false;
}

Cycle restrict_to(const Cycle& w, const GraphPtr& g) {
    Cycle out(g);
    for (std::size_t i = 0; i < g->size(); ++i) out[i] = w.at(g->id(i));
    return out;
}

Cycle move_to(const Cycle& w, const GraphPtr& g) {
    return w.graph()->same_layout(*g) ? w : w.rebased(g);
}

bool numeric_pg(const Cycle& z, const Cycle& c) {
    for (auto i : c.support())
        if (pair_with_vertex(z, i) != 0) return false;
    return true;
}

void require_pg_numeric(const IdealRep& ideal, const char* op) {
    if (!is_pg_numeric(ideal))
        throw PreconditionError(std::string(op) + ": ideal " + format_cycle(ideal.z) +
                                " is not p_g-numeric");
}

void require_same_model(const IdealRep& a, const IdealRep& b) {
    if (!a.model.base()->same_structure(*b.model.base()) || a.model.pg() != b.model.pg() ||
        !(a.model.cohom_base() == move_to(b.model.cohom_base(), a.model.base())))
        throw InputError("ideals belong to different singularity models");
}

}  // namespace

SingularityModel SingularityModel::rational(GraphPtr base) {
    return make(std::move(base), 0, false, std::nullopt);
}

SingularityModel SingularityModel::make(GraphPtr base, Integer pg, bool gorenstein,
                                        std::optional<Cycle> cohom) {
    const auto& g = *base;
    if (!g.is_valid())
        throw PreconditionError("model: graph '" + g.name() + "' is not valid: " +
                                (g.report().failures.empty() ? "" : g.report().failures[0]));
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.is_exceptional_curve(i))
            throw PreconditionError("model: base graph '" + g.name() + "' is not minimal (" +
                                    g.id(i) + " is a (-1)-curve)");
    if (pg < 0) throw PreconditionError("model: pg must be >= 0");
    const bool rational = surfcore::is_rational(base);
    if (rational && pg != 0) throw PreconditionError("model: rational graph requires pg = 0");
    if (!rational && pg == 0) throw PreconditionError("model: non-rational graph requires pg >= 1");

    std::optional<Cycle> zk;
    if (gorenstein) {
        if (!is_numerically_gorenstein(base))
            throw PreconditionError("model: Gorenstein requires an integral canonical cycle");
        const auto q = canonical_cycle(base);
        Cycle k(base);
        for (std::size_t i = 0; i < g.size(); ++i) k[i] = q[i].get_num();
        zk = std::move(k);
    }

    Cycle c(base);
    if (cohom) {
        c = move_to(*cohom, base);
        if (!c.is_effective()) throw PreconditionError("model: cohomological cycle must be effective");
        if (rational && !c.is_zero())
            throw PreconditionError("model: rational singularities have C = 0");
        if (!rational && c.is_zero())
            throw PreconditionError("model: non-rational singularities have C > 0");
        if (!rational && zk && !(c == *zk))
            throw PreconditionError("model: Gorenstein minimal resolution requires C = Z_K");
    } else if (!rational) {
        if (!zk) throw PreconditionError("model: cohomological cycle required (non-Gorenstein)");
        c = *zk;
    }
    if (rational && zk && !zk->is_zero())
        throw PreconditionError("model: rational Gorenstein graphs have Z_K = 0");
    return SingularityModel(std::move(base), rational, std::move(pg), gorenstein, std::move(c));
}

IdealRep represent(const SingularityModel& model, const Tower& tower, std::size_t level,
                   const Cycle& z, std::optional<Integer> h1) {
    if (!tower.base()->same_structure(*model.base()))
        throw InputError("represent: tower base is not the model's minimal resolution");
    const auto& g = tower.level(level);
    Cycle zz = move_to(z, g);
    if (zz.is_zero()) throw PreconditionError("represent: Z must be nonzero");
    if (!is_antinef(zz))
        throw PreconditionError("represent: Z = " + format_cycle(zz) + " is not anti-nef");

    Cycle c = transport_cohom(tower, move_to(model.cohom_base(), tower.base())).at(level);
    if (h1) {
        if (*h1 < 0 || *h1 > model.pg()) throw PreconditionError("represent: h1 outside [0, pg]");
        if (model.is_rational() && *h1 != 0)
            throw PreconditionError("represent: rational models have h1 = 0");
    } else if (model.is_rational() || numeric_pg(zz, c)) {
        h1 = model.pg();
    }
    return IdealRep{model, tower, level, std::move(zz), std::move(h1), std::move(c)};
}

bool is_pg_numeric(const IdealRep& ideal) { return numeric_pg(ideal.z, ideal.cohom); }

CommonLevel common_level(const Tower& ta, std::size_t la, const Cycle& za, const Tower& tb,
                         std::size_t lb, const Cycle& zb) {
    for (std::size_t a = la; a < ta.size(); ++a)
        for (std::size_t b = lb; b < tb.size(); ++b)
            if (ta.level(a)->same_structure(*tb.level(b))) {
                Cycle pa = pullback(ta, la, a, za);
                Cycle pb = pullback(tb, lb, b, zb).rebased(ta.level(a));
                return {std::move(pa), std::move(pb), a};
            }
    throw PreconditionError("no common resolution level for the two ideals");
}

IdealRep product(const IdealRep& a, const IdealRep& b) {
    require_same_model(a, b);
    const bool pa = is_pg_numeric(a), pb = is_pg_numeric(b);
    if (!pa && !pb)
        throw PreconditionError("product: neither factor is p_g-numeric; Z1 + Z2 may not "
                                "represent the product");
    auto cl = common_level(a.tower, a.level, a.z, b.tower, b.level, b.z);
    // h1(Z + Z') = h1(Z') when Z is a p_g-cycle.
    std::optional<Integer> h1 = pa ? b.h1 : a.h1;
    return represent(a.model, a.tower, cl.level_a, cl.a + cl.b, h1);
}

ContractionSequence contraction_sequence(const IdealRep& ideal) {
    GraphPtr g = ideal.graph();
    Cycle c = ideal.cohom;
    std::vector<std::string> avoiding;
    std::vector<std::string> rest;

    auto next = [&](bool avoid) -> std::optional<std::string> {
        if (g->size() == 1) return std::nullopt;
        for (std::size_t i = 0; i < g->size(); ++i)
            if (g->is_exceptional_curve(i) && (!avoid || !meets_support(*g, i, c)))
                return g->id(i);
        return std::nullopt;
    };
    while (auto id = next(true)) {
        avoiding.push_back(*id);
        g = contract(g, *id).graph;
        c = restrict_to(c, g);
    }
    while (auto id = next(false)) {
        rest.push_back(*id);
        g = contract(g, *id).graph;
        c = restrict_to(c, g);
    }

    Tower t(ideal.graph());
    for (const auto& id : avoiding) t = t.contracted_below(id);
    for (const auto& id : rest) t = t.contracted_below(id);
    if (!t.base()->same_structure(*ideal.model.base()))
        throw TheoremViolation("contraction of " + ideal.graph()->name() +
                               " does not reach the model's minimal resolution");

    auto track = transport_cohom(t, move_to(ideal.model.cohom_base(), t.base()));
    if (!(track.at(t.top_level()) == ideal.cohom))
        throw TheoremViolation("cohomological cycle depends on the tower: " +
                               format_cycle(track.at(t.top_level())) + " vs " +
                               format_cycle(ideal.cohom));
    return {std::move(t), std::move(track), rest.size(), std::move(avoiding)};
}

CoreReport colon_and_core(const IdealRep& ideal) {
    require_pg_numeric(ideal, "colon_and_core");
    const auto seq = contraction_sequence(ideal);
    const auto& t = seq.tower;
    const std::size_t top = t.top_level();
    const Cycle& z = ideal.z;

    CoreReport r{Cycle(z.graph()), z, z, seq.contracted, {}, 0, false, 0, 0, 0};
    for (std::size_t i = 1; i <= seq.contracted.size(); ++i) {
        // E_i is the exceptional curve of the step linking levels top-i and top-i+1.
        const auto& gi = t.level(top - i + 1);
        const Cycle f = pullback(t, top - i + 1, top,
                                 Cycle::unit(gi, gi->index_of(t.step(top - i).exceptional)));
        const Integer b = -pair(z, f);
        if (b < 0) throw TheoremViolation("colon_and_core: negative b_i for anti-nef Z");
        if (b > 0) r.y += f;
        if (b > r.iterations_to_good) r.iterations_to_good = b;
        r.b.push_back(b);
    }
    r.colon_cycle = z - r.y;
    r.core_cycle = Integer(2) * z - r.y;
    r.good = r.y.is_zero();

    if (!r.y.is_effective() || (!r.good && !contracts_to_smooth(r.y)))
        throw TheoremViolation("colon_and_core: Y = " + format_cycle(r.y) +
                               " does not blow down to smooth points");
    if (!is_antinef(r.colon_cycle) || !numeric_pg(r.colon_cycle, ideal.cohom))
        throw TheoremViolation("colon_and_core: Z - Y = " + format_cycle(r.colon_cycle) +
                               " is not a p_g-numeric anti-nef cycle");

    const auto& pg = ideal.model.pg();
    r.colength_ideal = colength(z, pg, pg);
    r.colength_colon = colength(r.colon_cycle, pg, pg);
    r.colength_core = colength(r.core_cycle, pg, pg);
    return r;
}

IdealRep colon_ideal(const IdealRep& ideal) {
    auto r = colon_and_core(ideal);
    return represent(ideal.model, ideal.tower, ideal.level, r.colon_cycle, ideal.model.pg());
}

bool is_good(const IdealRep& ideal) {
    require_pg_numeric(ideal, "is_good");
    GraphPtr g = ideal.graph();
    Cycle z = ideal.z;
    Cycle c = ideal.cohom;
    for (bool again = true; again && g->size() > 1;) {
        again = false;
        for (std::size_t i = 0; i < g->size(); ++i)
            if (g->is_exceptional_curve(i) && pair_with_vertex(z, i) == 0) {
                g = contract(g, g->id(i)).graph;
                z = restrict_to(z, g);
                c = restrict_to(c, g);
                again = true;
                break;
            }
    }
    for (std::size_t i = 0; i < g->size(); ++i)
        if (g->is_exceptional_curve(i) && !meets_support(*g, i, c)) return false;
    return true;
}

bool good_gorenstein_crosscheck(const IdealRep& ideal) {
    if (!ideal.model.gorenstein())
        throw PreconditionError("good_gorenstein_crosscheck: model is not Gorenstein");
    require_pg_numeric(ideal, "good_gorenstein_crosscheck");
    const auto& pg = ideal.model.pg();
    return multiplicity(ideal.z) == 2 * colength(ideal.z, pg, pg);
}

IdealRep good_closure(const IdealRep& ideal) {
    require_pg_numeric(ideal, "good_closure");
    auto seq = contraction_sequence(ideal);
    const auto top = seq.tower.top_level();
    Cycle pushed = pushforward(seq.tower, top, seq.stop_level, move_to(ideal.z, seq.tower.top()));
    return represent(ideal.model, seq.tower, seq.stop_level, pushed, ideal.model.pg());
}

bool contained_in(const IdealRep& inner, const IdealRep& outer) {
    require_same_model(inner, outer);
    auto cl = common_level(inner.tower, inner.level, inner.z, outer.tower, outer.level, outer.z);
    return cl.a >= cl.b;
}

bool core_monotone_check(const IdealRep& larger, const IdealRep& smaller) {
    require_pg_numeric(larger, "core_monotone_check");
    require_pg_numeric(smaller, "core_monotone_check");
    if (!contained_in(smaller, larger))
        throw PreconditionError("core_monotone_check: second ideal is not contained in the first");
    const auto rl = colon_and_core(larger);
    const auto rs = colon_and_core(smaller);
    const auto colon = common_level(smaller.tower, smaller.level, rs.colon_cycle, larger.tower,
                                    larger.level, rl.colon_cycle);
    const auto core = common_level(smaller.tower, smaller.level, rs.core_cycle, larger.tower,
                                   larger.level, rl.core_cycle);
    return colon.a >= colon.b && core.a >= core.b;
}

Integer stability_defect(const IdealRep& ideal, const Integer& h1_z, const Integer& h1_2z) {
    return epsilon(ideal.model.pg(), h1_z, h1_z, h1_2z);
}

ConeModel cone_model(long e, long g, long a, std::optional<Integer> pg) {
    if (e < 1 || g < 1 || a < 0 || a * e != 2 * g - 2)
        throw PreconditionError("cone_model: need e >= 1, g >= 1, a >= 0 and a*e = 2g - 2");
    auto base = make_graph("cone(" + std::to_string(e) + "," + std::to_string(g) + "," +
                               std::to_string(a) + ")",
                           {{"E", -e, 2 * g - 2 + e}}, {});
    auto model = SingularityModel::make(base, pg.value_or(Integer(g)), true);

    const Cycle m = Cycle::unit(base, 0);
    auto assoc = associated_pg_cycle(Tower(base), model.cohom_base(), m,
                                     {{"E", static_cast<int>(e)}});
    auto ideal = represent(model, assoc.tower, assoc.tower.top_level(), assoc.z);
    if (!is_pg_numeric(ideal))
        throw TheoremViolation("cone_model: associated cycle is not p_g-numeric");

    ConeStats s;
    s.colength = colength(ideal.z, model.pg(), model.pg());
    s.expected_colength = e + g - 1;
    s.mu = multiplicity(m) + 1;
    s.expected_mu = e + 1;
    s.mult_gap = multiplicity(ideal.z) - multiplicity(m);
    s.cohom_dot = -pair(model.cohom_base(), m);
    s.expected_mult_gap = (a + 1) * e;
    s.good = is_good(ideal);
    s.colength_ok = s.colength == s.expected_colength;
    s.mu_ok = s.mu == s.expected_mu;
    s.mult_gap_ok = s.mult_gap == s.expected_mult_gap && s.cohom_dot == s.expected_mult_gap;
    return {std::move(model), std::move(ideal), std::move(s)};
}

}  // namespace surfcore

#include "surfcore/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "surfcore/errors.hpp"
#include "surfcore/lattice.hpp"

namespace surfcore::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
    throw InputError(path + ": " + msg);
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema(path + "." + key, "missing required field");
    return *it;
}

void expect_object(const Json& j, const std::string& path) {
    if (!j.is_object()) schema(path, "expected an object");
}

void expect_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) schema(path + "." + k, "unknown field");
    }
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) schema(path, "expected a string");
    return j.get<std::string>();
}

Integer get_integer(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        Rational q;
        try {
            q = parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
            schema(path, "malformed integer '" + j.get<std::string>() + "'");
        }
        if (!is_integral(q)) schema(path, "expected an integer, got " + to_string(q));
        return q.get_num();
    }
    schema(path, "expected an integer");
}

std::int64_t get_small(const Json& j, const std::string& path) {
    Integer v = get_integer(j, path);
    if (!v.fits_slong_p()) schema(path, "value out of range");
    return v.get_si();
}

std::string vertex_path(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

GraphPtr parse_graph(const Json& doc, const std::string& path) {
    const std::string name = doc.contains("name") ? get_string(doc["name"], path + ".name") : "";
    const Json& vs = field(doc, path, "vertices");
    if (!vs.is_array()) schema(path + ".vertices", "expected an array");
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string vp = vertex_path(path + ".vertices", i);
        const Json& v = vs[i];
        expect_object(v, vp);
        expect_keys(v, vp, {"id", "self_int", "genus", "kappa"});
        Vertex out;
        out.id = get_string(field(v, vp, "id"), vp + ".id");
        out.self_int = get_small(field(v, vp, "self_int"), vp + ".self_int");
        const bool has_g = v.contains("genus"), has_k = v.contains("kappa");
        if (has_g == has_k) schema(vp, "exactly one of 'genus' and 'kappa' is required");
        if (has_g) {
            const auto g = get_small(v["genus"], vp + ".genus");
            if (g < 0) schema(vp + ".genus", "must be >= 0");
            out.kappa = kappa_from_genus(g, out.self_int);
        } else {
            out.kappa = get_small(v["kappa"], vp + ".kappa");
        }
        vertices.push_back(std::move(out));
    }
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        const Json& es = doc["edges"];
        if (!es.is_array()) schema(path + ".edges", "expected an array");
        for (std::size_t i = 0; i < es.size(); ++i) {
            const std::string ep = vertex_path(path + ".edges", i);
            expect_object(es[i], ep);
            expect_keys(es[i], ep, {"a", "b", "mult"});
            Edge e;
            e.a = get_string(field(es[i], ep, "a"), ep + ".a");
            e.b = get_string(field(es[i], ep, "b"), ep + ".b");
            if (es[i].contains("mult")) e.mult = get_small(es[i]["mult"], ep + ".mult");
            edges.push_back(std::move(e));
        }
    }
    try {
        return make_graph(name, std::move(vertices), edges);
    } catch (const InputError& e) {
        schema(path, e.what());
    }
}

std::optional<ModelSpec> parse_model(const Json& doc, const std::string& path,
                                     const std::vector<NamedCycle>& cycles) {
    if (!doc.contains("model")) return std::nullopt;
    const Json& m = doc["model"];
    const std::string mp = path + ".model";
    expect_object(m, mp);
    expect_keys(m, mp, {"pg", "gorenstein", "cohom_cycle"});
    ModelSpec spec;
    spec.pg = get_integer(field(m, mp, "pg"), mp + ".pg");
    if (m.contains("gorenstein")) {
        if (!m["gorenstein"].is_boolean()) schema(mp + ".gorenstein", "expected a boolean");
        spec.gorenstein = m["gorenstein"].get<bool>();
    }
    if (m.contains("cohom_cycle")) {
        spec.cohom_cycle = get_string(m["cohom_cycle"], mp + ".cohom_cycle");
        bool found = false;
        for (const auto& c : cycles) found = found || c.name == *spec.cohom_cycle;
        if (!found) schema(mp + ".cohom_cycle", "no cycle named '" + *spec.cohom_cycle + "'");
    }
    return spec;
}

std::vector<NamedCycle> parse_cycles(const Json& doc, const std::string& path, const GraphPtr& g) {
    std::vector<NamedCycle> out;
    if (!doc.contains("cycles")) return out;
    const Json& cs = doc["cycles"];
    expect_object(cs, path + ".cycles");
    for (const auto& [name, coeffs] : cs.items())
        out.push_back({name, 0, cycle_from_json(g, coeffs, path + ".cycles." + name)});
    return out;
}

const Cycle& named(const std::vector<NamedCycle>& cs, const std::string& name) {
    for (const auto& c : cs)
        if (c.name == name) return c.cycle;
    throw InputError("no cycle named '" + name + "'");
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("$: malformed JSON: ") + e.what());
    }
}

Json model_json(const ModelSpec& m) {
    Json j = Json::object();
    j["pg"] = integer_json(m.pg);
    j["gorenstein"] = m.gorenstein;
    if (m.cohom_cycle) j["cohom_cycle"] = *m.cohom_cycle;
    return j;
}

// Model on the base of `t`, with the cohomological cycle given on level `level`.
SingularityModel build_model(const Tower& t, std::size_t level, const ModelSpec& spec,
                             const std::optional<Cycle>& cohom) {
    std::optional<Cycle> base_c;
    if (cohom) base_c = pushforward(t, level, 0, *cohom);
    auto model = SingularityModel::make(t.base(), spec.pg, spec.gorenstein, base_c);
    if (cohom) {
        const auto up = transport_cohom(t, model.cohom_base()).at(level);
        if (!(up == *cohom))
            throw InputError("cohomological cycle " + format_cycle(*cohom) +
                             " is not the transform of " + format_cycle(model.cohom_base()) +
                             " on the minimal resolution (expected " + format_cycle(up) + ")");
    }
    return model;
}

std::optional<SingularityModel> default_model(const GraphPtr& base) {
    if (!base->is_valid() || !is_rational(base)) return std::nullopt;
    for (std::size_t i = 0; i < base->size(); ++i)
        if (base->is_exceptional_curve(i)) return std::nullopt;
    const bool gor = is_numerically_gorenstein(base) && canonical_cycle(base).is_zero();
    return SingularityModel::make(base, 0, gor);
}

}  // namespace

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json rational_json(const Rational& v) { return Json(to_string(v)); }

Json cycle_json(const Cycle& c) {
    Json j = Json::object();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) j[c.graph()->id(i)] = integer_json(c[i]);
    return j;
}

Json qcycle_json(const QCycle& c) {
    Json j = Json::object();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) j[c.graph()->id(i)] = rational_json(c[i]);
    return j;
}

Cycle cycle_from_json(const GraphPtr& g, const Json& j, const std::string& path) {
    expect_object(j, path);
    Cycle c(g);
    for (const auto& [id, v] : j.items()) {
        auto i = g->find(id);
        if (!i) schema(path + "." + id, "unknown vertex");
        c[*i] = get_integer(v, path + "." + id);
    }
    return c;
}

GraphDocument parse_graph_document(const Json& doc) {
    expect_object(doc, "$");
    expect_keys(doc, "$", {"format", "name", "vertices", "edges", "cycles", "model"});
    if (doc.contains("format") && get_small(doc["format"], "$.format") != kFormat)
        schema("$.format", "unsupported format version");
    GraphDocument out;
    out.graph = parse_graph(doc, "$");
    out.cycles = parse_cycles(doc, "$", out.graph);
    out.model = parse_model(doc, "$", out.cycles);
    return out;
}

GraphDocument parse_graph_document(const std::string& text) {
    return parse_graph_document(parse_text(text));
}

Json graph_document_json(const GraphDocument& doc) {
    const auto& g = *doc.graph;
    Json j = Json::object();
    j["format"] = kFormat;
    j["name"] = g.name();
    Json vs = Json::array();
    for (const auto& v : g.vertices())
        vs.push_back(Json{{"id", v.id}, {"self_int", v.self_int}, {"kappa", v.kappa}});
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const auto& e : g.edges()) es.push_back(Json{{"a", e.a}, {"b", e.b}, {"mult", e.mult}});
    j["edges"] = std::move(es);
    Json cs = Json::object();
    for (const auto& c : doc.cycles) cs[c.name] = cycle_json(c.cycle);
    j["cycles"] = std::move(cs);
    if (doc.model) j["model"] = model_json(*doc.model);
    return j;
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

TowerScript parse_tower_script(const Json& doc) {
    expect_object(doc, "$");
    expect_keys(doc, "$", {"format", "base", "steps", "cycles"});
    if (doc.contains("format") && get_small(doc["format"], "$.format") != kFormat)
        schema("$.format", "unsupported format version");

    const Json& base = field(doc, "$", "base");
    std::optional<Tower> tower;
    std::optional<ModelSpec> spec;
    std::optional<Cycle> cohom;  // on the initial base graph
    std::vector<NamedCycle> base_cycles;
    if (base.is_string()) {
        const auto entry = corpus::lookup(base.get<std::string>());
        tower = entry.tower;
        spec = ModelSpec{entry.model.pg(), entry.model.gorenstein(), std::nullopt};
        cohom = entry.model.cohom_base();
    } else {
        expect_object(base, "$.base");
        expect_keys(base, "$.base", {"format", "name", "vertices", "edges", "cycles", "model"});
        auto g = parse_graph(base, "$.base");
        tower = Tower(g);
        base_cycles = parse_cycles(base, "$.base", g);
        spec = parse_model(base, "$.base", base_cycles);
        if (spec && spec->cohom_cycle) cohom = named(base_cycles, *spec->cohom_cycle);
    }

    std::size_t below = 0;  // levels prepended by contract steps
    if (doc.contains("steps")) {
        const Json& steps = doc["steps"];
        if (!steps.is_array()) schema("$.steps", "expected an array");
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const std::string sp = vertex_path("$.steps", i);
            const Json& s = steps[i];
            expect_object(s, sp);
            const std::string op = get_string(field(s, sp, "op"), sp + ".op");
            try {
                if (op == "blowup_free") {
                    expect_keys(s, sp, {"op", "vertex", "new"});
                    tower = tower->blown_up(
                        {FreePoint{get_string(field(s, sp, "vertex"), sp + ".vertex")},
                         get_string(field(s, sp, "new"), sp + ".new")});
                } else if (op == "blowup_edge") {
                    expect_keys(s, sp, {"op", "a", "b", "new"});
                    tower = tower->blown_up({EdgePoint{get_string(field(s, sp, "a"), sp + ".a"),
                                                       get_string(field(s, sp, "b"), sp + ".b")},
                                             get_string(field(s, sp, "new"), sp + ".new")});
                } else if (op == "contract") {
                    expect_keys(s, sp, {"op", "vertex"});
                    tower = tower->contracted_below(
                        get_string(field(s, sp, "vertex"), sp + ".vertex"));
                    ++below;
                } else {
                    schema(sp + ".op", "unknown operation '" + op + "'");
                }
            } catch (const PreconditionError& e) {
                schema(sp, e.what());
            }
        }
    }

    TowerScript out{*tower, {}, spec, std::nullopt};
    if (cohom) out.base_cohom = pushforward(out.tower, below, 0, cohom->rebased(out.tower.level(below)));
    for (auto& c : base_cycles) {
        if (spec && spec->cohom_cycle == c.name) continue;
        c.level = below;
        c.cycle = c.cycle.rebased(out.tower.level(below));
        out.cycles.push_back(std::move(c));
    }
    if (doc.contains("cycles")) {
        const Json& cs = doc["cycles"];
        expect_object(cs, "$.cycles");
        for (const auto& [name, v] : cs.items()) {
            const std::string cp = "$.cycles." + name;
            expect_object(v, cp);
            expect_keys(v, cp, {"level", "coeffs"});
            const auto level = get_small(field(v, cp, "level"), cp + ".level");
            if (level < 0 || static_cast<std::size_t>(level) >= out.tower.size())
                schema(cp + ".level", "no such level");
            const auto lv = static_cast<std::size_t>(level);
            out.cycles.push_back(
                {name, lv, cycle_from_json(out.tower.level(lv), field(v, cp, "coeffs"), cp + ".coeffs")});
        }
    }
    return out;
}

TowerScript parse_tower_script(const std::string& text) {
    return parse_tower_script(parse_text(text));
}

Json tower_script_json(const TowerScript& script) {
    const auto& t = script.tower;
    GraphDocument base{t.base(), {}, std::nullopt};
    if (script.model) {
        base.model = script.model;
        base.model->cohom_cycle.reset();
        if (script.base_cohom && !script.base_cohom->is_zero()) {
            base.cycles.push_back({"C", 0, *script.base_cohom});
            base.model->cohom_cycle = "C";
        }
    }
    Json j = Json::object();
    j["format"] = kFormat;
    Json b = graph_document_json(base);
    b.erase("format");
    j["base"] = std::move(b);
    Json steps = Json::array();
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        const auto& st = t.step(k);
        if (!st.center)
            throw PreconditionError("tower step " + std::to_string(k) +
                                    " has no recorded centre and cannot be replayed");
        if (const auto* f = std::get_if<FreePoint>(&st.center->where))
            steps.push_back(Json{{"op", "blowup_free"}, {"vertex", f->vertex}, {"new", st.exceptional}});
        else {
            const auto& e = std::get<EdgePoint>(st.center->where);
            steps.push_back(
                Json{{"op", "blowup_edge"}, {"a", e.a}, {"b", e.b}, {"new", st.exceptional}});
        }
    }
    j["steps"] = std::move(steps);
    Json cs = Json::object();
    for (const auto& c : script.cycles)
        cs[c.name] = Json{{"level", c.level}, {"coeffs", cycle_json(c.cycle)}};
    j["cycles"] = std::move(cs);
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Cycle parse_cycle_spec(const GraphPtr& g, const std::string& spec,
                       const std::vector<NamedCycle>& named_cycles) {
    for (const auto& c : named_cycles)
        if (c.name == spec) {
            if (c.cycle.graph()->same_layout(*g)) return c.cycle;
            if (c.cycle.graph()->same_structure(*g)) return c.cycle.rebased(g);
            throw InputError("cycle '" + spec + "' lives on another level");
        }
    Cycle c(g);
    if (spec == "0") return c;
    if (spec.find(':') == std::string::npos)
        throw InputError("unknown cycle '" + spec + "' (expected a name or 'id:coeff,...')");
    std::set<std::string> seen;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.rfind(':');
        if (colon == std::string::npos || colon == 0)
            throw InputError("malformed cycle term '" + item + "'");
        const std::string id = item.substr(0, colon);
        auto i = g->find(id);
        if (!i) throw InputError("cycle term '" + item + "': unknown vertex '" + id + "'");
        if (!seen.insert(id).second) throw InputError("cycle term '" + item + "': repeated vertex");
        Rational q;
        try {
            q = parse_rational(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("cycle term '" + item + "': malformed coefficient");
        }
        if (!is_integral(q)) throw InputError("cycle term '" + item + "': coefficient must be an integer");
        c[*i] = q.get_num();
    }
    return c;
}

const SingularityModel& Workspace::require_model() const {
    if (!model)
        throw PreconditionError("no singularity model: '" + tower.base()->name() +
                                "' is not rational and the document has no model section");
    return *model;
}

Cycle Workspace::cycle(const std::string& spec, std::optional<std::size_t> level) const {
    const auto lv = level.value_or(tower.top_level());
    if (lv >= tower.size()) throw InputError("no level " + std::to_string(lv));
    return parse_cycle_spec(tower.level(lv), spec, cycles);
}

Workspace workspace_from_entry(const corpus::Entry& e) {
    Workspace w{e.tower, e.model, {}};
    for (const auto& [name, c] : e.cycles) w.cycles.push_back({name, e.tower.top_level(), c});
    return w;
}

Workspace load_graph(const std::string& arg) {
    if (!std::filesystem::exists(arg)) return workspace_from_entry(corpus::lookup(arg));
    auto doc = parse_graph_document(read_file(arg));
    if (!doc.graph->is_valid())
        throw PreconditionError("graph '" + doc.graph->name() + "' is not valid: " +
                                doc.graph->report().failures.front());
    Workspace w{minimal_tower(doc.graph), std::nullopt, {}};
    const auto top = w.tower.top_level();
    for (auto& c : doc.cycles) w.cycles.push_back({c.name, top, c.cycle});
    if (doc.model) {
        std::optional<Cycle> cohom;
        if (doc.model->cohom_cycle) cohom = named(doc.cycles, *doc.model->cohom_cycle);
        w.model = build_model(w.tower, top, *doc.model, cohom);
    } else {
        w.model = default_model(w.tower.base());
    }
    return w;
}

Workspace load_tower(const std::string& path) {
    auto script = parse_tower_script(read_file(path));
    Workspace w{script.tower, std::nullopt, std::move(script.cycles)};
    if (script.model) {
        const auto& t = w.tower;
        w.model = SingularityModel::make(t.base(), script.model->pg, script.model->gorenstein,
                                         script.base_cohom);
    } else {
        w.model = default_model(w.tower.base());
    }
    return w;
}

GraphDocument entry_document(const corpus::Entry& e) {
    auto g = std::make_shared<const DualGraph>(e.tower.top()->renamed(e.name));
    GraphDocument doc{g, {}, std::nullopt};
    for (const auto& [name, c] : e.cycles) doc.cycles.push_back({name, 0, Cycle(g, c.coeffs())});
    ModelSpec m{e.model.pg(), e.model.gorenstein(), std::nullopt};
    if (!e.model.is_rational()) {
        const auto c = transport_cohom(e.tower, e.model.cohom_base()).at(e.tower.top_level());
        doc.cycles.push_back({"C", 0, Cycle(g, c.coeffs())});
        m.cohom_cycle = "C";
    }
    doc.model = m;
    return doc;
}

}  // namespace surfcore::io

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "surfcore/corpus.hpp"
#include "surfcore/errors.hpp"
#include "surfcore/io.hpp"
#include "surfcore/lattice.hpp"

using namespace surfcore;
using namespace surfcore::testing;

namespace {

std::string error_of(const std::string& text) {
    try {
        io::parse_graph_document(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(GraphDocument, GenusConvertedToKappa) {
    const auto doc = io::parse_graph_document(std::string(R"({
        "format": 1, "name": "ex244min",
        "vertices": [{"id": "E0", "self_int": -2, "genus": 1}],
        "cycles": {"m": {"E0": 1}},
        "model": {"pg": 1, "gorenstein": true, "cohom_cycle": "m"}})"));
    EXPECT_EQ(doc.graph->vertex(0).kappa, 2);
    ASSERT_TRUE(doc.model);
    EXPECT_EQ(doc.model->pg, 1);
    EXPECT_EQ(*doc.model->cohom_cycle, "m");
}

TEST(GraphDocument, SchemaErrorsNameThePath) {
    EXPECT_EQ(error_of(R"({"vertices": [{"id": "E", "kappa": 0}]})"),
              "$.vertices[0].self_int: missing required field");
    EXPECT_EQ(error_of(R"({"vertices": [{"id": "E", "self_int": -2}]})"),
              "$.vertices[0]: exactly one of 'genus' and 'kappa' is required");
    EXPECT_EQ(error_of(R"({"vertices": [{"id": "E", "self_int": "x", "kappa": 0}]})"),
              "$.vertices[0].self_int: malformed integer 'x'");
    EXPECT_EQ(error_of(R"({"vertices": [{"id": "E", "self_int": -2, "kappa": 0}],
                           "edges": [{"a": "E"}]})"),
              "$.edges[0].b: missing required field");
    EXPECT_EQ(error_of(R"({"vertices": [{"id": "E", "self_int": -2, "kappa": 0}],
                           "cycles": {"Z": {"F": 1}}})"),
              "$.cycles.Z.F: unknown vertex");
    EXPECT_EQ(error_of(R"({"vertices": [], "colour": 1})"), "$.colour: unknown field");
    EXPECT_EQ(error_of(R"({"format": 2, "vertices": []})"), "$.format: unsupported format version");
    EXPECT_EQ(error_of(R"({"vertices": [{"id": "E", "self_int": -2, "kappa": 0}],
                           "model": {"pg": 0, "cohom_cycle": "C"}})"),
              "$.model.cohom_cycle: no cycle named 'C'");
    EXPECT_NE(error_of("{"), "");
}

TEST(GraphDocument, CorpusRoundTripIsByteIdentical) {
    for (const auto& name : corpus::names()) {
        const auto text = io::emit(io::graph_document_json(io::entry_document(corpus::lookup(name))));
        const auto again = io::emit(io::graph_document_json(io::parse_graph_document(text)));
        EXPECT_EQ(text, again) << name;
    }
}

TEST(GraphDocument, BigIntegersAsStrings) {
    EXPECT_EQ(io::integer_json(Integer("123456789012345678901234567890")).dump(),
              "\"123456789012345678901234567890\"");
    EXPECT_EQ(io::integer_json(Integer(-4)).dump(), "-4");
    EXPECT_EQ(io::rational_json(Rational(2, 5)).dump(), "\"2/5\"");
}

TEST(CycleSpec, Parsing) {
    const auto g = corpus::lookup("A1b").tower.top();
    EXPECT_EQ(format_cycle(io::parse_cycle_spec(g, "E:1,C1:2")), "E:1,C1:2");
    EXPECT_EQ(format_cycle(io::parse_cycle_spec(g, "C1:2")), "C1:2");
    EXPECT_TRUE(io::parse_cycle_spec(g, "0").is_zero());
    EXPECT_THROW(io::parse_cycle_spec(g, "X:1"), InputError);
    EXPECT_THROW(io::parse_cycle_spec(g, "E:1,E:2"), InputError);
    EXPECT_THROW(io::parse_cycle_spec(g, "E:1/2"), InputError);
    EXPECT_THROW(io::parse_cycle_spec(g, "Z"), InputError);
    const std::vector<io::NamedCycle> named{{"Z", 0, cyc(g, {1, 2})}};
    EXPECT_EQ(format_cycle(io::parse_cycle_spec(g, "Z", named)), "E:1,C1:2");
}

TEST(Json, CycleOutputIsSparseInVertexOrder) {
    const auto g = corpus::lookup("A1chain").tower.top();
    EXPECT_EQ(io::cycle_json(cyc(g, {0, 1, 2})).dump(), R"({"C1":1,"C2":2})");
    EXPECT_EQ(io::cycle_json(Cycle(g)).dump(), "{}");
}

TEST(TowerScript, ReplaysSteps) {
    const auto s = io::parse_tower_script(std::string(R"({
        "format": 1,
        "base": {"name": "A2", "vertices": [{"id": "E1", "self_int": -2, "genus": 0},
                                             {"id": "E2", "self_int": -2, "genus": 0}],
                 "edges": [{"a": "E1", "b": "E2"}]},
        "steps": [{"op": "blowup_edge", "a": "E1", "b": "E2", "new": "C"},
                  {"op": "blowup_free", "vertex": "C", "new": "D"}],
        "cycles": {"Z": {"level": 2, "coeffs": {"E1": 1, "E2": 1, "C": 2, "D": 2}}}})"));
    EXPECT_EQ(s.tower.size(), 3u);
    ASSERT_EQ(s.cycles.size(), 1u);
    EXPECT_EQ(s.cycles[0].level, 2u);
    EXPECT_TRUE(is_antinef(s.cycles[0].cycle));
}

TEST(TowerScript, ContractExtendsBelow) {
    const auto s = io::parse_tower_script(std::string(R"({
        "base": "A1chain",
        "steps": [{"op": "blowup_free", "vertex": "C2", "new": "C3"}]})"));
    EXPECT_EQ(s.tower.size(), 4u);
    const auto c = io::parse_tower_script(std::string(R"({
        "base": {"vertices": [{"id": "E", "self_int": -3, "kappa": 1},
                              {"id": "C1", "self_int": -1, "kappa": -1}],
                 "edges": [{"a": "E", "b": "C1"}],
                 "cycles": {"Z": {"E": 1, "C1": 2}}},
        "steps": [{"op": "contract", "vertex": "C1"}]})"));
    EXPECT_EQ(c.tower.size(), 2u);
    EXPECT_EQ(c.tower.base()->size(), 1u);
    ASSERT_EQ(c.cycles.size(), 1u);
    EXPECT_EQ(c.cycles[0].level, 1u);
}

TEST(TowerScript, Errors) {
    try {
        io::parse_tower_script(std::string(R"({"base": "A2", "steps": [{"op": "twist"}]})"));
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(std::string(e.what()), "$.steps[0].op: unknown operation 'twist'");
    }
    try {
        io::parse_tower_script(std::string(R"({"base": "A2", "steps": [{"op": "contract", "vertex": "E1"}]})"));
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("$.steps[0]: ", 0), 0u);
    }
    EXPECT_THROW(io::parse_tower_script(std::string(R"({"base": "A2", "cycles": {"Z": {"level": 3, "coeffs": {}}}})")),
                 InputError);
}

TEST(TowerScript, EmitRoundTrip) {
    for (const auto& name : {"ex244blown", "A1chain", "cone(2,2,1)"}) {
        const auto e = corpus::lookup(name);
        const auto w = io::workspace_from_entry(e);
        io::TowerScript s{e.tower, w.cycles, io::ModelSpec{e.model.pg(), e.model.gorenstein(), {}},
                          e.model.cohom_base()};
        const auto text = io::emit(io::tower_script_json(s));
        const auto again = io::emit(io::tower_script_json(io::parse_tower_script(text)));
        EXPECT_EQ(text, again) << name;
    }
}

TEST(Workspace, GraphFileGetsMinimalTowerAndModel) {
    const auto path = temp_file("surfcore_a1b.json",
        io::emit(io::graph_document_json(io::entry_document(corpus::lookup("A1b")))));
    const auto w = io::load_graph(path);
    EXPECT_EQ(w.tower.size(), 2u);
    ASSERT_TRUE(w.model);
    EXPECT_TRUE(w.model->is_rational());
    EXPECT_EQ(format_cycle(w.cycle("Z")), "E:1,C1:2");
    std::remove(path.c_str());
}

TEST(Workspace, NonRationalModelFromDocument) {
    const auto path = temp_file("surfcore_ex244blown.json",
        io::emit(io::graph_document_json(io::entry_document(corpus::lookup("ex244blown")))));
    const auto w = io::load_graph(path);
    ASSERT_TRUE(w.model);
    EXPECT_EQ(w.model->pg(), 1);
    EXPECT_EQ(format_cycle(w.model->cohom_base()), "E0:1");
    std::remove(path.c_str());
}

TEST(Workspace, MissingModelForNonRational) {
    const auto path = temp_file("surfcore_bare.json",
        R"({"vertices": [{"id": "E0", "self_int": -2, "genus": 1}]})");
    const auto w = io::load_graph(path);
    EXPECT_FALSE(w.model);
    EXPECT_THROW(w.require_model(), PreconditionError);
    std::remove(path.c_str());
}

TEST(Workspace, InconsistentCohomologicalCycle) {
    const auto path = temp_file("surfcore_badc.json", R"({
        "vertices": [{"id": "E0", "self_int": -3, "kappa": 3}, {"id": "P", "self_int": -1, "kappa": -1}],
        "edges": [{"a": "E0", "b": "P"}],
        "cycles": {"C": {"E0": 1, "P": 1}},
        "model": {"pg": 1, "gorenstein": true, "cohom_cycle": "C"}})");
    EXPECT_THROW(io::load_graph(path), InputError);
    std::remove(path.c_str());
}

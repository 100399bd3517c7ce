#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcore/birational.hpp"
#include "surfcore/corpus.hpp"
#include "surfcore/cycle.hpp"
#include "surfcore/graph.hpp"
#include "surfcore/ideal.hpp"

// JSON documents, format version 1. Schema errors are InputError with a
// message that starts with the JSON path of the offending value.
namespace surfcore::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormat = 1;

struct ModelSpec {
    Integer pg = 0;
    bool gorenstein = false;
    std::optional<std::string> cohom_cycle;  // name in the document's cycles
};

struct NamedCycle {
    std::string name;
    std::size_t level = 0;
    Cycle cycle;
};

struct GraphDocument {
    GraphPtr graph;
    std::vector<NamedCycle> cycles;  // all on level 0 = graph
    std::optional<ModelSpec> model;
};

struct TowerScript {
    Tower tower;
    std::vector<NamedCycle> cycles;
    /// Model data relative to the base (level 0).
    std::optional<ModelSpec> model;
    std::optional<Cycle> base_cohom;
};

GraphDocument parse_graph_document(const Json& doc);
GraphDocument parse_graph_document(const std::string& text);
Json graph_document_json(const GraphDocument& doc);
std::string emit(const Json& j);

TowerScript parse_tower_script(const Json& doc);
TowerScript parse_tower_script(const std::string& text);
Json tower_script_json(const TowerScript& script);

std::string read_file(const std::string& path);

/// Integers as JSON numbers when they fit in 64 bits, as strings otherwise.
Json integer_json(const Integer& v);
/// Rationals always as "p/q" (or "p") strings.
Json rational_json(const Rational& v);
/// Sparse {id: coeff} in vertex order.
Json cycle_json(const Cycle& c);
Json qcycle_json(const QCycle& c);
Cycle cycle_from_json(const GraphPtr& g, const Json& j, const std::string& path);

/// "E0:2,E1:3" (missing vertices are 0), "0" for the zero cycle, or the name of
/// one of `named`.
Cycle parse_cycle_spec(const GraphPtr& g, const std::string& spec,
                       const std::vector<NamedCycle>& named = {});

/// Everything a command needs: a tower whose top is the working graph, the
/// model on its base when one is known, and named cycles.
struct Workspace {
    Tower tower;
    std::optional<SingularityModel> model;
    std::vector<NamedCycle> cycles;

    const GraphPtr& graph() const { return tower.top(); }
    /// Throws PreconditionError when no model is known.
    const SingularityModel& require_model() const;
    /// Cycle spec resolved on `level` (default: top).
    Cycle cycle(const std::string& spec, std::optional<std::size_t> level = std::nullopt) const;
};

/// `arg` is a path to a graph document or a corpus name. A graph document's
/// graph is contracted to its minimal resolution to form the tower.
Workspace load_graph(const std::string& arg);
Workspace load_tower(const std::string& path);
Workspace workspace_from_entry(const corpus::Entry& e);

/// Document for a corpus entry: the top graph, its cycles and the model, with
/// the cohomological cycle on the top graph named "C" when nonzero.
GraphDocument entry_document(const corpus::Entry& e);

}  // namespace surfcore::io

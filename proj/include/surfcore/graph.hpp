#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace surfcore {

/// One exceptional curve: its self-intersection and canonical degree K.E.
struct Vertex {
    std::string id;
    std::int64_t self_int = -2;
    std::int64_t kappa = 0;

    /// p_a(E) = (E^2 + K.E)/2 + 1
    std::int64_t genus() const { return (self_int + kappa) / 2 + 1; }
    bool operator==(const Vertex&) const = default;
};

struct Edge {
    std::string a;
    std::string b;
    std::int64_t mult = 1;
};

/// kappa from genus by adjunction.
inline std::int64_t kappa_from_genus(std::int64_t genus, std::int64_t self_int) {
    return 2 * genus - 2 - self_int;
}

struct ValidationReport {
    bool symmetric = true;
    bool connected = true;
    bool negative_definite = true;
    bool adjunction_ok = true;
    std::vector<std::string> failures;

    bool valid() const { return symmetric && connected && negative_definite && adjunction_ok; }
};

/// Weighted dual graph of a resolution. Immutable once built.
///
/// The constructor rejects structural nonsense (duplicate ids, unknown edge
/// endpoints, self-loops, multiplicities < 1) with InputError. Mathematical
/// validity (negative definiteness, connectivity, adjunction parity) is
/// computed once and exposed through report(); an invalid graph can still be
/// built so that it can be diagnosed.
class DualGraph {
public:
    DualGraph(std::string name, std::vector<Vertex> vertices, const std::vector<Edge>& edges);

    const std::string& name() const { return name_; }
    std::size_t size() const { return vertices_.size(); }
    std::span<const Vertex> vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::string& id(std::size_t i) const { return vertices_.at(i).id; }

    std::optional<std::size_t> find(std::string_view id) const;
    /// Throws InputError for an unknown id.
    std::size_t index_of(std::string_view id) const;

    /// Intersection number E_i.E_j (self-intersection on the diagonal).
    std::int64_t intersection(std::size_t i, std::size_t j) const {
        return i == j ? vertices_[i].self_int : adjacency_[i * size() + j];
    }
    std::vector<std::size_t> neighbors(std::size_t i) const;

    /// Edges with i < j in vertex order, mult > 0.
    std::vector<Edge> edges() const;

    /// Rational (-1)-curve: self-intersection -1 and K.E = -1.
    bool is_exceptional_curve(std::size_t i) const {
        return vertices_[i].self_int == -1 && vertices_[i].kappa == -1;
    }

    const ValidationReport& report() const { return report_; }
    bool is_valid() const { return report_.valid(); }

    /// Same ids with the same weights and intersections; ignores the name and
    /// the vertex order.
    bool same_structure(const DualGraph& other) const;
    /// Same structure and same vertex order, so cycles can be shared verbatim.
    bool same_layout(const DualGraph& other) const;

    DualGraph renamed(std::string name) const;

private:
    std::string name_;
    std::vector<Vertex> vertices_;
    std::vector<std::int64_t> adjacency_;
    std::unordered_map<std::string, std::size_t> index_;
    ValidationReport report_;
};

using GraphPtr = std::shared_ptr<const DualGraph>;

inline GraphPtr make_graph(std::string name, std::vector<Vertex> vertices,
                           const std::vector<Edge>& edges) {
    return std::make_shared<const DualGraph>(std::move(name), std::move(vertices), edges);
}

/// Exhaustive check of the graph invariants; never throws.
ValidationReport validate_graph(const DualGraph& g);

}  // namespace surfcore

#include "surfcore/graph.hpp"

#include <algorithm>

#include "surfcore/errors.hpp"
#include "surfcore/linalg.hpp"

namespace surfcore {

DualGraph::DualGraph(std::string name, std::vector<Vertex> vertices, const std::vector<Edge>& edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n == 0) throw InputError("graph '" + name_ + "' has no vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices_[i].id.empty()) throw InputError("graph '" + name_ + "': empty vertex id");
        if (!index_.emplace(vertices_[i].id, i).second)
            throw InputError("graph '" + name_ + "': duplicate vertex id '" + vertices_[i].id + "'");
    }
    adjacency_.assign(n * n, 0);
    for (const auto& e : edges) {
        const auto a = find(e.a);
        const auto b = find(e.b);
        if (!a || !b)
            throw InputError("graph '" + name_ + "': edge references unknown vertex '" +
                             (a ? e.b : e.a) + "'");
        if (*a == *b) throw InputError("graph '" + name_ + "': self-loop at '" + e.a + "'");
        if (e.mult < 1)
            throw InputError("graph '" + name_ + "': edge " + e.a + "-" + e.b +
                             " has multiplicity < 1");
        adjacency_[*a * n + *b] += e.mult;
        adjacency_[*b * n + *a] += e.mult;
    }
    report_ = validate_graph(*this);
}

std::optional<std::size_t> DualGraph::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t DualGraph::index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw InputError("graph '" + name_ + "' has no vertex '" + std::string(id) + "'");
}

std::vector<std::size_t> DualGraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (j != i && adjacency_[i * size() + j] != 0) out.push_back(j);
    return out;
}

std::vector<Edge> DualGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (auto m = adjacency_[i * size() + j]; m != 0) out.push_back({id(i), id(j), m});
    return out;
}

bool DualGraph::same_structure(const DualGraph& other) const {
    if (size() != other.size()) return false;
    std::vector<std::size_t> map(size());
    for (std::size_t i = 0; i < size(); ++i) {
        const auto j = other.find(id(i));
        if (!j || other.vertex(*j) != vertex(i)) return false;
        map[i] = *j;
    }
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (intersection(i, j) != other.intersection(map[i], map[j])) return false;
    return true;
}

bool DualGraph::same_layout(const DualGraph& other) const {
    return this == &other || (vertices_ == other.vertices_ && adjacency_ == other.adjacency_);
}

DualGraph DualGraph::renamed(std::string name) const {
    DualGraph copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

ValidationReport validate_graph(const DualGraph& g) {
    ValidationReport r;
    const std::size_t n = g.size();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.intersection(i, j) != g.intersection(j, i)) {
                r.symmetric = false;
                r.failures.push_back("intersection matrix not symmetric at " + g.id(i) + "," +
                                     g.id(j));
            }

    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) {
        r.connected = false;
        for (std::size_t i = 0; i < n; ++i)
            if (!seen[i]) r.failures.push_back("vertex " + g.id(i) + " not connected to " + g.id(0));
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = g.vertex(i);
        const auto s = v.self_int + v.kappa;
        if (s % 2 != 0 || s < -2) {
            r.adjunction_ok = false;
            r.failures.push_back("vertex " + v.id + ": self_int + kappa = " + std::to_string(s) +
                                 " must be even and >= -2");
        }
        if (v.self_int > -1) {
            r.negative_definite = false;
            r.failures.push_back("vertex " + v.id + ": self_int " + std::to_string(v.self_int) +
                                 " must be <= -1");
        }
    }

    // -M positive definite iff all leading principal minors are positive.
    linalg::IntMatrix neg(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) neg(i, j) = -g.intersection(i, j);
    const auto minors = linalg::leading_principal_minors(neg);
    for (std::size_t k = 0; k < minors.size(); ++k)
        if (minors[k] <= 0) {
            r.negative_definite = false;
            r.failures.push_back("leading principal minor of order " + std::to_string(k + 1) +
                                 " of -M is " + minors[k].get_str() + " (not positive)");
            break;
        }
    return r;
}

}  // namespace surfcore

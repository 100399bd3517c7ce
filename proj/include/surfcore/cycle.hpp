#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfcore/errors.hpp"
#include "surfcore/exact.hpp"
#include "surfcore/graph.hpp"

namespace surfcore {

/// Coefficient vector on the vertices of one graph. Integer coefficients give
/// a Cycle, rational ones a QCycle. Coefficients are indexed like the graph's
/// vertices; absent ids in from_map() mean zero.
template <class T>
class BasicCycle {
public:
    explicit BasicCycle(GraphPtr graph) : graph_(std::move(graph)), coeffs_(graph_->size()) {}

    BasicCycle(GraphPtr graph, std::vector<T> coeffs)
        : graph_(std::move(graph)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != graph_->size())
            throw InputError("cycle has " + std::to_string(coeffs_.size()) +
                             " coefficients but graph '" + graph_->name() + "' has " +
                             std::to_string(graph_->size()) + " vertices");
    }

    static BasicCycle from_map(GraphPtr graph, const std::map<std::string, T>& values) {
        BasicCycle c(std::move(graph));
        for (const auto& [id, v] : values) c.coeffs_[c.graph_->index_of(id)] = v;
        return c;
    }

    static BasicCycle unit(GraphPtr graph, std::size_t i) {
        BasicCycle c(std::move(graph));
        c.coeffs_.at(i) = 1;
        return c;
    }

    const GraphPtr& graph() const { return graph_; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    const T& operator[](std::size_t i) const { return coeffs_[i]; }
    T& operator[](std::size_t i) { return coeffs_[i]; }
    const T& at(const std::string& id) const { return coeffs_[graph_->index_of(id)]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_effective() const {
        for (const auto& c : coeffs_)
            if (c < 0) return false;
        return true;
    }
    /// Effective and nonzero.
    bool is_positive() const { return is_effective() && !is_zero(); }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) s.push_back(i);
        return s;
    }

    T max_coeff() const {
        T m = coeffs_.empty() ? T(0) : coeffs_[0];
        for (const auto& c : coeffs_)
            if (c > m) m = c;
        return m;
    }

    BasicCycle& operator+=(const BasicCycle& o) {
        check_same_graph(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    BasicCycle& operator-=(const BasicCycle& o) {
        check_same_graph(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    BasicCycle& operator*=(const T& k) {
        for (auto& c : coeffs_) c *= k;
        return *this;
    }

    friend BasicCycle operator+(BasicCycle a, const BasicCycle& b) { return a += b; }
    friend BasicCycle operator-(BasicCycle a, const BasicCycle& b) { return a -= b; }
    friend BasicCycle operator*(const T& k, BasicCycle a) { return a *= k; }
    friend BasicCycle operator-(BasicCycle a) { return a *= T(-1); }

    /// Coefficient-wise partial order (A >= B iff A - B is effective).
    friend bool operator>=(const BasicCycle& a, const BasicCycle& b) {
        a.check_same_graph(b);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (a.coeffs_[i] < b.coeffs_[i]) return false;
        return true;
    }
    friend bool operator<=(const BasicCycle& a, const BasicCycle& b) { return b >= a; }

    friend bool operator==(const BasicCycle& a, const BasicCycle& b) {
        return a.graph_->same_layout(*b.graph_) && a.coeffs_ == b.coeffs_;
    }

    void check_same_graph(const BasicCycle& o) const {
        if (!graph_->same_layout(*o.graph_))
            throw InputError("graph mismatch: cycle on '" + graph_->name() + "' vs cycle on '" +
                             o.graph_->name() + "'");
    }

    /// Same coefficients on another graph with the same ids (any vertex order).
    BasicCycle rebased(const GraphPtr& target) const {
        if (!graph_->same_structure(*target))
            throw InputError("cannot move a cycle from '" + graph_->name() + "' to '" +
                             target->name() + "': different graphs");
        BasicCycle c(target);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c.coeffs_[target->index_of(graph_->id(i))] = coeffs_[i];
        return c;
    }

private:
    GraphPtr graph_;
    std::vector<T> coeffs_;
};

using Cycle = BasicCycle<Integer>;
using QCycle = BasicCycle<Rational>;

inline QCycle to_rational(const Cycle& c) {
    std::vector<Rational> q(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) q[i] = Rational(c[i]);
    return QCycle(c.graph(), std::move(q));
}

/// "E0:2,E1:3" style rendering of the nonzero coefficients, in vertex order.
template <class T>
std::string format_cycle(const BasicCycle<T>& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += ",";
        out += c.graph()->id(i) + ":" + to_string(c[i]);
    }
    return out.empty() ? "0" : out;
}

}  // namespace surfcore

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "surfcore/cycle.hpp"
#include "surfcore/exact.hpp"
#include "surfcore/graph.hpp"

namespace surfcore {

// Intersection pairing W^T M V. Both cycles must live on the same graph.
Integer pair(const Cycle& w, const Cycle& v);
Rational pair(const QCycle& w, const QCycle& v);
Rational pair(const QCycle& w, const Cycle& v);

/// W.E_i
Integer pair_with_vertex(const Cycle& w, std::size_t i);

/// K.W = sum n_i kappa_i
Integer k_dot(const Cycle& w);

/// The rational cycle Z_K with Z_K.E_i = -kappa_i for every vertex.
QCycle canonical_cycle(const GraphPtr& g);
bool is_numerically_gorenstein(const GraphPtr& g);

/// (Z^2 + K.Z)/2 + 1
Rational arithmetic_genus(const Cycle& z);

bool is_antinef(const Cycle& z);

struct ClosureStep {
    std::string vertex;
    Integer coeff;       // coefficient after the increment
    Integer violation;   // Z.E_i that triggered it (> 0)
};
using ClosureTrace = std::vector<ClosureStep>;

/// Least anti-nef cycle >= d (Laufer's algorithm). Increments the first
/// vertex, in vertex order, with Z.E_i > 0 until none remains.
Cycle antinef_closure(const Cycle& d, ClosureTrace* trace = nullptr);

/// Minimal nonzero anti-nef cycle, as the closure of E_start.
Cycle fundamental_cycle(const GraphPtr& g, std::size_t start = 0, ClosureTrace* trace = nullptr);

/// Artin's criterion p_a(Z_f) = 0.
bool is_rational(const GraphPtr& g);

/// e(I_Z) = -Z^2 for anti-nef Z > 0.
Integer multiplicity(const Cycle& z);

/// l(A/I_Z) = -(Z^2 + K.Z)/2 + pg - h1.
Integer colength(const Cycle& z, const Integer& pg, const Integer& h1);

/// epsilon(Z, Z') = pg - h1(Z) - h1(Z') + h1(Z + Z'); rejects results outside [0, pg].
Integer epsilon(const Integer& pg, const Integer& h1_z, const Integer& h1_zp,
                const Integer& h1_sum);

/// -D^2 + K.D == 0, i.e. every connected component of supp D blows down to a
/// smooth point.
bool contracts_to_smooth(const Cycle& d);

}  // namespace surfcore

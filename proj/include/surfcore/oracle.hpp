#pragma once

#include <cstddef>
#include <optional>

#include "surfcore/cycle.hpp"
#include "surfcore/graph.hpp"

// Exhaustive verifiers for small instances. They read only the raw
// intersection matrix and canonical degrees and share no code with the
// lattice or ideal modules.
namespace surfcore::oracle {

struct SearchBound {
    long max_coeff = 6;
    std::size_t max_vertices = 12;
};

/// max_coeff = 2 max(Z) + 2
SearchBound default_bound(const Cycle& z);

struct MaxYResult {
    /// Coefficient-wise maximum of the admissible Y; empty when the admissible
    /// set has no maximum.
    std::optional<Cycle> y;
    std::size_t admissible = 0;
    std::size_t searched = 0;
};

/// All 0 <= Y <= Z with Y = 0, or -Y^2 + K.Y = 0 and Z - Y anti-nef with
/// (Z - Y).E = 0 on supp C. Throws PreconditionError when Z exceeds the bound.
MaxYResult enumerate_max_y(const Cycle& z, const Cycle& c, const SearchBound& bound);

/// Least element of the nonzero anti-nef cycles with coefficients in
/// [0, max_coeff]. Throws PreconditionError when there is none.
Cycle fundamental_cycle_bruteforce(const GraphPtr& g, const SearchBound& bound);

/// Least anti-nef cycle Z with d <= Z <= max_coeff.
Cycle antinef_closure_bruteforce(const Cycle& d, const SearchBound& bound);

/// W^2 < 0 for every nonzero W with |w_i| <= max_coeff.
bool negdef_bruteforce(const DualGraph& g, const SearchBound& bound);

}  // namespace surfcore::oracle

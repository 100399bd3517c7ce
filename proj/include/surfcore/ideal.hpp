#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "surfcore/birational.hpp"
#include "surfcore/cycle.hpp"
#include "surfcore/exact.hpp"
#include "surfcore/graph.hpp"

namespace surfcore {

/// A normal surface singularity seen through its minimal resolution graph plus
/// the analytic data the graph does not determine (p_g, the cohomological
/// cycle). Validated on construction.
class SingularityModel {
public:
    /// Rational singularity: pg = 0, C = 0. Throws if the graph is not rational.
    static SingularityModel rational(GraphPtr base);

    /// General model. When `cohom` is empty it defaults to 0 for rational
    /// graphs and to the canonical cycle for Gorenstein ones; otherwise it is
    /// required.
    static SingularityModel make(GraphPtr base, Integer pg, bool gorenstein,
                                 std::optional<Cycle> cohom = std::nullopt);

    const GraphPtr& base() const { return base_; }
    bool is_rational() const { return rational_; }
    const Integer& pg() const { return pg_; }
    bool gorenstein() const { return gorenstein_; }
    const Cycle& cohom_base() const { return cohom_; }

private:
    SingularityModel(GraphPtr base, bool rational, Integer pg, bool gorenstein, Cycle cohom)
        : base_(std::move(base)), rational_(rational), pg_(std::move(pg)),
          gorenstein_(gorenstein), cohom_(std::move(cohom)) {}

    GraphPtr base_;
    bool rational_;
    Integer pg_;
    bool gorenstein_;
    Cycle cohom_;
};

/// Integrally closed m-primary ideal I_Z, Z an anti-nef cycle on a level of a
/// tower over the model's minimal resolution.
struct IdealRep {
    SingularityModel model;
    Tower tower;
    std::size_t level = 0;
    Cycle z;
    std::optional<Integer> h1;  // h^1(O_X(-Z)) when known
    Cycle cohom;                // cohomological cycle on the ideal's level

    const GraphPtr& graph() const { return tower.level(level); }
};

/// Validates Z (anti-nef, nonzero, on the tower level) and records h1: 0 on
/// rational models, pg for p_g-numeric cycles unless `h1` says otherwise.
IdealRep represent(const SingularityModel& model, const Tower& tower, std::size_t level,
                   const Cycle& z, std::optional<Integer> h1 = std::nullopt);

/// Z.E = 0 for every curve E in the support of the cohomological cycle.
bool is_pg_numeric(const IdealRep& ideal);

/// I1 * I2 = I_{Z1 + Z2} on a common level; one factor must be p_g-numeric.
IdealRep product(const IdealRep& a, const IdealRep& b);

/// Contraction sequence X = X_1 -> ... -> X_{n+1} of (-1)-curves avoiding the
/// cohomological cycle, continued by the remaining (-1)-curves down to the
/// minimal resolution.
struct ContractionSequence {
    Tower tower;                          // top = the ideal's graph, base = minimal
    CohomTrack cohom;
    std::size_t stop_level = 0;           // level of X_{n+1} in `tower`
    std::vector<std::string> contracted;  // E_1, ..., E_n in contraction order
};

ContractionSequence contraction_sequence(const IdealRep& ideal);

struct CoreReport {
    Cycle y;
    Cycle colon_cycle;  // Z - Y, represents Q:I
    Cycle core_cycle;   // 2Z - Y, represents core(I)
    std::vector<std::string> contracted;
    std::vector<Integer> b;
    Integer iterations_to_good = 0;
    bool good = false;
    Integer colength_ideal = 0;
    Integer colength_colon = 0;
    Integer colength_core = 0;
};

CoreReport colon_and_core(const IdealRep& ideal);

/// I_{Z - Y} on the same level as `ideal`.
IdealRep colon_ideal(const IdealRep& ideal);

/// Minimal representation criterion: every remaining (-1)-curve meets C.
bool is_good(const IdealRep& ideal);

/// Gorenstein test e(I) == 2 l(A/I).
bool good_gorenstein_crosscheck(const IdealRep& ideal);

/// Minimal good ideal containing I: the push-forward of Z to X_{n+1}.
IdealRep good_closure(const IdealRep& ideal);

/// Both cycles pulled back to the lowest level shared by the two towers.
struct CommonLevel {
    Cycle a;
    Cycle b;                  // moved onto a's graph
    std::size_t level_a = 0;  // level of `ta` holding both
};
CommonLevel common_level(const Tower& ta, std::size_t la, const Cycle& za, const Tower& tb,
                         std::size_t lb, const Cycle& zb);

/// inner ⊆ outer, i.e. Z_inner >= Z_outer on a common level.
bool contained_in(const IdealRep& inner, const IdealRep& outer);

/// For p_g-numeric smaller ⊆ larger: Q:I and core containments.
bool core_monotone_check(const IdealRep& larger, const IdealRep& smaller);

/// l(I^2/QI) = epsilon(Z, Z).
Integer stability_defect(const IdealRep& ideal, const Integer& h1_z, const Integer& h1_2z);

struct ConeStats {
    Integer colength;            // l(A/I)
    Integer expected_colength;   // e + g - 1
    Integer mu;                  // e(m) + 1
    Integer expected_mu;         // e + 1
    Integer mult_gap;            // e(I) - e(m)
    Integer cohom_dot;           // -C_Y.M
    Integer expected_mult_gap;   // (a + 1) e
    bool good = false;
    bool colength_ok = false;
    bool mu_ok = false;
    bool mult_gap_ok = false;
    bool all_ok() const { return colength_ok && mu_ok && mult_gap_ok && good; }
};

struct ConeModel {
    SingularityModel model;
    IdealRep ideal;   // the p_g-ideal associated with a general element of m
    ConeStats stats;
};

/// Graded cone over a genus-g curve with a degree-e divisor D, a D ~ K_C.
/// pg defaults to g (any value >= 1 works; it cancels for p_g-ideals).
ConeModel cone_model(long e, long g, long a, std::optional<Integer> pg = std::nullopt);

}  // namespace surfcore

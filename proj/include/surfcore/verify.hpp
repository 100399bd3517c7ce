#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surfcore/birational.hpp"
#include "surfcore/cycle.hpp"
#include "surfcore/ideal.hpp"

// Acceptance checks shared by the test binary and `surfcore corpus verify`.
namespace surfcore::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// A p_g-numeric anti-nef cycle on the top of a random tower over a small
/// corpus singularity.
struct Instance {
    std::string label;
    SingularityModel model;
    Tower tower;
    Cycle z;

    IdealRep ideal() const;
};

/// Bases: A1-A5, D4, D5, HJ(n,q) with at most 5 curves, ex244min. Towers of
/// depth <= 3 with random free and satellite centres; coefficients of Z <= 6
/// and at most `max_boxes` cycles 0 <= Y <= Z.
std::vector<Instance> random_instances(std::size_t count, std::uint64_t seed,
                                       std::size_t max_boxes = 200000);

/// (I, Z2) with Z2 = Z + W >= Z, W another p_g-numeric anti-nef cycle.
std::vector<std::pair<Instance, Cycle>> random_nested_pairs(std::size_t count, std::uint64_t seed);

/// Number of colon steps until the ideal is good, and the good ideal reached.
struct ColonIteration {
    std::size_t steps = 0;
    IdealRep last;
};
ColonIteration iterate_colon(const IdealRep& ideal, std::size_t limit = 64);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

CriterionResult criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// "PASS  3  title  (detail)"
std::string format_result(const CriterionResult& r);

}  // namespace surfcore::verify

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surfcore/birational.hpp"
#include "surfcore/cycle.hpp"
#include "surfcore/ideal.hpp"

namespace surfcore::corpus {

/// A named singularity together with a tower over its minimal resolution and
/// some named cycles on the top level.
struct Entry {
    std::string name;
    std::string description;
    SingularityModel model;
    Tower tower;
    std::vector<std::pair<std::string, Cycle>> cycles;

    const Cycle& cycle(const std::string& name) const;
};

/// Named graphs: A1..A9, D4..D8, E6..E8, HJ(n,q), ex244min, ex244blown, A1b,
/// A1chain, cone(e,g,a). Throws InputError for unknown names or bad parameters.
Entry lookup(const std::string& name);

/// Fixed names in listing order (parametric families shown once with an example).
std::vector<std::string> names();

/// Chain of self-intersections -b_1, ..., -b_r with n/q = b_1 - 1/(b_2 - ...).
std::vector<long> hirzebruch_jung(long n, long q);

GraphPtr a_graph(int n);
GraphPtr d_graph(int n);
GraphPtr e_graph(int n);
GraphPtr hj_graph(long n, long q);

}  // namespace surfcore::corpus

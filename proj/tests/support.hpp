#pragma once

#include <map>
#include <string>
#include <vector>

#include "surfcore/cycle.hpp"
#include "surfcore/graph.hpp"

namespace surfcore::testing {

// Chain v1 - v2 - ... with the given self-intersections and canonical degrees.
inline GraphPtr chain(const std::vector<std::string>& ids, const std::vector<long>& selfs,
                      const std::vector<long>& kappas) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        vs.push_back({ids[i], selfs[i], kappas[i]});
        if (i > 0) es.push_back({ids[i - 1], ids[i], 1});
    }
    return make_graph("chain", std::move(vs), es);
}

inline GraphPtr single(long self, long kappa, const std::string& id = "E") {
    return make_graph("single", {{id, self, kappa}}, {});
}

inline Cycle cyc(const GraphPtr& g, const std::vector<long>& c) {
    std::vector<Integer> v(c.begin(), c.end());
    return Cycle(g, std::move(v));
}

inline std::vector<long> coeffs(const Cycle& c) {
    std::vector<long> out;
    for (const auto& x : c.coeffs()) out.push_back(x.get_si());
    return out;
}

// ex244blown built by hand: E0 (-6, 6) with four (-1)-curves attached.
inline GraphPtr ex244_blown_by_hand() {
    std::vector<Vertex> vs{{"E0", -6, 6}};
    std::vector<Edge> es;
    for (int i = 1; i <= 4; ++i) {
        vs.push_back({"E" + std::to_string(i), -1, -1});
        es.push_back({"E0", "E" + std::to_string(i), 1});
    }
    return make_graph("ex244blown", std::move(vs), es);
}

// D4 with the central curve first.
inline GraphPtr d4_central_first() {
    return make_graph("D4", {{"C", -2, 0}, {"L1", -2, 0}, {"L2", -2, 0}, {"L3", -2, 0}},
                      {{"C", "L1", 1}, {"C", "L2", 1}, {"C", "L3", 1}});
}

}  // namespace surfcore::testing

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "surfcore/birational.hpp"
#include "surfcore/corpus.hpp"
#include "surfcore/ideal.hpp"
#include "surfcore/lattice.hpp"
#include "surfcore/oracle.hpp"
#include "surfcore/verify.hpp"

using namespace surfcore;
using namespace surfcore::testing;

namespace {

constexpr std::uint64_t kSeed = 7177;

const std::vector<verify::Instance>& instances() {
    static const auto v = verify::random_instances(120, kSeed);
    return v;
}

Cycle random_cycle(const GraphPtr& g, std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<Integer> c(g->size());
    for (auto& x : c) x = d(rng);
    return Cycle(g, std::move(c));
}

std::vector<GraphPtr> small_graphs() {
    std::vector<GraphPtr> out;
    for (const auto& name : {"A1", "A3", "A5", "D4", "D5", "HJ(7,3)", "HJ(11,4)", "HJ(12,5)", "ex244min"})
        out.push_back(corpus::lookup(name).tower.top());
    out.push_back(chain({"E", "C1", "C2"}, {-3, -2, -1}, {1, 0, -1}));
    out.push_back(corpus::lookup("ex244blown").tower.top());
    return out;
}

}  // namespace

TEST(LatticeProperties, PairingSymmetricAndNegativeDefinite) {
    std::mt19937_64 rng(kSeed);
    for (const auto& g : small_graphs()) {
        for (int k = 0; k < 40; ++k) {
            const auto w = random_cycle(g, rng, -4, 4);
            const auto v = random_cycle(g, rng, -4, 4);
            EXPECT_EQ(pair(w, v), pair(v, w));
            if (!w.is_zero()) EXPECT_LT(pair(w, w), 0);
        }
    }
}

TEST(LatticeProperties, CanonicalResidualVanishes) {
    for (const auto& g : small_graphs()) {
        const auto zk = canonical_cycle(g);
        for (std::size_t i = 0; i < g->size(); ++i)
            EXPECT_EQ(pair(zk, to_rational(Cycle::unit(g, i))) + g->vertex(i).kappa, 0);
    }
}

TEST(LatticeProperties, ArithmeticGenusIntegral) {
    std::mt19937_64 rng(kSeed + 1);
    for (const auto& g : small_graphs())
        for (int k = 0; k < 40; ++k)
            EXPECT_EQ(arithmetic_genus(random_cycle(g, rng, -5, 5)).get_den(), 1);
}

TEST(LatticeProperties, ClosureMinimalAgainstOracle) {
    std::mt19937_64 rng(kSeed + 2);
    oracle::SearchBound b;
    for (const auto& g : small_graphs()) {
        if (g->size() > 5) continue;
        for (int k = 0; k < 15; ++k) {
            const auto d = random_cycle(g, rng, 0, 2);
            if (d.is_zero()) continue;
            const auto z = antinef_closure(d);
            EXPECT_TRUE(is_antinef(z));
            EXPECT_TRUE(z >= d);
            EXPECT_EQ(antinef_closure(z), z);
            if (z.max_coeff() <= b.max_coeff) EXPECT_EQ(oracle::antinef_closure_bruteforce(d, b), z);
        }
    }
}

TEST(LatticeProperties, FundamentalCycleStartIndependent) {
    for (const auto& g : small_graphs()) {
        const auto zf = fundamental_cycle(g);
        for (std::size_t s = 1; s < g->size(); ++s) EXPECT_EQ(fundamental_cycle(g, s), zf);
    }
}

TEST(TowerProperties, EveryLevelValid) {
    for (const auto& inst : instances()) {
        EXPECT_NO_THROW(inst.tower.check()) << inst.label;
        for (std::size_t k = 0; k < inst.tower.size(); ++k)
            EXPECT_TRUE(validate_graph(*inst.tower.level(k)).valid()) << inst.label;
    }
}

TEST(TowerProperties, ProjectionFormula) {
    std::mt19937_64 rng(kSeed + 3);
    for (const auto& inst : instances()) {
        const auto& t = inst.tower;
        const auto top = t.top_level();
        const auto w = random_cycle(t.base(), rng, -3, 3);
        const auto v = random_cycle(t.base(), rng, -3, 3);
        const auto pw = pullback(t, 0, top, w);
        EXPECT_EQ(pair(pw, pullback(t, 0, top, v)), pair(w, v)) << inst.label;
        EXPECT_EQ(pushforward(t, top, 0, pw), w) << inst.label;
        EXPECT_EQ(arithmetic_genus(pw), arithmetic_genus(w)) << inst.label;
        for (std::size_t i = 0; i < t.top()->size(); ++i)
            if (!t.base()->find(t.top()->vertex(i).id)) EXPECT_EQ(pair_with_vertex(pw, i), 0) << inst.label;
        const auto k = relative_canonical(t, top, 0);
        EXPECT_EQ(pair(k, pw), 0) << inst.label;
        if (!k.is_zero()) EXPECT_TRUE(contracts_to_smooth(k)) << inst.label;
    }
}

TEST(TowerProperties, PullbackPreservesAntinef) {
    for (const auto& inst : instances()) {
        const auto zf = fundamental_cycle(inst.tower.base());
        EXPECT_TRUE(is_antinef(pullback(inst.tower, 0, inst.tower.top_level(), zf))) << inst.label;
    }
}

TEST(TowerProperties, BlowupThenContractIsIdentity) {
    for (const auto& g : small_graphs()) {
        const auto up = blowup(g, BlowupCenter{FreePoint{g->vertex(0).id}, "P"});
        const auto down = contract(up.graph, "P");
        EXPECT_TRUE(down.graph->same_layout(*g));
    }
}

TEST(IdealProperties, CoreStructure) {
    for (const auto& inst : instances()) {
        const auto ideal = inst.ideal();
        const auto r = colon_and_core(ideal);
        EXPECT_EQ(r.core_cycle, r.colon_cycle + ideal.z) << inst.label;
        EXPECT_TRUE(r.y.is_effective()) << inst.label;
        if (!r.y.is_zero()) EXPECT_TRUE(contracts_to_smooth(r.y)) << inst.label;
        EXPECT_TRUE(is_antinef(r.colon_cycle)) << inst.label;
        const bool good = is_good(ideal);
        EXPECT_EQ(good, r.y.is_zero()) << inst.label;
        EXPECT_EQ(good, r.core_cycle == Integer(2) * ideal.z) << inst.label;
        if (ideal.model.gorenstein()) EXPECT_EQ(good, good_gorenstein_crosscheck(ideal)) << inst.label;
    }
}

TEST(IdealProperties, ColonIterationStabilizes) {
    for (const auto& inst : instances()) {
        const auto ideal = inst.ideal();
        const auto r = colon_and_core(ideal);
        const auto it = verify::iterate_colon(ideal);
        EXPECT_EQ(Integer(it.steps), r.iterations_to_good) << inst.label;
        EXPECT_TRUE(is_good(it.last)) << inst.label;
        EXPECT_TRUE(is_pg_numeric(it.last)) << inst.label;
    }
}

TEST(IdealProperties, GoodIdealsMultiply) {
    std::size_t tested = 0;
    for (const auto& [inst, z2] : verify::random_nested_pairs(60, kSeed)) {
        const auto a = inst.ideal();
        const auto b = represent(inst.model, inst.tower, inst.tower.top_level(), z2);
        if (!is_good(a) || !is_good(b)) continue;
        ++tested;
        const auto p = product(a, b);
        const auto sum = colon_and_core(a).core_cycle + colon_and_core(b).core_cycle;
        const auto cl = common_level(p.tower, p.level, colon_and_core(p).core_cycle, inst.tower,
                                     inst.tower.top_level(), sum);
        EXPECT_EQ(cl.a, cl.b) << inst.label;
    }
    EXPECT_GT(tested, 10u);
}

TEST(IdealProperties, MonotoneOnNestedPairs) {
    for (const auto& [inst, z2] : verify::random_nested_pairs(60, kSeed + 1)) {
        const auto larger = inst.ideal();
        const auto smaller = represent(inst.model, inst.tower, inst.tower.top_level(), z2);
        EXPECT_TRUE(contained_in(smaller, larger)) << inst.label;
        EXPECT_TRUE(core_monotone_check(larger, smaller)) << inst.label;
    }
}

TEST(IdealProperties, EpsilonRange) {
    for (const auto& inst : instances()) {
        const auto pg = inst.model.pg();
        EXPECT_EQ(stability_defect(inst.ideal(), pg, pg), 0);
        EXPECT_THROW(epsilon(pg, 0, 0, pg + 1), PreconditionError);
    }
}

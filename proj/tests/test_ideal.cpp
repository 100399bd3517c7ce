#include <gtest/gtest.h>

#include "support.hpp"
#include "surfcore/corpus.hpp"
#include "surfcore/errors.hpp"
#include "surfcore/ideal.hpp"
#include "surfcore/lattice.hpp"
#include "surfcore/verify.hpp"

using namespace surfcore;
using namespace surfcore::testing;

namespace {

IdealRep top_ideal(const corpus::Entry& e, const std::string& cycle) {
    return represent(e.model, e.tower, e.tower.top_level(), e.cycle(cycle));
}

IdealRep top_ideal(const corpus::Entry& e, const std::vector<long>& z) {
    return represent(e.model, e.tower, e.tower.top_level(), cyc(e.tower.top(), z));
}

}  // namespace

TEST(Model, Construction) {
    const auto a1 = SingularityModel::rational(corpus::a_graph(1));
    EXPECT_TRUE(a1.is_rational());
    EXPECT_EQ(a1.pg(), 0);
    EXPECT_TRUE(a1.cohom_base().is_zero());

    const auto ex = SingularityModel::make(single(-2, 2, "E0"), 1, true);
    EXPECT_FALSE(ex.is_rational());
    EXPECT_EQ(format_cycle(ex.cohom_base()), "E0:1");
}

TEST(Model, Rejections) {
    const auto e = single(-2, 2, "E0");
    EXPECT_THROW(SingularityModel::rational(e), PreconditionError);
    EXPECT_THROW(SingularityModel::make(e, 0, true), PreconditionError);
    EXPECT_THROW(SingularityModel::make(e, 1, false), PreconditionError);  // C required
    EXPECT_THROW(SingularityModel::make(e, 1, true, cyc(e, {2})), PreconditionError);
    EXPECT_THROW(SingularityModel::make(single(-3, 1), 0, true), PreconditionError);
    EXPECT_THROW(SingularityModel::rational(corpus::lookup("A1b").tower.top()), PreconditionError);
    EXPECT_THROW(SingularityModel::rational(chain({"a", "b"}, {-1, -1}, {-1, -1})), PreconditionError);
}

TEST(Represent, Examples) {
    const auto a1 = corpus::lookup("A1");
    const auto i = represent(a1.model, a1.tower, 0, a1.cycle("Zf"));
    ASSERT_TRUE(i.h1);
    EXPECT_EQ(*i.h1, 0);

    const auto ex = top_ideal(corpus::lookup("ex244blown"), "Z");
    EXPECT_TRUE(is_pg_numeric(ex));
    EXPECT_EQ(*ex.h1, 1);

    const auto m = corpus::lookup("ex244min");
    const auto m2 = represent(m.model, m.tower, 0, m.cycle("m2"));
    EXPECT_FALSE(m2.h1);
    EXPECT_FALSE(is_pg_numeric(m2));
    EXPECT_EQ(*represent(m.model, m.tower, 0, m.cycle("m2"), Integer(0)).h1, 0);
}

TEST(Represent, Rejections) {
    const auto a2 = corpus::lookup("A2");
    EXPECT_THROW(represent(a2.model, a2.tower, 0, cyc(a2.tower.top(), {1, 0})), PreconditionError);
    EXPECT_THROW(represent(a2.model, a2.tower, 0, Cycle(a2.tower.top())), PreconditionError);
    EXPECT_THROW(represent(a2.model, a2.tower, 0, a2.cycle("Zf"), Integer(1)), PreconditionError);
    const auto a1 = corpus::lookup("A1");
    EXPECT_THROW(represent(a1.model, a2.tower, 0, a2.cycle("Zf")), InputError);
}

TEST(Product, AddsCycles) {
    const auto ex = corpus::lookup("ex244blown");
    const auto i = top_ideal(ex, "Z");
    const auto sq = product(i, i);
    EXPECT_EQ(sq.z, Integer(2) * ex.cycle("Z"));
    EXPECT_TRUE(is_pg_numeric(sq));

    const auto a1b = corpus::lookup("A1b");
    const auto p = product(top_ideal(a1b, "Z"), top_ideal(a1b, "m"));
    EXPECT_EQ(format_cycle(p.z), "E:2,C1:3");
}

TEST(Product, AcrossLevels) {
    const auto a1b = corpus::lookup("A1b");
    const auto m = represent(a1b.model, a1b.tower, 0, Cycle::unit(a1b.tower.base(), 0));
    const auto p = product(m, top_ideal(a1b, "Z"));
    EXPECT_EQ(p.level, 1u);
    EXPECT_EQ(format_cycle(p.z), "E:2,C1:3");
}

TEST(Product, NeedsOnePgFactor) {
    const auto m = corpus::lookup("ex244min");
    const auto m2 = represent(m.model, m.tower, 0, m.cycle("m2"), Integer(0));
    EXPECT_THROW(product(m2, m2), PreconditionError);
}

TEST(ColonCore, A1b) {
    const auto r = colon_and_core(top_ideal(corpus::lookup("A1b"), "Z"));
    EXPECT_EQ(format_cycle(r.y), "C1:1");
    EXPECT_EQ(format_cycle(r.colon_cycle), "E:1,C1:1");
    EXPECT_EQ(format_cycle(r.core_cycle), "E:2,C1:3");
    EXPECT_EQ(r.colength_core, 5);
    EXPECT_EQ(r.colength_ideal, 2);
    EXPECT_EQ(r.colength_colon, 1);
    EXPECT_FALSE(r.good);
    EXPECT_EQ(r.iterations_to_good, 1);
}

TEST(ColonCore, Ex244IsGood) {
    const auto ex = corpus::lookup("ex244blown");
    const auto r = colon_and_core(top_ideal(ex, "Z"));
    EXPECT_TRUE(r.y.is_zero());
    EXPECT_TRUE(r.contracted.empty());
    EXPECT_EQ(r.core_cycle, Integer(2) * ex.cycle("Z"));
    EXPECT_TRUE(r.good);
}

TEST(ColonCore, MinimalRationalBase) {
    const auto d5 = corpus::lookup("D5");
    const auto r = colon_and_core(represent(d5.model, d5.tower, 0, d5.cycle("Zf")));
    EXPECT_TRUE(r.y.is_zero());
    EXPECT_EQ(r.core_cycle, Integer(2) * d5.cycle("Zf"));
    EXPECT_TRUE(r.good);
}

TEST(ColonCore, ChainModel) {
    const auto e = corpus::lookup("A1chain");
    const auto r = colon_and_core(top_ideal(e, "Z"));
    EXPECT_EQ(coeffs(r.y), (std::vector<long>{0, 1, 2}));
    EXPECT_EQ(coeffs(r.colon_cycle), (std::vector<long>{2, 3, 3}));
    EXPECT_EQ(coeffs(r.core_cycle), (std::vector<long>{4, 7, 8}));
    EXPECT_EQ(r.iterations_to_good, 2);
    ASSERT_EQ(r.b.size(), 2u);
    EXPECT_EQ(r.contracted, (std::vector<std::string>{"C2", "C1"}));
}

TEST(ColonCore, RequiresPgNumeric) {
    const auto m = corpus::lookup("ex244min");
    EXPECT_THROW(colon_and_core(represent(m.model, m.tower, 0, m.cycle("m2"), Integer(0))),
                 PreconditionError);
}

TEST(ColonCore, PullbackOfMaximalIdealIsGood) {
    const auto r = colon_and_core(top_ideal(corpus::lookup("A1b"), "m"));
    EXPECT_TRUE(r.y.is_zero());
    EXPECT_TRUE(r.good);
}

TEST(IsGood, Examples) {
    const auto a2 = corpus::lookup("A2");
    EXPECT_TRUE(is_good(represent(a2.model, a2.tower, 0, a2.cycle("Zf"))));
    EXPECT_FALSE(is_good(top_ideal(corpus::lookup("A1b"), "Z")));
    EXPECT_TRUE(is_good(top_ideal(corpus::lookup("ex244blown"), "Z")));
    EXPECT_TRUE(is_good(top_ideal(corpus::lookup("A1b"), "m")));
}

TEST(GorensteinCrosscheck, Examples) {
    EXPECT_TRUE(good_gorenstein_crosscheck(top_ideal(corpus::lookup("ex244blown"), "Z")));
    const auto a1 = corpus::lookup("A1");
    EXPECT_TRUE(good_gorenstein_crosscheck(represent(a1.model, a1.tower, 0, a1.cycle("Zf"))));
    const auto a1b = corpus::lookup("A1b");
    const auto gor = SingularityModel::make(a1b.tower.base(), 0, true);
    const auto i = represent(gor, a1b.tower, 1, a1b.cycle("Z"));
    EXPECT_EQ(multiplicity(i.z), 3);
    EXPECT_EQ(colength(i.z, 0, 0), 2);
    EXPECT_FALSE(good_gorenstein_crosscheck(i));
    EXPECT_THROW(good_gorenstein_crosscheck(top_ideal(corpus::lookup("HJ(5,2)"), "Zf")),
                 PreconditionError);
}

TEST(GoodClosure, Examples) {
    const auto c = good_closure(top_ideal(corpus::lookup("A1b"), "Z"));
    EXPECT_EQ(c.level, 0u);
    EXPECT_EQ(format_cycle(c.z), "E:1");

    const auto ex = corpus::lookup("ex244blown");
    const auto g = good_closure(top_ideal(ex, "Z"));
    EXPECT_EQ(g.z, ex.cycle("Z"));

    const auto chain = corpus::lookup("A1chain");
    const auto cl = good_closure(top_ideal(chain, "Z"));
    EXPECT_EQ(format_cycle(cl.z), "E:2");
    const auto it = verify::iterate_colon(top_ideal(chain, "Z"));
    EXPECT_EQ(it.steps, 2u);
    EXPECT_EQ(coeffs(it.last.z), (std::vector<long>{2, 2, 2}));
    EXPECT_EQ(coeffs(colon_ideal(top_ideal(chain, "Z")).z), (std::vector<long>{2, 3, 3}));
}

TEST(Includes, Examples) {
    const auto ex = corpus::lookup("ex244blown");
    const auto i = top_ideal(ex, "Z");
    EXPECT_TRUE(contained_in(i, i));
    EXPECT_TRUE(contained_in(product(i, i), i));
    EXPECT_FALSE(contained_in(i, product(i, i)));
    const auto a1b = corpus::lookup("A1b");
    EXPECT_TRUE(contained_in(top_ideal(a1b, "Z"), top_ideal(a1b, "m")));
    const auto m = represent(a1b.model, a1b.tower, 0, Cycle::unit(a1b.tower.base(), 0));
    EXPECT_TRUE(contained_in(top_ideal(a1b, "Z"), m));
}

TEST(CoreMonotone, Examples) {
    const auto chain = corpus::lookup("A1chain");
    const auto big = top_ideal(chain, "Zgood");
    const auto small = top_ideal(chain, "Z");
    EXPECT_TRUE(core_monotone_check(big, small));
    EXPECT_TRUE(core_monotone_check(small, small));
    EXPECT_THROW(core_monotone_check(small, big), PreconditionError);
    EXPECT_EQ(coeffs(colon_and_core(big).core_cycle), (std::vector<long>{4, 4, 4}));
}

TEST(StabilityDefect, Examples) {
    const auto m = corpus::lookup("ex244min");
    const auto m2 = represent(m.model, m.tower, 0, m.cycle("m2"), Integer(0));
    EXPECT_EQ(stability_defect(m2, 0, 0), 1);
    const auto a2 = corpus::lookup("A2");
    EXPECT_EQ(stability_defect(represent(a2.model, a2.tower, 0, a2.cycle("Zf")), 0, 0), 0);
    EXPECT_EQ(stability_defect(top_ideal(corpus::lookup("ex244blown"), "Z"), 1, 1), 0);
}

TEST(Cone, Stats) {
    struct Case {
        long e, g, a, l, mu, gap;
    };
    for (const auto& c : {Case{2, 2, 1, 3, 3, 4}, Case{3, 4, 2, 6, 4, 9}, Case{2, 1, 0, 2, 3, 2}}) {
        const auto m = cone_model(c.e, c.g, c.a);
        EXPECT_EQ(m.stats.colength, c.l);
        EXPECT_EQ(m.stats.mu, c.mu);
        EXPECT_EQ(m.stats.mult_gap, c.gap);
        EXPECT_TRUE(m.stats.all_ok());
        EXPECT_TRUE(is_pg_numeric(m.ideal));
    }
}

TEST(Cone, PgDoesNotMatter) {
    EXPECT_EQ(cone_model(2, 2, 1, Integer(5)).stats.colength, 3);
}

TEST(Cone, Rejections) {
    EXPECT_THROW(cone_model(2, 2, 0), PreconditionError);
    EXPECT_THROW(cone_model(0, 1, 0), PreconditionError);
    EXPECT_THROW(cone_model(1, 0, 0), PreconditionError);
}

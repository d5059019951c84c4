#include "oracles.hpp"

#include "fusionkit/catalog.hpp"
#include "fusionkit/foelner.hpp"
#include "fusionkit/spectral.hpp"
#include "fusionkit/window.hpp"

#include <gtest/gtest.h>

using namespace fusionkit;

namespace {

LabelSet interval(int lo, int hi) {
    LabelSet s;
    for (int k = lo; k <= hi; ++k) {
        s.insert(Label{k});
    }
    return s;
}

std::vector<Label> window_labels(const FusionRing& ring, const LabelSet& S, int radius) {
    return build_window(ring, S, radius, 1000000).labels();
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const FusionError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no FusionError raised";
    return ErrorKind::InvalidParam;
}

Integer sum_of_squares(int n) { return Integer(n) * (n + 1) * (2 * n + 1) / 6; }

}  // namespace

TEST(Boundary, IntegersIntervalHasFourPoints) {
    const FusionRing z = build_zd_ring(1);
    const LabelSet S{Label{1}, Label{-1}};
    for (int n : {0, 1, 5, 20}) {
        const BoundaryResult b = boundary(z, S, interval(-n, n));
        EXPECT_EQ(b.inner, (LabelSet{Label{-n}, Label{n}}));
        EXPECT_EQ(b.outer, (LabelSet{Label{-n - 1}, Label{n + 1}}));
        const auto brute = oracle::brute_boundary(z, window_labels(z, S, n + 40), S, interval(-n, n));
        EXPECT_EQ(b.inner, brute.inner);
        EXPECT_EQ(b.outer, brute.outer);
    }
}

TEST(Boundary, Su2IntervalMatchesExhaustiveScan) {
    const FusionRing su2 = build_su2_ring();
    const LabelSet S{Label{1}};
    const auto universe = window_labels(su2, S, 110);
    for (int N : {0, 3, 50, 100}) {
        const BoundaryResult b = boundary(su2, S, interval(0, N));
        EXPECT_EQ(b.all(), (LabelSet{Label{N}, Label{N + 1}}));
        const auto brute = oracle::brute_boundary(su2, universe, S, interval(0, N));
        EXPECT_EQ(b.inner, brute.inner);
        EXPECT_EQ(b.outer, brute.outer);
    }
}

TEST(Boundary, WholeFiniteRingHasNone) {
    const FusionRing z2 = build_cyclic_ring(2);
    const BoundaryResult b = boundary(z2, {Label{1}}, {Label{0}, Label{1}});
    EXPECT_TRUE(b.all().empty());
    EXPECT_EQ(b.weight(), Quantity(0));
}

TEST(Boundary, WeightsAreSubsetWeights) {
    const FusionRing ring = build_deformed_su2_ring(3);
    const LabelSet F{Label{0}, Label{2}, Label{5}};
    const BoundaryResult b = boundary(ring, {Label{1}, Label{2}}, F);
    EXPECT_EQ(b.weight_inner, subset_weight(ring, b.inner));
    EXPECT_EQ(b.weight_outer, subset_weight(ring, b.outer));
    EXPECT_EQ(b.weight_F, subset_weight(ring, F));
    for (const auto& a : b.inner) {
        EXPECT_TRUE(F.contains(a));
    }
    for (const auto& a : b.outer) {
        EXPECT_FALSE(F.contains(a));
    }
}

TEST(Boundary, EmptyInputsAreRejected) {
    const FusionRing su2 = build_su2_ring();
    EXPECT_EQ(kind_of([&] { boundary(su2, {}, {Label{0}}); }), ErrorKind::EmptySet);
    EXPECT_EQ(kind_of([&] { boundary(su2, {Label{1}}, {}); }), ErrorKind::EmptySet);
}

TEST(Fc3, Su2HundredInterval) {
    const FusionRing su2 = build_su2_ring();
    const FoelnerReport r = fc3_check(su2, {Label{1}}, interval(0, 100), 0.06);
    EXPECT_EQ(r.lhs, Quantity(20605));
    EXPECT_EQ(r.weight_F, Quantity::exact(Rational(sum_of_squares(101))));
    EXPECT_EQ(r.weight_F, Quantity(348551));
    EXPECT_NEAR(r.rhs.value(), 20913.06, 1e-9);
    EXPECT_TRUE(r.satisfied);
    EXPECT_NEAR(r.ratio, 20605.0 / 348551.0, 1e-15);
}

TEST(Fc3, IntegersRatioIsExact) {
    const FusionRing z = build_zd_ring(1);
    for (int n : {1, 10, 20, 57}) {
        const FoelnerReport r = fc3_check(z, {Label{1}, Label{-1}}, interval(-n, n), 0.5);
        EXPECT_EQ(r.lhs / r.weight_F, Quantity::exact(Rational(4, 2 * n + 1)));
        EXPECT_EQ(r.satisfied, Rational(4, 2 * n + 1) < Rational(1, 2));
    }
}

TEST(Fc3, DecimalEpsilonIsTakenAtFaceValue) {
    const FusionRing z = build_zd_ring(1);
    // 4/40 equals 1/10 exactly, so ε = 0.1 must not be met even though the double 0.1 exceeds 1/10
    EXPECT_FALSE(fc3_check(z, {Label{1}, Label{-1}}, interval(-19, 20), 0.1).satisfied);
}

TEST(Fc3, StrictInequalityAtTheThreshold) {
    const FusionRing z = build_zd_ring(1);
    // ratio 4/8 = 0.5 exactly for F = {-1..2}, S = {±1}: the strict inequality must fail
    const FoelnerReport r = fc3_check(z, {Label{1}, Label{-1}}, interval(-1, 2), 0.5);
    EXPECT_EQ(r.lhs, Quantity(4));
    EXPECT_FALSE(r.satisfied);
}

TEST(Fc3, DeformedIntervalsNeverPass) {
    const FusionRing ring = build_deformed_su2_ring(3);
    for (int N = 0; N <= 200; N += 10) {
        const FoelnerReport r = fc3_check(ring, {Label{1}}, interval(0, N), 1.0);
        EXPECT_FALSE(r.satisfied) << N;
        EXPECT_GT(r.ratio, 1.0);
    }
}

TEST(Fc3, RejectsBadEpsilon) {
    const FusionRing su2 = build_su2_ring();
    EXPECT_EQ(kind_of([&] { fc3_check(su2, {Label{1}}, interval(0, 3), 0.0); }), ErrorKind::InvalidParam);
    EXPECT_EQ(kind_of([&] { fc3_check(su2, {Label{1}}, interval(0, 3), -1.0); }), ErrorKind::InvalidParam);
}

TEST(Fc1, Su2LazyMeasure) {
    const FusionRing su2 = build_su2_ring();
    const ProbMeasure mu(su2, {{Label{0}, 0.5}, {Label{1}, 0.5}});
    const FoelnerReport r = fc1_check(su2, mu, interval(0, 100), 0.05);
    EXPECT_EQ(r.lhs, Quantity(348551 + 10404));
    EXPECT_NEAR(r.ratio, 358955.0 / 348551.0, 1e-12);
    EXPECT_TRUE(r.satisfied);
    ASSERT_TRUE(r.support_identity.has_value());
    EXPECT_TRUE(*r.support_identity);
}

TEST(Fc1, DeltaAtUnitKeepsF) {
    const FusionRing f2 = build_free_group_ring(2);
    const LabelSet F{f2.unit(), f2.parse("a"), f2.parse("ab")};
    const FoelnerReport r = fc1_check(f2, ProbMeasure::delta(f2, f2.unit()), F, 1e-9);
    EXPECT_EQ(r.lhs, r.weight_F);
    EXPECT_TRUE(r.satisfied);
}

TEST(Fc1, IntegersThreePointMeasure) {
    const FusionRing z = build_zd_ring(1);
    const ProbMeasure mu = ProbMeasure::uniform(z, {Label{0}, Label{1}, Label{-1}});
    const FoelnerReport r = fc1_check(z, mu, interval(-10, 10), 0.15);
    EXPECT_EQ(r.lhs / r.weight_F, Quantity::exact(Rational(23, 21)));
    EXPECT_TRUE(r.satisfied);
}

TEST(Fc1, HypothesesAreEnforced) {
    const FusionRing z = build_zd_ring(1);
    EXPECT_EQ(kind_of([&] { fc1_check(z, ProbMeasure::uniform(z, {Label{1}, Label{-1}}), interval(0, 3), 0.1); }),
              ErrorKind::MeasureMissingUnit);
    EXPECT_EQ(kind_of([&] {
                  fc1_check(z, ProbMeasure(z, {{Label{0}, 0.5}, {Label{1}, 0.5}}), interval(0, 3), 0.1);
              }),
              ErrorKind::NonSymmetricMeasure);
}

TEST(Fc2, Su2WorkedValue) {
    const FusionRing su2 = build_su2_ring();
    const LabelSet F = interval(0, 3);
    EXPECT_EQ(fc2_value(su2, Label{1}, F), Quantity(20));
    EXPECT_NEAR(fc2_value_direct(su2, Label{1}, F), 20.0, 1e-10);
    const FoelnerReport r = fc2_check(su2, {Label{1}}, F, 0.5);
    EXPECT_EQ(r.weight_F, Quantity(30));
    EXPECT_EQ(r.lhs, Quantity(20));
    EXPECT_FALSE(r.satisfied);
    EXPECT_TRUE(fc2_check(su2, {Label{1}}, F, 0.7).satisfied);
    ASSERT_EQ(r.per_generator.size(), 1u);
}

TEST(Fc2, UnitContributesNothing) {
    const FusionRing su2 = build_su2_ring();
    EXPECT_EQ(fc2_value(su2, su2.unit(), interval(2, 9)), Quantity(0));
    EXPECT_NEAR(fc2_value_direct(su2, su2.unit(), interval(2, 9)), 0.0, 1e-12);
}

TEST(Fc2, IntegersTwoPerGenerator) {
    const FusionRing z = build_zd_ring(1);
    const FoelnerReport r = fc2_check(z, {Label{1}, Label{-1}}, interval(-7, 7), 0.2);
    ASSERT_EQ(r.per_generator.size(), 2u);
    for (const auto& [xi, value] : r.per_generator) {
        EXPECT_EQ(value, Quantity(2));
    }
    EXPECT_TRUE(r.satisfied);  // 2 < 0.2 * 15
    EXPECT_FALSE(fc2_check(z, {Label{1}, Label{-1}}, interval(-7, 7), 2.0 / 15.0).satisfied);
}

TEST(TransitionKernel, Examples) {
    const FusionRing z = build_zd_ring(1);
    const ProbMeasure mu = uniform_generator_measure(z);
    EXPECT_DOUBLE_EQ(transition_kernel(z, mu, Label{0}, Label{1}), 0.5);
    EXPECT_DOUBLE_EQ(transition_kernel(z, mu, Label{0}, Label{0}), 0.0);

    const FusionRing su2 = build_su2_ring();
    const ProbMeasure d1 = ProbMeasure::delta(su2, Label{1});
    EXPECT_DOUBLE_EQ(transition_kernel(su2, d1, Label{1}, Label{0}), 0.25);
    EXPECT_EQ(transition_kernel_exact(su2, d1, Label{1}, Label{2}), Quantity::exact(Rational(3, 4)));
    double total = 0.0;
    for (int k = 0; k <= 10; ++k) {
        total += transition_kernel(su2, d1, Label{5}, Label{k});
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Dirichlet, Examples) {
    const FusionRing z = build_zd_ring(1);
    const ProbMeasure mu = uniform_generator_measure(z);
    EXPECT_NEAR(dirichlet_norm(z, mu, Function::indicator(z, {Label{0}}), 1), 1.0, 1e-12);

    const FusionRing su2 = build_su2_ring();
    const ProbMeasure d1 = ProbMeasure::delta(su2, Label{1});
    const Function chi = Function::indicator(su2, interval(0, 3));
    EXPECT_NEAR(dirichlet_norm(su2, d1, chi, 1), 10.0, 1e-10);
    EXPECT_NEAR(weighted_norm(chi, 1), 30.0, 1e-12);
    EXPECT_NEAR(nw_ratio(su2, d1, chi, 1), 1.0 / 3.0, 1e-12);

    const FusionRing z6 = build_cyclic_ring(6);
    const Function constant = Function::indicator(z6, {Label{0}, Label{1}, Label{2}, Label{3}, Label{4}, Label{5}});
    EXPECT_EQ(dirichlet_norm(z6, uniform_generator_measure(z6), constant, 1), 0.0);
    EXPECT_EQ(nw_ratio(z6, uniform_generator_measure(z6), constant, 2), 0.0);
}

TEST(Dirichlet, Errors) {
    const FusionRing su2 = build_su2_ring();
    const ProbMeasure d1 = ProbMeasure::delta(su2, Label{1});
    EXPECT_EQ(kind_of([&] { dirichlet_norm(su2, d1, Function::indicator(su2, {Label{0}}), 0); }),
              ErrorKind::InvalidParam);
    EXPECT_EQ(kind_of([&] { nw_ratio(su2, d1, Function(su2), 1); }), ErrorKind::ZeroFunction);
}

TEST(NwRatio, Su2IntervalsShrink) {
    const FusionRing su2 = build_su2_ring();
    const ProbMeasure d1 = ProbMeasure::delta(su2, Label{1});
    double previous = 1.0;
    for (int N = 3; N <= 200; N += 20) {
        const double ratio = nw_ratio(su2, d1, Function::indicator(su2, interval(0, N)), 1);
        EXPECT_LT(ratio, previous);
        previous = ratio;
    }
    EXPECT_LT(previous, 0.02);
}

TEST(Search, Su2BallsStopsAtTheFirstInterval) {
    const FusionRing su2 = build_su2_ring();
    const SearchResult result = foelner_search(su2, {Label{1}}, 0.1, SearchStrategy::Balls, 200);
    ASSERT_TRUE(result.found);
    // {0..59}: (60² + 61²) / Σ_{k=1}^{60} k² = 7321/73810 < 0.1, while {0..58} gives 7081/70210 > 0.1
    EXPECT_EQ(result.report.F, interval(0, 59));
    EXPECT_EQ(result.report.lhs / result.report.weight_F, Quantity::exact(Rational(7321, 73810)));
    ASSERT_EQ(result.report.curve.size(), 59u);
    EXPECT_EQ(result.report.curve[57].set_size, 59u);
    EXPECT_GT(result.report.curve[57].ratio, 0.1);
}

TEST(Search, IntegersBalls) {
    const FusionRing z = build_zd_ring(1);
    const SearchResult result = foelner_search(z, {Label{1}, Label{-1}}, 0.1, SearchStrategy::Balls, 200);
    ASSERT_TRUE(result.found);
    EXPECT_EQ(result.report.F, interval(-20, 20));
    EXPECT_NEAR(result.report.ratio, 4.0 / 41.0, 1e-15);
}

TEST(Search, GreedyFindsIntegerSets) {
    const FusionRing z = build_zd_ring(1);
    const SearchResult result = foelner_search(z, {Label{1}, Label{-1}}, 0.1, SearchStrategy::Greedy, 200);
    ASSERT_TRUE(result.found);
    EXPECT_LT(result.report.ratio, 0.1);
    EXPECT_EQ(result.report.F.size(), 41u);
    const SearchResult again = foelner_search(z, {Label{1}, Label{-1}}, 0.1, SearchStrategy::Greedy, 200);
    ASSERT_EQ(again.report.curve.size(), result.report.curve.size());
    for (std::size_t i = 0; i < again.report.curve.size(); ++i) {
        EXPECT_EQ(again.report.curve[i].ratio, result.report.curve[i].ratio);
    }
}

TEST(Search, DeformedExhaustsTheBudget) {
    const FusionRing ring = build_deformed_su2_ring(3);
    const SearchResult result = foelner_search(ring, {Label{1}}, 0.5, SearchStrategy::Balls, 500);
    EXPECT_FALSE(result.found);
    EXPECT_TRUE(result.budget_exhausted);
    EXPECT_GT(result.report.ratio, 1.0);
    // interval ratios approach q² − q⁻² = 3√5 with q² = (3+√5)/2
    EXPECT_NEAR(result.report.ratio, 3.0 * std::sqrt(5.0), 1e-6);
}

TEST(Search, FiniteRingFindsItself) {
    const FusionRing z6 = build_cyclic_ring(6);
    const SearchResult result = foelner_search(z6, {Label{1}}, 0.01, SearchStrategy::Balls, 100);
    ASSERT_TRUE(result.found);
    EXPECT_EQ(result.report.F.size(), 6u);
    EXPECT_EQ(result.report.lhs, Quantity(0));
}

TEST(Search, RejectsBadArguments) {
    const FusionRing su2 = build_su2_ring();
    EXPECT_EQ(kind_of([&] { foelner_search(su2, {Label{1}}, 0.0, SearchStrategy::Balls, 10); }),
              ErrorKind::InvalidParam);
    EXPECT_EQ(kind_of([&] { foelner_search(su2, {Label{1}}, 0.1, SearchStrategy::Balls, 0); }),
              ErrorKind::InvalidParam);
}

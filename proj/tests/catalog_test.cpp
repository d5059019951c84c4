#include "oracles.hpp"

#include "fusionkit/axioms.hpp"
#include "fusionkit/catalog.hpp"
#include "fusionkit/window.hpp"

#include <gtest/gtest.h>

using namespace fusionkit;

namespace {

TruncationWindow generator_window(const FusionRing& ring, int radius, std::size_t cap = 100000) {
    const auto gens = ring.generators();
    return build_window(ring, LabelSet(gens.begin(), gens.end()), radius, cap);
}

void expect_axioms(const FusionRing& ring, const TruncationWindow& window) {
    const AxiomReport report = verify_axioms(ring, window);
    for (const auto& check : report.checks) {
        EXPECT_TRUE(check.passed) << ring.description() << " " << check.name << ": " << check.witness;
    }
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

}  // namespace

TEST(GroupRing, IntegersAddLabels) {
    const FusionRing z = build_zd_ring(1);
    const ProductMap expected{{Label{2}, 1}};
    EXPECT_EQ(z.product(Label{3}, Label{-1}), expected);
    EXPECT_EQ(z.dim(Label{17}), Quantity(1));
    EXPECT_EQ(z.render(Label{-4}), "-4");
    EXPECT_EQ(z.parse("-4"), Label{-4});
}

TEST(GroupRing, LatticeLabelsAreVectors) {
    const FusionRing z2 = build_zd_ring(2);
    const ProductMap expected{{(Label{1, 1}), 1}};
    EXPECT_EQ(z2.product(Label{1, 0}, Label{0, 1}), expected);
    EXPECT_EQ(z2.conjugate(Label{2, -3}), (Label{-2, 3}));
    EXPECT_EQ(z2.parse(z2.render(Label{2, -3})), (Label{2, -3}));
}

TEST(GroupRing, FreeGroupWordsReduce) {
    const FusionRing f2 = build_free_group_ring(2);
    const ProductMap expected{{f2.parse("a"), 1}};
    EXPECT_EQ(f2.product(f2.parse("ab"), f2.parse("B")), expected);
    EXPECT_EQ(f2.parse("abBA"), f2.unit());
    EXPECT_EQ(f2.render(f2.conjugate(f2.parse("ab"))), "BA");
    EXPECT_EQ(f2.render(f2.unit()), "e");
}

TEST(GroupRing, CyclicOrderTwo) {
    const FusionRing z2 = build_cyclic_ring(2);
    EXPECT_EQ(z2.conjugate(Label{1}), Label{1});
    const ProductMap expected{{Label{0}, 1}};
    EXPECT_EQ(z2.product(Label{1}, Label{1}), expected);
}

TEST(GroupRing, FiniteTableMustBeAGroup) {
    // no inverse for 1
    EXPECT_EQ(kind_of([] { build_finite_group_ring({{0, 1}, {1, 1}}, {}); }), ErrorKind::InvalidTable);
    // a Latin square that is not associative
    const std::vector<std::vector<int>> quasigroup{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    EXPECT_EQ(kind_of([&] { build_finite_group_ring(quasigroup, {}); }), ErrorKind::InvalidTable);
    // S3 as a permutation table is fine
    const std::vector<std::vector<int>> s3{{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4},
                                           {3, 5, 4, 0, 2, 1}, {4, 3, 5, 1, 0, 2}, {5, 4, 3, 2, 1, 0}};
    const FusionRing ring = build_finite_group_ring(s3, {});
    expect_axioms(ring, window_from_labels(ring, *ring.rules().finite_basis()));
}

TEST(Su2, Examples) {
    const FusionRing su2 = build_su2_ring();
    const ProductMap expected{{Label{0}, 1}, {Label{2}, 1}, {Label{4}, 1}};
    EXPECT_EQ(su2.product(Label{2}, Label{2}), expected);
    Quantity total;
    for (const auto& [c, n] : su2.product(Label{1}, Label{1})) {
        total += Quantity::exact(Rational(n)) * su2.dim(c);
    }
    EXPECT_EQ(total, su2.dim(Label{1}) * su2.dim(Label{1}));
    for (int k = 0; k < 30; ++k) {
        const ProductMap unit{{Label{k}, 1}};
        EXPECT_EQ(su2.product(Label{0}, Label{k}), unit);
        EXPECT_EQ(su2.dim(Label{k}), Quantity(k + 1));
    }
}

TEST(DeformedSu2, DimensionsFollowTheRecursion) {
    for (int n : {3, 4, 7}) {
        const FusionRing ring = build_deformed_su2_ring(n);
        const auto expected = oracle::deformed_dims(n, 300);
        for (int k = 0; k < 300; ++k) {
            EXPECT_EQ(ring.dim(Label{k}), Quantity::exact(Rational(expected[k]))) << "n=" << n << " k=" << k;
        }
    }
    const FusionRing ring = build_deformed_su2_ring(3);
    EXPECT_EQ(ring.dim(Label{3}), Quantity(21));
}

TEST(DeformedSu2, ParameterTwoIsClassical) {
    const FusionRing ring = build_deformed_su2_ring(2);
    for (int k = 0; k < 50; ++k) {
        EXPECT_EQ(ring.dim(Label{k}), Quantity(k + 1));
    }
    EXPECT_EQ(kind_of([] { build_deformed_su2_ring(1); }), ErrorKind::InvalidParam);
}

TEST(DeformedSu2, SameFusionRulesAsSu2) {
    const FusionRing ring = build_deformed_su2_ring(3);
    for (int m = 0; m <= 12; ++m) {
        for (int n = 0; n <= 12; ++n) {
            ProductMap expected;
            for (const auto& [k, c] : oracle::su2_product(m, n)) {
                expected[Label{k}] = c;
            }
            EXPECT_EQ(ring.product(Label{m}, Label{n}), expected);
        }
    }
    EXPECT_EQ(ring.dim(Label{0}) + ring.dim(Label{2}), ring.dim(Label{1}) * ring.dim(Label{1}));
}

TEST(TensorProduct, ZTimesZBehavesAsZ2) {
    const FusionRing zz = tensor_product(build_zd_ring(1), build_zd_ring(1));
    const Label a = make_tensor_label(Label{1}, Label{0});
    const Label b = make_tensor_label(Label{0}, Label{1});
    const ProductMap expected{{make_tensor_label(Label{1}, Label{1}), 1}};
    EXPECT_EQ(zz.product(a, b), expected);
    EXPECT_EQ(zz.parse("(1,0)"), a);
    EXPECT_EQ(zz.render(b), "(0,1)");
}

TEST(TensorProduct, DimensionsMultiply) {
    const FusionRing ss = tensor_product(build_su2_ring(), build_su2_ring());
    EXPECT_EQ(ss.dim(make_tensor_label(Label{1}, Label{1})), Quantity(4));
    const auto [a, b] = split_tensor_label(make_tensor_label(Label{3}, Label{5}));
    EXPECT_EQ(a, Label{3});
    EXPECT_EQ(b, Label{5});
}

TEST(TensorProduct, CoefficientsAreProducts) {
    const FusionRing su2 = build_su2_ring();
    const FusionRing ss = tensor_product(su2, su2);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const ProductMap& got = ss.product(make_tensor_label(Label{a}, Label{b}), make_tensor_label(Label{b}, Label{a}));
            ProductMap expected;
            for (const auto& [x, n] : oracle::su2_product(a, b)) {
                for (const auto& [y, m] : oracle::su2_product(b, a)) {
                    expected[make_tensor_label(Label{x}, Label{y})] = n * m;
                }
            }
            EXPECT_EQ(got, expected);
        }
    }
}

TEST(TensorProduct, TrivialFactorIsTransparent) {
    const FusionRing su2 = build_su2_ring();
    const FusionRing st = tensor_product(su2, build_trivial_ring());
    const Label e = build_trivial_ring().unit();
    for (int m = 0; m < 8; ++m) {
        const Label lm = make_tensor_label(Label{m}, e);
        EXPECT_EQ(st.dim(lm), su2.dim(Label{m}));
        EXPECT_EQ(st.conjugate(lm), make_tensor_label(su2.conjugate(Label{m}), e));
        for (int n = 0; n < 8; ++n) {
            ProductMap mapped;
            for (const auto& [k, c] : su2.product(Label{m}, Label{n})) {
                mapped[make_tensor_label(k, e)] = c;
            }
            EXPECT_EQ(st.product(lm, make_tensor_label(Label{n}, e)), mapped);
        }
    }
}

TEST(CatalogAxioms, DefaultRadii) {
    const FusionRing su2 = build_su2_ring();
    expect_axioms(su2, generator_window(su2, 8));
    const FusionRing def3 = build_deformed_su2_ring(3);
    expect_axioms(def3, generator_window(def3, 8));
    const FusionRing z2 = build_zd_ring(2);
    expect_axioms(z2, generator_window(z2, 4));
    const FusionRing z6 = build_cyclic_ring(6);
    expect_axioms(z6, window_from_labels(z6, *z6.rules().finite_basis()));
    const FusionRing trivial = build_trivial_ring();
    expect_axioms(trivial, generator_window(trivial, 1));
    const FusionRing sz = tensor_product(su2, build_zd_ring(1));
    expect_axioms(sz, generator_window(sz, 6));
}

TEST(CatalogAxioms, FreeGroupBallRadiusFour) {
    const FusionRing f2 = build_free_group_ring(2);
    const TruncationWindow w = generator_window(f2, 4);
    EXPECT_EQ(w.size(), 1u + 4 + 12 + 36 + 108);
    expect_axioms(f2, w);
}

TEST(TableRing, ValidatesTheDocument) {
    TableSpec spec;
    spec.labels = {"e", "a|b"};
    spec.unit = "e";
    EXPECT_EQ(kind_of([&] { build_table_ring(spec); }), ErrorKind::InvalidTable);

    spec.labels = {"e", "g"};
    spec.conjugate = {{"e", "e"}};
    spec.dim = {{"e", Quantity(1)}, {"g", Quantity(1)}};
    EXPECT_EQ(kind_of([&] { build_table_ring(spec); }), ErrorKind::InvalidTable);
}

TEST(MeasureFromDecomposition, Examples) {
    const FusionRing su2 = build_su2_ring();
    const ProbMeasure fundamental = measure_from_decomposition(su2, {{Label{1}, 1}});
    EXPECT_EQ(fundamental.support(), LabelSet{Label{1}});
    EXPECT_DOUBLE_EQ(fundamental.weight(Label{1}), 1.0);

    const auto weights = decomposition_weights(su2, {{Label{0}, 1}, {Label{1}, 1}});
    EXPECT_EQ(weights.at(Label{0}), Quantity::exact(Rational(1, 3)));
    EXPECT_EQ(weights.at(Label{1}), Quantity::exact(Rational(2, 3)));

    const FusionRing f2 = build_free_group_ring(2);
    const ProbMeasure mu = measure_from_decomposition(f2, {{f2.parse("a"), 1}});
    EXPECT_TRUE(mu.symmetric());
    EXPECT_DOUBLE_EQ(mu.weight(f2.parse("a")), 0.5);
    EXPECT_DOUBLE_EQ(mu.weight(f2.parse("A")), 0.5);

    EXPECT_EQ(kind_of([&] { measure_from_decomposition(su2, {}); }), ErrorKind::InvalidParam);
    EXPECT_EQ(kind_of([&] { measure_from_decomposition(su2, {{Label{1}, 0}}); }), ErrorKind::InvalidParam);
}

TEST(MeasureFromDecomposition, SumsToOneExactly) {
    const FusionRing def = build_deformed_su2_ring(5);
    const auto weights = decomposition_weights(def, {{Label{1}, 2}, {Label{4}, 3}, {Label{7}, 1}});
    Quantity total;
    for (const auto& [label, w] : weights) {
        ASSERT_TRUE(w.is_exact());
        total += w;
    }
    EXPECT_EQ(total.rational(), Rational(1));
}

TEST(UniformGeneratorMeasure, CoversGeneratorsAndConjugates) {
    const FusionRing f2 = build_free_group_ring(2);
    const ProbMeasure mu = uniform_generator_measure(f2);
    EXPECT_EQ(mu.support().size(), 4u);
    EXPECT_TRUE(mu.symmetric());
    EXPECT_DOUBLE_EQ(mu.weight(f2.parse("B")), 0.25);
}

TEST(BuildRing, DispatchesOnKind) {
    RingSpec spec;
    spec.kind = RingKind::deformed_su2;
    spec.n = 3;
    EXPECT_EQ(build_ring(spec).dim(Label{2}), Quantity(8));
    spec.kind = RingKind::group_free;
    spec.rank = 3;
    EXPECT_EQ(build_ring(spec).generators().size(), 6u);
}

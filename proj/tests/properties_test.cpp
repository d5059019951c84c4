#include "property_suite.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <set>
#include <string>

namespace {

constexpr std::size_t kInstances = 1000;
constexpr std::uint64_t kSeed = 20240611;

class Identity : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Identity, HoldsOnRandomInstances) {
    const props::Property& p = props::properties()[GetParam()];
    const props::Tally t = props::run_property(p, kInstances, kSeed);
    EXPECT_EQ(t.instances, kInstances);
    EXPECT_GT(t.probes, 0u) << p.name;
    for (const auto& f : t.failures) {
        ADD_FAILURE() << p.name << ": " << f;
    }
}

std::string property_test_name(const ::testing::TestParamInfo<std::size_t>& info) {
    std::string name;
    for (char c : props::properties()[info.param].name) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            name += c;
        }
    }
    return name;
}

INSTANTIATE_TEST_SUITE_P(Catalog, Identity, ::testing::Range<std::size_t>(0, props::properties().size()),
                         property_test_name);

TEST(Generator, IsDeterministicAndCoversEveryRing) {
    props::InstanceGenerator a(7);
    props::InstanceGenerator b(7);
    std::set<std::string> rings;
    for (int i = 0; i < 40; ++i) {
        const props::Instance x = a.next();
        const props::Instance y = b.next();
        EXPECT_EQ(x.F, y.F);
        EXPECT_EQ(x.mu.weights(), y.mu.weights());
        EXPECT_TRUE(x.mu.symmetric());
        rings.insert(x.entry->name);
    }
    EXPECT_EQ(rings.size(), props::ring_pool().size());
}

TEST(Generator, ConditionalIdentitiesAreExercised) {
    props::InstanceGenerator gen(kSeed);
    std::size_t with_unit = 0;
    std::size_t fc3_holds = 0;
    std::size_t fc3_fails = 0;
    for (std::size_t i = 0; i < kInstances; ++i) {
        const props::Instance inst = gen.next();
        with_unit += inst.mu.contains_unit() ? 1 : 0;
        fusionkit::LabelSet S = inst.mu.support();
        S.insert(inst.ring().unit());
        (fusionkit::fc3_check(inst.ring(), S, inst.F, inst.epsilon).satisfied ? fc3_holds : fc3_fails) += 1;
    }
    EXPECT_GT(with_unit, kInstances / 2);
    EXPECT_GT(fc3_holds, kInstances / 10);
    EXPECT_GT(fc3_fails, kInstances / 10);
}

}  // namespace

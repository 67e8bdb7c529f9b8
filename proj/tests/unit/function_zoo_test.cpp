#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "entroplex/errors.hpp"
#include "entroplex/function_zoo.hpp"
#include "entroplex/set_function.hpp"
#include "../support/generators.hpp"

namespace entroplex {
namespace {

using testing::letters;

TEST(StepFunction, Examples)
{
    const VariableUniverse u({"X", "Y"});
    const ExactSetFunction s = step_function(u, u.set_of({"X"}));
    EXPECT_EQ(s(u.set_of({"X"})), Rational(1));
    EXPECT_EQ(s(u.set_of({"Y"})), Rational(0));
    EXPECT_EQ(s(u.set_of({"X", "Y"})), Rational(1));
    EXPECT_EQ(s(VarSet()), Rational(0));
    const ExactSetFunction full = step_function(u, u.full());
    for (VarSet::Bits b = 1; b < 4; ++b)
        EXPECT_EQ(full(VarSet(b)), Rational(1));
    EXPECT_THROW(step_function(u, VarSet()), DomainError);
}

TEST(BasicModular, Examples)
{
    const VariableUniverse u({"A", "B"});
    const ExactSetFunction a = basic_modular(u, "A");
    EXPECT_EQ(a(u.set_of({"A", "B"})), Rational(1));
    EXPECT_EQ(a(u.set_of({"B"})), Rational(0));
    EXPECT_EQ(a(VarSet()), Rational(0));
    EXPECT_EQ(a, step_function(u, u.set_of({"A"})));
    EXPECT_THROW(basic_modular(u, "C"), DomainError);
}

TEST(BasicModular, SumIsCardinality)
{
    const VariableUniverse u = letters(4);
    ExactSetFunction total = zero_function(u);
    for (int i = 0; i < 4; ++i)
        total += basic_modular(u, i);
    for (VarSet::Bits b = 0; b < 16; ++b)
        EXPECT_EQ(total(VarSet(b)), Rational(VarSet(b).size()));
    EXPECT_TRUE(is_modular(total));
}

TEST(Classifiers, Examples)
{
    const VariableUniverse u = letters(4);
    for (VarSet::Bits v = 1; v < 16; ++v)
        EXPECT_TRUE(is_polymatroid(step_function(u, VarSet(v))));
    for (int a = 0; a < 4; ++a)
        EXPECT_TRUE(is_modular(basic_modular(u, a)));
    EXPECT_FALSE(is_modular(step_function(u, u.set_of({"A", "B"}))));

    const VariableUniverse xyz({"X", "Y", "Z"});
    ExactSetFunction h = zero_function(xyz);
    h.set(xyz.full(), Rational(1));
    EXPECT_TRUE(is_monotone(h));
    EXPECT_FALSE(is_polymatroid(h));
    h.set(xyz.set_of({"X"}), Rational(2));
    EXPECT_FALSE(is_monotone(h));
}

// Pairwise submodularity over all (S, T), independent of the elemental shortcut.
bool pairwise_submodular(const ExactSetFunction& h)
{
    const VarSet::Bits size = VarSet::Bits{1} << h.universe().size();
    for (VarSet::Bits s = 0; s < size; ++s)
        for (VarSet::Bits t = 0; t < size; ++t)
            if (h(VarSet(s)) + h(VarSet(t)) < h(VarSet(s | t)) + h(VarSet(s & t)))
                return false;
    return true;
}

TEST(Classifiers, ElementalSubmodularityMatchesPairwise)
{
    testing::Rng rng(21);
    const VariableUniverse u = letters(3);
    for (int trial = 0; trial < 500; ++trial) {
        ExactSetFunction h(u);
        for (VarSet::Bits s = 1; s < 8; ++s)
            h.set(VarSet(s), Rational(rng.range(0, 2) + VarSet(s).size()));
        const bool mono = is_monotone(h);
        EXPECT_EQ(is_polymatroid(h), mono && pairwise_submodular(h));
    }
}

TEST(UpsetIndicator, GeneratesUpwardClosure)
{
    const VariableUniverse u = letters(3);
    const ExactSetFunction h = upset_indicator(u, {u.set_of({"A", "B"}), u.set_of({"C"})});
    for (VarSet::Bits b = 0; b < 8; ++b) {
        const VarSet s(b);
        const bool inside = u.set_of({"A", "B"}).subset_of(s) || s.contains(2);
        EXPECT_EQ(h(s), Rational(inside ? 1 : 0));
    }
    EXPECT_TRUE(is_monotone(h));
}

TEST(MinimalSets, DropsSupersets)
{
    const std::vector<VarSet> m = minimal_sets({VarSet(0b011), VarSet(0b001), VarSet(0b110), VarSet(0b111)});
    EXPECT_EQ(m, (std::vector<VarSet>{VarSet(0b001), VarSet(0b110)}));
}

TEST(MonotoneBooleanStream, CountsForSmallUniverses)
{
    EXPECT_EQ(MonotoneBooleanStream(letters(1)).size(), 2U);
    EXPECT_EQ(MonotoneBooleanStream(letters(2)).size(), 5U);
    EXPECT_THROW(MonotoneBooleanStream(letters(6)), DomainError);
}

// Brute force over every 0/1 assignment of the nonempty sets.
TEST(MonotoneBooleanStream, MatchesBruteForce)
{
    for (int n = 1; n <= 4; ++n) {
        const VariableUniverse u = letters(n);
        const VarSet::Bits sets = (VarSet::Bits{1} << n) - 1;
        std::set<std::vector<int>> expected;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets); ++mask) {
            ExactSetFunction h(u);
            std::vector<int> values;
            for (VarSet::Bits s = 1; s <= sets; ++s) {
                const int bit = static_cast<int>((mask >> (s - 1)) & 1U);
                h.set(VarSet(s), Rational(bit));
                values.push_back(bit);
            }
            if (is_monotone(h))
                expected.insert(values);
        }
        std::set<std::vector<int>> seen;
        auto stream = enumerate_monotone_boolean(u);
        while (auto h = stream.next()) {
            EXPECT_TRUE(is_monotone(*h));
            std::vector<int> values;
            for (VarSet::Bits s = 1; s <= sets; ++s)
                values.push_back((*h)(VarSet(s)).is_zero() ? 0 : 1);
            EXPECT_TRUE(seen.insert(values).second);
        }
        EXPECT_EQ(seen, expected) << "n = " << n;
    }
}

TEST(MonotoneBooleanStream, FiveVariables)
{
    EXPECT_EQ(MonotoneBooleanStream(letters(5)).size(), 7580U);
}

TEST(Entropic, XorVector)
{
    const VariableUniverse u({"A", "B", "C"});
    std::vector<JointDistribution::Row> rows;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            rows.push_back({{std::to_string(a), std::to_string(b), std::to_string(a ^ b)}, Rational(1, 4)});
    const EntropicVector h = entropic_from_distribution(JointDistribution(u, rows));
    for (VarSet::Bits s = 1; s < 8; ++s)
        EXPECT_NEAR(h(VarSet(s)), VarSet(s).size() == 1 ? 1.0 : 2.0, 1e-12);
    EXPECT_NEAR(evaluate(expand_measure(u, MultiMutualInfo{u.full()}), h), -1.0, 1e-12);
    EXPECT_TRUE(is_polymatroid(h, 1e-9));
}

TEST(Entropic, TwoTuplesGiveStepFunction)
{
    const VariableUniverse u = letters(3);
    for (VarSet::Bits v = 1; v < 8; ++v) {
        std::vector<std::string> t0{"0", "0", "0"};
        std::vector<std::string> t1 = t0;
        for (int i : VarSet(v).elements())
            t1[static_cast<std::size_t>(i)] = "1";
        const EntropicVector h = entropic_from_distribution(JointDistribution(u, {{t0, Rational(1, 2)}, {t1, Rational(1, 2)}}));
        const ExactSetFunction s = step_function(u, VarSet(v));
        for (VarSet::Bits w = 0; w < 8; ++w)
            EXPECT_NEAR(h(VarSet(w)), s(VarSet(w)).to_double(), 1e-12);
    }
}

TEST(Entropic, PointMassIsZero)
{
    const VariableUniverse u = letters(2);
    const EntropicVector h = entropic_from_distribution(JointDistribution(u, {{{"a", "b"}, Rational(1)}}));
    for (VarSet::Bits w = 0; w < 4; ++w)
        EXPECT_EQ(h(VarSet(w)), 0.0);
}

TEST(JointDistribution, Validation)
{
    const VariableUniverse u = letters(1);
    EXPECT_THROW(JointDistribution(u, {{{"a"}, Rational(1, 2)}}), DomainError);
    EXPECT_THROW(JointDistribution(u, {{{"a"}, Rational(1, 2)}, {{"a"}, Rational(1, 2)}}), DomainError);
    EXPECT_THROW(JointDistribution(u, {{{"a", "b"}, Rational(1)}}), DomainError);
    EXPECT_THROW(JointDistribution(u, {{{"a"}, Rational(3, 2)}, {{"b"}, Rational(-1, 2)}}), DomainError);
}

}  // namespace
}  // namespace entroplex

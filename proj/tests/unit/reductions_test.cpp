#include <gtest/gtest.h>

#include "entroplex/errors.hpp"
#include "entroplex/reductions.hpp"
#include "entroplex/validity.hpp"
#include "../support/generators.hpp"

namespace entroplex {
namespace {

using testing::Rng;

MonSat3Instance four_variable_instance(MonSat3Instance::Clause positive, MonSat3Instance::Clause negative)
{
    return {{"x", "y", "z", "w"}, {positive}, {negative}};
}

TEST(MonSat, Examples)
{
    const MonSat3Instance a = four_variable_instance({0, 1, 2}, {0, 1, 3});
    EXPECT_TRUE(sat_oracle(a));
    const Verdict va = check_step(from_3dmonsat(a));
    ASSERT_FALSE(va.valid);
    EXPECT_TRUE(satisfies(a, decode_assignment(a, std::get<StepWitness>(*va.witness).set)));

    const MonSat3Instance b = four_variable_instance({0, 1, 2}, {0, 1, 2});
    EXPECT_TRUE(sat_oracle(b));
    EXPECT_FALSE(check_step(from_3dmonsat(b)).valid);
}

TEST(MonSat, Validation)
{
    EXPECT_THROW(four_variable_instance({0, 0, 1}, {0, 1, 2}).validate(), DomainError);
    EXPECT_THROW(four_variable_instance({0, 1, 7}, {0, 1, 2}).validate(), DomainError);
    EXPECT_THROW((MonSat3Instance{{"x", "y", "z"}, {}, {}}).validate(), DomainError);
    EXPECT_THROW(from_3dmonsat(four_variable_instance({0, 0, 1}, {0, 1, 2})), DomainError);
}

TEST(MonSat, Satisfies)
{
    const MonSat3Instance a = four_variable_instance({0, 1, 2}, {0, 1, 3});
    EXPECT_TRUE(satisfies(a, {true, false, false, false}));
    EXPECT_FALSE(satisfies(a, {true, true, false, true}));
    EXPECT_FALSE(satisfies(a, {false, false, false, false}));
}

TEST(MonSat, RoundTrip)
{
    Rng rng(81);
    int sat = 0;
    int unsat = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.range(5, 7);
        const MonSat3Instance inst = trial % 2 == 0 ? testing::random_monsat(rng, n, rng.range(1, 8), rng.range(1, 8))
                                                    : testing::dense_monsat(rng, n, rng.range(0, 1));
        const bool truth = sat_oracle(inst);
        const Verdict v = check_step(from_3dmonsat(inst));
        ASSERT_EQ(!v.valid, truth);
        if (truth) {
            ++sat;
            EXPECT_TRUE(satisfies(inst, decode_assignment(inst, std::get<StepWitness>(*v.witness).set)));
        } else {
            ++unsat;
        }
    }
    EXPECT_GT(sat, 5);
    EXPECT_GT(unsat, 5);
}

TEST(Coloring, Examples)
{
    EXPECT_FALSE(check_step(from_3coloring(Graph::complete(3))).valid);
    EXPECT_TRUE(check_step(from_3coloring(Graph::complete(4))).valid);
    EXPECT_FALSE(check_step(from_3coloring(Graph{{"a"}, {}})).valid);
    EXPECT_FALSE(coloring_oracle(Graph::complete(4)));
    EXPECT_TRUE(coloring_oracle(Graph::complete(3)));
}

TEST(Coloring, Universe)
{
    const InequalityExpr e = from_3coloring(Graph{{"a", "b"}, {{0, 1}}});
    EXPECT_EQ(e.universe().names(), (std::vector<std::string>{"a_r", "a_g", "a_b", "b_r", "b_g", "b_b"}));
    EXPECT_THROW(from_3coloring(Graph{{}, {}}), DomainError);
    EXPECT_THROW((Graph{{"a"}, {{0, 0}}}).validate(), DomainError);
}

TEST(Coloring, ProperColoringCheck)
{
    const Graph k3 = Graph::complete(3);
    EXPECT_TRUE(is_proper_coloring(k3, {0, 1, 2}));
    EXPECT_FALSE(is_proper_coloring(k3, {0, 1, 1}));
}

TEST(Coloring, RoundTripUpToThreeVertices)
{
    for (int n = 1; n <= 3; ++n)
        for (const Graph& g : testing::all_graphs(n)) {
            const bool truth = coloring_oracle(g);
            const Verdict v = check_step(from_3coloring(g));
            ASSERT_EQ(!v.valid, truth);
            if (truth) {
                const auto colors = decode_coloring(g, std::get<StepWitness>(*v.witness).set);
                ASSERT_TRUE(colors.has_value());
                EXPECT_TRUE(is_proper_coloring(g, *colors));
            }
        }
}

TEST(Partition, Examples)
{
    EXPECT_FALSE(check_step(from_partition({{1, 1}})).valid);
    EXPECT_FALSE(check_step(from_partition({{1, 1, 2}})).valid);
    EXPECT_TRUE(check_step(from_partition({{1, 3}})).valid);
    EXPECT_FALSE(partition_oracle({{1, 3}}));
    EXPECT_TRUE(partition_oracle({{2, 3, 5}}));
    EXPECT_THROW(from_partition({{1, 2}}), DomainError);
    EXPECT_THROW(from_partition({{}}), DomainError);
}

TEST(Partition, EqualSplitCheck)
{
    const PartitionInstance p{{1, 1, 2}};
    EXPECT_TRUE(is_equal_split(p, {true, true, false}));
    EXPECT_FALSE(is_equal_split(p, {true, false, false}));
    EXPECT_EQ(p.total(), 4);
}

// Every right-hand set has at most two variables.
TEST(Partition, RightHandSetsHaveAtMostTwoVariables)
{
    for (const PartitionInstance& p : testing::all_multisets(5, 5)) {
        if (p.total() % 2 != 0)
            continue;
        const TwoSidedInequality t = TwoSidedInequality::from_expr(from_partition(p));
        for (const WeightedSet& w : t.rhs)
            EXPECT_LE(w.set.size(), 2);
    }
}

TEST(Partition, RoundTrip)
{
    int yes = 0;
    for (const PartitionInstance& p : testing::all_multisets(5, 5)) {
        if (p.total() % 2 != 0)
            continue;
        const bool truth = partition_oracle(p);
        const Verdict v = check_step(from_partition(p));
        ASSERT_EQ(!v.valid, truth);
        if (truth) {
            ++yes;
            EXPECT_TRUE(is_equal_split(p, decode_split(p, std::get<StepWitness>(*v.witness).set)));
        }
    }
    EXPECT_GT(yes, 20);
}

TEST(Oracles, Caps)
{
    MonSat3Instance big;
    for (int i = 0; i < kSatOracleCap + 1; ++i)
        big.variables.push_back("x" + std::to_string(i));
    big.positive.push_back({0, 1, 2});
    EXPECT_THROW(sat_oracle(big), CapExceeded);
    EXPECT_THROW(coloring_oracle(Graph::complete(kColoringOracleCap + 1)), CapExceeded);
    EXPECT_THROW(partition_oracle({std::vector<std::int64_t>(kPartitionOracleItems + 1, 2)}), CapExceeded);
}

}  // namespace
}  // namespace entroplex

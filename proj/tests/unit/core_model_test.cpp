#include <gtest/gtest.h>

#include "entroplex/core_model.hpp"
#include "entroplex/errors.hpp"
#include "entroplex/function_zoo.hpp"
#include "entroplex/set_function.hpp"
#include "../support/generators.hpp"

namespace entroplex {
namespace {

using testing::letters;
using testing::Rng;

InequalityExpr expr(const VariableUniverse& u, std::initializer_list<std::pair<std::initializer_list<std::string_view>, Rational>> items)
{
    InequalityExpr::Terms t;
    for (const auto& [names, c] : items)
        t[u.set_of(names)] = c;
    return InequalityExpr(u, t);
}

TEST(VarSet, BasicOperations)
{
    const VarSet a = VarSet::singleton(0).with(2);
    EXPECT_EQ(a.size(), 2);
    EXPECT_TRUE(a.contains(2));
    EXPECT_FALSE(a.contains(1));
    EXPECT_TRUE(VarSet::singleton(2).subset_of(a));
    EXPECT_EQ(a - VarSet::singleton(0), VarSet::singleton(2));
    EXPECT_EQ(VarSet::full(3).bits(), 7U);
    EXPECT_EQ(a.elements(), (std::vector<int>{0, 2}));
    EXPECT_EQ(VarSet(0b1011).drop_index(1), VarSet(0b101));
}

TEST(VariableUniverse, NamesAndFormatting)
{
    const VariableUniverse u({"X", "Y", "Z"});
    EXPECT_EQ(u.index("Y"), 1);
    EXPECT_FALSE(u.find("W").has_value());
    EXPECT_EQ(u.format(u.set_of({"Z", "X"})), "X,Z");
    EXPECT_THROW(u.set_of({"W"}), DomainError);
    EXPECT_THROW(VariableUniverse({"X", "X"}), DomainError);
    EXPECT_EQ(VariableUniverse::sorted({"b", "a", "b"}).names(), (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(u.without(1).names(), (std::vector<std::string>{"X", "Z"}));
}

TEST(InequalityExpr, ZeroCoefficientsAreDropped)
{
    const VariableUniverse u({"X", "Y"});
    InequalityExpr::Terms t;
    t[u.set_of({"X"})] = Rational(0);
    t[u.set_of({"Y"})] = Rational(1);
    const InequalityExpr e(u, t);
    EXPECT_EQ(e.terms().size(), 1U);
    EXPECT_EQ(e.coefficient(u.set_of({"X"})), Rational(0));
}

TEST(InequalityExpr, EmptySetTermVanishes)
{
    const VariableUniverse u({"X"});
    InequalityExpr::Terms t;
    t[VarSet()] = Rational(1);
    EXPECT_TRUE(InequalityExpr(u, t).is_zero());
    t[VarSet::singleton(2)] = Rational(1);
    EXPECT_THROW(InequalityExpr(u, t), DomainError);
}

TEST(ExpandMeasure, ConditionalEntropy)
{
    const VariableUniverse u({"X", "Y"});
    const InequalityExpr e = expand_measure(u, CondEntropy{u.set_of({"Y"}), u.set_of({"X"})});
    EXPECT_EQ(e, expr(u, {{{"X", "Y"}, Rational(1)}, {{"X"}, Rational(-1)}}));
}

TEST(ExpandMeasure, MultiMutualInformation)
{
    const VariableUniverse u({"A", "B", "C"});
    const InequalityExpr e = expand_measure(u, MultiMutualInfo{u.full()});
    EXPECT_EQ(e, expr(u, {{{"A"}, Rational(1)},
                          {{"B"}, Rational(1)},
                          {{"C"}, Rational(1)},
                          {{"A", "B"}, Rational(-1)},
                          {{"A", "C"}, Rational(-1)},
                          {{"B", "C"}, Rational(-1)},
                          {{"A", "B", "C"}, Rational(1)}}));
}

TEST(ExpandMeasure, EmptyEntropyVanishes)
{
    const VariableUniverse u({"A"});
    EXPECT_TRUE(expand_measure(u, Entropy{VarSet()}, Rational(5)).is_zero());
}

TEST(ExpandMeasure, OperandOutsideUniverse)
{
    const VariableUniverse u({"A"});
    EXPECT_THROW(expand_measure(u, Entropy{VarSet::singleton(3)}), DomainError);
}

TEST(ExpandMeasure, MutualInformationForms)
{
    const VariableUniverse u({"X", "Y", "Z"});
    const VarSet x = u.set_of({"X"});
    const VarSet y = u.set_of({"Y"});
    const VarSet z = u.set_of({"Z"});
    EXPECT_EQ(expand_measure(u, MutualInfo{x, y}),
              expr(u, {{{"X"}, Rational(1)}, {{"Y"}, Rational(1)}, {{"X", "Y"}, Rational(-1)}}));
    EXPECT_EQ(expand_measure(u, CondMutualInfo{x, y, z}, Rational(2)),
              expr(u, {{{"X", "Z"}, Rational(2)},
                       {{"Y", "Z"}, Rational(2)},
                       {{"X", "Y", "Z"}, Rational(-2)},
                       {{"Z"}, Rational(-2)}}));
}

// Every measure is evaluated directly from its definition on random set functions.
TEST(ExpandMeasure, MatchesDirectFormulaOnRandomFunctions)
{
    Rng rng(11);
    const VariableUniverse u = letters(4);
    for (int trial = 0; trial < 200; ++trial) {
        ExactSetFunction h(u);
        for (VarSet::Bits s = 1; s < 16; ++s)
            h.set(VarSet(s), Rational(rng.range(-5, 9), rng.range(1, 4)));
        const VarSet a(static_cast<VarSet::Bits>(rng.below(16)));
        const VarSet b(static_cast<VarSet::Bits>(rng.below(16)));
        const VarSet c(static_cast<VarSet::Bits>(rng.below(16)));
        auto H = [&](VarSet s) { return h(s); };
        EXPECT_EQ(evaluate(expand_measure(u, Entropy{a}), h), H(a));
        EXPECT_EQ(evaluate(expand_measure(u, CondEntropy{a, b}), h), H(a | b) - H(b));
        EXPECT_EQ(evaluate(expand_measure(u, MutualInfo{a, b}), h), H(a) + H(b) - H(a | b));
        EXPECT_EQ(evaluate(expand_measure(u, CondMutualInfo{a, b, c}), h),
                  H(a | c) + H(b | c) - H(a | b | c) - H(c));
        Rational im(0);
        for (VarSet::Bits t = 1; t < 16; ++t)
            if (VarSet(t).subset_of(a))
                im += (VarSet(t).size() % 2 == 1 ? Rational(1) : Rational(-1)) * H(VarSet(t));
        if (!a.empty())
            EXPECT_EQ(evaluate(expand_measure(u, MultiMutualInfo{a}), h), im);
    }
}

TEST(Combine, Examples)
{
    const VariableUniverse u({"X", "Y"});
    const InequalityExpr x = expr(u, {{{"X"}, Rational(1)}});
    const InequalityExpr mx = expr(u, {{{"X"}, Rational(-1)}});
    const InequalityExpr y = expr(u, {{{"Y"}, Rational(1)}});
    const InequalityExpr c = expr(u, {{{"X", "Y"}, Rational(1)}, {{"X"}, Rational(-1)}});
    EXPECT_TRUE(combine(u, {{Rational(1), x}, {Rational(1), mx}}).is_zero());
    EXPECT_EQ(combine(u, {{Rational(2), c}}), expr(u, {{{"X", "Y"}, Rational(2)}, {{"X"}, Rational(-2)}}));
    EXPECT_EQ(combine(u, {{Rational(1), x}, {Rational(1), y}}), expr(u, {{{"X"}, Rational(1)}, {{"Y"}, Rational(1)}}));
    const VariableUniverse other({"X", "Z"});
    EXPECT_THROW(combine(u, {{Rational(1), InequalityExpr(other)}}), DomainError);
}

TEST(Combine, EvaluationIsLinear)
{
    Rng rng(3);
    const VariableUniverse u = letters(3);
    for (int trial = 0; trial < 100; ++trial) {
        const InequalityExpr a = testing::random_expr(rng, u, -3, 3);
        const InequalityExpr b = testing::random_expr(rng, u, -3, 3);
        const Rational p(rng.range(-4, 4), rng.range(1, 3));
        const Rational q(rng.range(-4, 4), rng.range(1, 3));
        ExactSetFunction h(u);
        for (VarSet::Bits s = 1; s < 8; ++s)
            h.set(VarSet(s), Rational(rng.range(0, 6)));
        EXPECT_EQ(evaluate(combine(u, {{p, a}, {q, b}}), h), p * evaluate(a, h) + q * evaluate(b, h));
    }
}

TEST(Evaluate, Examples)
{
    const VariableUniverse u({"X", "Y"});
    const InequalityExpr c = expr(u, {{{"X", "Y"}, Rational(1)}, {{"X"}, Rational(-1)}});
    EXPECT_EQ(evaluate(c, step_function(u, u.set_of({"X"}))), Rational(0));
    EXPECT_EQ(evaluate(expr(u, {{{"X", "Y"}, Rational(1)}}), zero_function(u)), Rational(0));
    EXPECT_THROW(evaluate(c, zero_function(letters(2))), DomainError);
}

TEST(SetRepresentation, PaperExample)
{
    const VariableUniverse u({"X", "Y", "Z"});
    const InequalityExpr e = expr(u, {{{"X", "Y"}, Rational(1)},
                                      {{"Y", "Z"}, Rational(1)},
                                      {{"X", "Z"}, Rational(2)},
                                      {{"X"}, Rational(1)},
                                      {{"Y"}, Rational(-1)},
                                      {{"Z"}, Rational(-3)}});
    const SetRep r = set_representation(e);
    EXPECT_EQ(r.scale, 1);
    EXPECT_EQ(r.positive_count(), 5);
    EXPECT_EQ(r.negative_count(), 4);
    std::map<VarSet, std::int64_t> pos(r.positives.begin(), r.positives.end());
    std::map<VarSet, std::int64_t> neg(r.negatives.begin(), r.negatives.end());
    EXPECT_EQ(pos[u.set_of({"X", "Y"})], 1);
    EXPECT_EQ(pos[u.set_of({"Y", "Z"})], 1);
    EXPECT_EQ(pos[u.set_of({"X", "Z"})], 2);
    EXPECT_EQ(pos[u.set_of({"X"})], 1);
    EXPECT_EQ(neg[u.set_of({"Y"})], 1);
    EXPECT_EQ(neg[u.set_of({"Z"})], 3);
}

TEST(SetRepresentation, ScalesFractions)
{
    const VariableUniverse u({"X", "Y"});
    const SetRep r = set_representation(expr(u, {{{"X"}, Rational(1, 2)}, {{"Y"}, Rational(-1, 3)}}));
    EXPECT_EQ(r.scale, 6);
    ASSERT_EQ(r.positives.size(), 1U);
    ASSERT_EQ(r.negatives.size(), 1U);
    EXPECT_EQ(r.positives[0].second, 3);
    EXPECT_EQ(r.negatives[0].second, 2);
}

TEST(SetRepresentation, EmptyAndCap)
{
    const VariableUniverse u({"X", "Y"});
    const SetRep r = set_representation(InequalityExpr(u));
    EXPECT_TRUE(r.positives.empty());
    EXPECT_TRUE(r.negatives.empty());
    EXPECT_THROW(set_representation(expr(u, {{{"X"}, Rational(50)}, {{"Y"}, Rational(-60)}}), 100), CapExceeded);
}

// The multisets reproduce the expression up to the common scale.
TEST(SetRepresentation, InvariantOnRandomExpressions)
{
    Rng rng(5);
    const VariableUniverse u = letters(4);
    for (int trial = 0; trial < 200; ++trial) {
        InequalityExpr::Terms t;
        for (VarSet::Bits s = 1; s < 16; ++s)
            if (rng.coin(40))
                t[VarSet(s)] = Rational(rng.range(-6, 6), rng.range(1, 5));
        const InequalityExpr e(u, t);
        const SetRep r = set_representation(e);
        InequalityExpr::Terms back;
        for (const auto& [s, m] : r.positives) {
            EXPECT_GT(m, 0);
            back[s] += Rational(m);
        }
        for (const auto& [s, m] : r.negatives) {
            EXPECT_GT(m, 0);
            back[s] -= Rational(m);
        }
        EXPECT_EQ(InequalityExpr(u, back), e.scaled(Rational(r.scale.get_si())));
    }
}

TEST(TwoSided, RoundTrip)
{
    Rng rng(9);
    const VariableUniverse u = letters(3);
    for (int trial = 0; trial < 50; ++trial) {
        const InequalityExpr e = testing::random_expr(rng, u, -4, 4);
        const TwoSidedInequality t = TwoSidedInequality::from_expr(e);
        for (const auto& w : t.lhs)
            EXPECT_GT(w.weight, Rational(0));
        for (const auto& w : t.rhs)
            EXPECT_GT(w.weight, Rational(0));
        EXPECT_EQ(t.to_expr(), e);
    }
}

}  // namespace
}  // namespace entroplex

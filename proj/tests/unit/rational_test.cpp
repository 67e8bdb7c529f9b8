#include <gtest/gtest.h>

#include <limits>

#include "entroplex/rational.hpp"
#include "../support/generators.hpp"

namespace entroplex {
namespace {

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
    EXPECT_EQ(Rational(0, -5), Rational(0));
    EXPECT_EQ(Rational(6, 3).to_string(), "2");
    EXPECT_EQ(Rational(-2, 4).to_string(), "-1/2");
    EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, Arithmetic)
{
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
    EXPECT_EQ(Rational(-7, 3).abs(), Rational(7, 3));
    EXPECT_THROW(Rational(1) / Rational(0), std::exception);
}

TEST(Rational, Ordering)
{
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(5, 7).sign(), 1);
    EXPECT_EQ(Rational(-5, 7).sign(), -1);
    EXPECT_EQ(Rational(0).sign(), 0);
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_FALSE(Rational(3, 2).is_integer());
}

TEST(Rational, Parse)
{
    EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-4"), Rational(-4));
    EXPECT_EQ(Rational::parse("0"), Rational(0));
    EXPECT_THROW(Rational::parse("1/0"), std::exception);
    EXPECT_THROW(Rational::parse("abc"), std::exception);
}

TEST(Rational, OverflowPromotesAndDemotes)
{
    const Rational big(std::numeric_limits<long long>::max());
    const Rational sq = big * big;
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ(sq.to_mpq(), mpq_class(big.to_mpq() * big.to_mpq()));
    EXPECT_EQ((sq - sq), Rational(0));
    EXPECT_TRUE((sq / sq).is_integer());
    EXPECT_EQ(sq / sq, Rational(1));
}

TEST(Rational, AgreesWithGmpOnRandomOperations)
{
    testing::Rng rng(7);
    for (int k = 0; k < 2000; ++k) {
        const long long an = static_cast<long long>(rng.below(1ULL << 40)) - (1LL << 39);
        const long long ad = static_cast<long long>(rng.below(1ULL << 40)) + 1;
        const long long bn = static_cast<long long>(rng.below(1ULL << 40)) - (1LL << 39);
        const long long bd = static_cast<long long>(rng.below(1ULL << 40)) + 1;
        const Rational a(an, ad);
        const Rational b(bn, bd);
        mpq_class qa(static_cast<long>(an), static_cast<long>(ad));
        mpq_class qb(static_cast<long>(bn), static_cast<long>(bd));
        qa.canonicalize();
        qb.canonicalize();
        EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
        EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
        EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
        if (bn != 0)
            EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
        EXPECT_EQ(a < b, qa < qb);
    }
}

TEST(Rational, EigenScalar)
{
    MatrixQ m(2, 2);
    m << Rational(1, 2), Rational(1), Rational(0), Rational(2, 3);
    VectorQ v(2);
    v << Rational(2), Rational(3);
    const VectorQ r = m * v;
    EXPECT_EQ(r(0), Rational(4));
    EXPECT_EQ(r(1), Rational(2));
}

}  // namespace
}  // namespace entroplex

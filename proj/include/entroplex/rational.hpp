#ifndef ENTROPLEX_RATIONAL_HPP
#define ENTROPLEX_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace entroplex {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 63 bits are kept
/// inline and operated on with 128-bit intermediates; anything larger is
/// promoted to a GMP rational and demoted again as soon as it fits. The
/// representation is canonical either way: gcd(|num|, den) == 1, den > 0.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v);
    Rational(long long v);
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses `p`, `-p`, `p/q` (decimal integers of any length).
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const;
    int sign() const;

    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;
    double to_double() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    void assign_big(mpq_class q);
    void assign_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

/// Least common multiple of the denominators of a range of rationals.
template <class Range>
mpz_class denominator_lcm(const Range& values)
{
    mpz_class l = 1;
    for (const Rational& q : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.denominator().get_mpz_t());
    return l;
}

using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace entroplex

namespace Eigen {

template <>
struct NumTraits<entroplex::Rational> : GenericNumTraits<entroplex::Rational> {
    using Real = entroplex::Rational;
    using NonInteger = entroplex::Rational;
    using Nested = entroplex::Rational;
    using Literal = entroplex::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif

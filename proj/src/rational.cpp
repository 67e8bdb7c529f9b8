#include "entroplex/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace entroplex {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0)
            return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 uabs(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

bool fits_small(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

mpz_class mpz_from(i128 v)
{
    u128 mag = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class r = (hi << 64) + lo;
    return v < 0 ? mpz_class(-r) : r;
}

bool mpz_small(const mpz_class& z, std::int64_t& out)
{
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        return false;
    long v = z.get_si();
    if (v == std::numeric_limits<long>::min())
        return false;
    out = v;
    return true;
}

}  // namespace

Rational::Rational(long v) : Rational(static_cast<long long>(v)) {}

Rational::Rational(long long v)
{
    if (v == std::numeric_limits<long long>::min())
        assign_big(mpq_class(mpz_from(v)));
    else
        num_ = v;
}

Rational::Rational(long long num, long long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    assign_wide(num, den);
}

Rational::Rational(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    assign_big(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
{
}

Rational& Rational::operator=(const Rational& other)
{
    if (this == &other)
        return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_)
        big_ = std::make_unique<mpq_class>(*other.big_);
    else
        big_.reset();
    return *this;
}

void Rational::assign_big(mpq_class q)
{
    std::int64_t n = 0;
    std::int64_t d = 1;
    if (mpz_small(q.get_num(), n) && mpz_small(q.get_den(), d)) {
        num_ = n;
        den_ = d;
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::assign_wide(i128 num, i128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits_small(num) && fits_small(den)) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q;
    q.get_num() = mpz_from(num);
    q.get_den() = mpz_from(den);
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    auto valid_int = [](std::string_view t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+'))
            i = 1;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0)
        throw std::invalid_argument("rational literal with zero denominator '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const
{
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const
{
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const
{
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const
{
    if (big_)
        return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const
{
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    Rational r;
    if (big_)
        r.big_ = std::make_unique<mpq_class>(-*big_);
    else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    if (rhs.is_zero())
        return *this;
    if (is_zero())
        return *this = rhs;
    if (!big_ && !rhs.big_) {
        if (den_ == rhs.den_) {
            assign_wide(static_cast<i128>(num_) + rhs.num_, den_);
            return *this;
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        assign_wide(n, d);
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    if (is_zero())
        return *this;
    if (rhs.is_zero())
        return *this = Rational();
    if (!big_ && !rhs.big_) {
        // Cross-cancel first so the products usually stay within 64 bits.
        std::uint64_t g1 = gcd64(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_),
                                 static_cast<std::uint64_t>(rhs.den_));
        std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(rhs.num_ < 0 ? -rhs.num_ : rhs.num_),
                                 static_cast<std::uint64_t>(den_));
        i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) *
                 (rhs.num_ / static_cast<std::int64_t>(g2));
        i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) *
                 (rhs.den_ / static_cast<std::int64_t>(g1));
        if (fits_small(n) && fits_small(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_wide(n, d);
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    if (is_zero())
        return *this;
    if (!rhs.big_) {
        Rational inv;
        inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
        inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
        return *this *= inv;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    // Canonical forms differ in representation only when one side is big.
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.to_string();
}

}  // namespace entroplex

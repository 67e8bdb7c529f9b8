#ifndef ENTROPLEX_SET_FUNCTION_HPP
#define ENTROPLEX_SET_FUNCTION_HPP

#include <cstddef>
#include <type_traits>
#include <utility>

#include <Eigen/Core>

#include "entroplex/core_model.hpp"

namespace entroplex {

/// Dense set function h : 2^[n] -> Scalar with h(empty) = 0, indexed by VarSet bits.
///
/// `SetFunction<Rational>` is the exact type consumed by every checker.
/// `SetFunction<double>` only comes out of distribution entropies and is
/// accepted by evaluation and the tolerance-based classifiers, never by a
/// validity decision.
template <class Scalar>
class SetFunction {
public:
    using Values = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    SetFunction() = default;

    explicit SetFunction(VariableUniverse universe)
        : universe_(std::move(universe)),
          values_(Values::Constant(Eigen::Index{1} << universe_.size(), Scalar(0)))
    {
    }

    SetFunction(VariableUniverse universe, Values values)
        : universe_(std::move(universe)), values_(std::move(values))
    {
        if (values_.size() != (Eigen::Index{1} << universe_.size()))
            throw DomainError("set function needs 2^n values");
        if (values_(0) != Scalar(0))
            throw DomainError("set function must vanish on the empty set");
    }

    const VariableUniverse& universe() const { return universe_; }
    const Values& values() const { return values_; }

    const Scalar& operator()(VarSet s) const { return values_(static_cast<Eigen::Index>(s.bits())); }

    void set(VarSet s, Scalar v)
    {
        if (s.empty() && v != Scalar(0))
            throw DomainError("set function must vanish on the empty set");
        values_(static_cast<Eigen::Index>(s.bits())) = std::move(v);
    }

    SetFunction& operator+=(const SetFunction& other)
    {
        require_same(other);
        values_ += other.values_;
        return *this;
    }

    friend SetFunction operator+(SetFunction a, const SetFunction& b) { return a += b; }

    friend SetFunction operator*(const Scalar& k, const SetFunction& f)
    {
        return SetFunction(f.universe_, (f.values_ * k).eval());
    }

    friend bool operator==(const SetFunction& a, const SetFunction& b)
    {
        return a.universe_ == b.universe_ && a.values_ == b.values_;
    }

private:
    void require_same(const SetFunction& other) const
    {
        if (!(universe_ == other.universe_))
            throw DomainError("universe mismatch");
    }

    VariableUniverse universe_;
    Values values_;
};

using ExactSetFunction = SetFunction<Rational>;
using EntropicVector = SetFunction<double>;

/// sum_S c_S h(S); the inequality holds on h iff the result is >= 0.
template <class Scalar>
Scalar evaluate(const InequalityExpr& expr, const SetFunction<Scalar>& h)
{
    if (!(expr.universe() == h.universe()))
        throw DomainError("universe mismatch between inequality and set function");
    Scalar total(0);
    for (const auto& [s, c] : expr.terms()) {
        if constexpr (std::is_same_v<Scalar, Rational>)
            total += c * h(s);
        else
            total += static_cast<Scalar>(c.to_double()) * h(s);
    }
    return total;
}

namespace detail {

template <class Scalar>
bool at_least(const Scalar& lhs, const Scalar& rhs, const Scalar& tol)
{
    return lhs - rhs >= -tol;
}

}  // namespace detail

/// h(S + i) >= h(S) for every S and i outside S (equivalent to all pairs S <= T).
template <class Scalar>
bool is_monotone(const SetFunction<Scalar>& h, const Scalar& tol = Scalar(0))
{
    const int n = h.universe().size();
    const VarSet::Bits size = VarSet::Bits{1} << n;
    for (VarSet::Bits s = 0; s < size; ++s)
        for (int i = 0; i < n; ++i)
            if (!((s >> i) & 1U) && !detail::at_least(h(VarSet(s).with(i)), h(VarSet(s)), tol))
                return false;
    return true;
}

/// Monotone and submodular. Submodularity is checked on the elemental instances
/// h(Ki) + h(Kj) >= h(K) + h(Kij), which generate all pairwise instances.
template <class Scalar>
bool is_polymatroid(const SetFunction<Scalar>& h, const Scalar& tol = Scalar(0))
{
    if (!is_monotone(h, tol))
        return false;
    const int n = h.universe().size();
    const VarSet::Bits size = VarSet::Bits{1} << n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (VarSet::Bits k = 0; k < size; ++k) {
                if (((k >> i) & 1U) || ((k >> j) & 1U))
                    continue;
                VarSet base(k);
                if (!detail::at_least(h(base.with(i)) + h(base.with(j)),
                                      h(base) + h(base.with(i).with(j)), tol))
                    return false;
            }
    return true;
}

/// Non-negative combination of basic modular functions: h(W) = sum_{A in W} h({A}).
template <class Scalar>
bool is_modular(const SetFunction<Scalar>& h, const Scalar& tol = Scalar(0))
{
    const int n = h.universe().size();
    for (int i = 0; i < n; ++i)
        if (!detail::at_least(h(VarSet::singleton(i)), Scalar(0), tol))
            return false;
    const VarSet::Bits size = VarSet::Bits{1} << n;
    for (VarSet::Bits s = 1; s < size; ++s) {
        Scalar sum(0);
        for (int i : VarSet(s).elements())
            sum += h(VarSet::singleton(i));
        Scalar diff = sum - h(VarSet(s));
        if (diff > tol || diff < -tol)
            return false;
    }
    return true;
}

}  // namespace entroplex

#endif

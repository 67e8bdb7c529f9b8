#ifndef ENTROPLEX_CORE_MODEL_HPP
#define ENTROPLEX_CORE_MODEL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "entroplex/errors.hpp"
#include "entroplex/rational.hpp"

namespace entroplex {

/// Largest universe accepted by default; `ENTROPLEX_MAX_N` overrides it.
inline constexpr int kDefaultUniverseCap = 24;
/// VarSet is a 32-bit mask, so no override can go beyond this.
inline constexpr int kHardUniverseCap = 30;
inline constexpr std::int64_t kDefaultMultiplicityCap = 100000;

/// Effective universe cap (environment override applied, clamped to the hard cap).
int universe_cap();

bool is_identifier(std::string_view text);

/// A subset of the variable universe, encoded as a bit mask over variable indices.
class VarSet {
public:
    using Bits = std::uint32_t;

    constexpr VarSet() = default;
    constexpr explicit VarSet(Bits bits) : bits_(bits) {}

    static constexpr VarSet singleton(int i) { return VarSet(Bits{1} << i); }
    static constexpr VarSet full(int n) { return VarSet(n == 0 ? 0 : (~Bits{0} >> (32 - n))); }

    constexpr Bits bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VarSet with(int i) const { return VarSet(bits_ | (Bits{1} << i)); }
    constexpr VarSet without(int i) const { return VarSet(bits_ & ~(Bits{1} << i)); }

    friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
    friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
    friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits_ & ~b.bits_); }

    friend constexpr auto operator<=>(VarSet, VarSet) = default;

    std::vector<int> elements() const;

    /// Removes variable `i` and shifts the higher indices down by one.
    constexpr VarSet drop_index(int i) const
    {
        Bits low = bits_ & ((Bits{1} << i) - 1);
        Bits high = (bits_ >> (i + 1)) << i;
        return VarSet(low | high);
    }

private:
    Bits bits_ = 0;
};

/// Named, ordered set of variables. Index order is the canonical variable order.
class VariableUniverse {
public:
    VariableUniverse() = default;
    explicit VariableUniverse(std::vector<std::string> names);

    /// Universe over the lexicographically sorted, de-duplicated names.
    static VariableUniverse sorted(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(std::string_view name) const;
    int index(std::string_view name) const;

    VarSet set_of(std::initializer_list<std::string_view> names) const;
    VarSet set_of(const std::vector<std::string>& names) const;
    VarSet full() const { return VarSet::full(size()); }
    bool contains(VarSet s) const { return s.subset_of(full()); }

    /// Comma separated names in universe order, e.g. "X,Y".
    std::string format(VarSet s) const;

    VariableUniverse without(int i) const;

    friend bool operator==(const VariableUniverse&, const VariableUniverse&) = default;

private:
    std::vector<std::string> names_;
};

/// Linear information inequality sum_S c_S h(S) >= 0, held as its coefficient function.
class InequalityExpr {
public:
    using Terms = std::map<VarSet, Rational>;

    InequalityExpr() = default;
    explicit InequalityExpr(VariableUniverse universe) : universe_(std::move(universe)) {}
    InequalityExpr(VariableUniverse universe, const Terms& terms);

    const VariableUniverse& universe() const { return universe_; }
    const Terms& terms() const { return terms_; }
    Rational coefficient(VarSet s) const;
    bool is_zero() const { return terms_.empty(); }

    InequalityExpr scaled(const Rational& factor) const;

    friend InequalityExpr operator+(const InequalityExpr& a, const InequalityExpr& b);
    friend InequalityExpr operator-(const InequalityExpr& a, const InequalityExpr& b);
    friend bool operator==(const InequalityExpr&, const InequalityExpr&) = default;

private:
    void accumulate(VarSet s, const Rational& c);

    VariableUniverse universe_;
    Terms terms_;
};

/// Coefficient-wise linear combination; all expressions must share `universe`.
InequalityExpr combine(const VariableUniverse& universe,
                       const std::vector<std::pair<Rational, InequalityExpr>>& parts);
InequalityExpr combine(const std::vector<std::pair<Rational, InequalityExpr>>& parts);

struct Entropy {
    VarSet set;
};
struct CondEntropy {
    VarSet target;
    VarSet given;
};
struct MutualInfo {
    VarSet left;
    VarSet right;
};
struct CondMutualInfo {
    VarSet left;
    VarSet right;
    VarSet given;
};
struct MultiMutualInfo {
    VarSet set;
};

using MeasureTerm = std::variant<Entropy, CondEntropy, MutualInfo, CondMutualInfo, MultiMutualInfo>;

/// Expands weight * measure into entropy terms; h(empty) terms vanish.
InequalityExpr expand_measure(const VariableUniverse& universe, const MeasureTerm& term,
                              const Rational& weight = Rational(1));

/// Multiset representation (S+, S-) of an inequality after scaling to integers.
struct SetRep {
    std::vector<std::pair<VarSet, std::int64_t>> positives;
    std::vector<std::pair<VarSet, std::int64_t>> negatives;
    /// LCM of the coefficient denominators; multiplicities are scale * |c_S|.
    mpz_class scale = 1;

    std::int64_t positive_count() const;
    std::int64_t negative_count() const;
};

/// Throws CapExceeded when the total multiplicity would exceed `cap`.
SetRep set_representation(const InequalityExpr& expr, std::int64_t cap = kDefaultMultiplicityCap);

struct WeightedSet {
    VarSet set;
    Rational weight;

    friend bool operator==(const WeightedSet&, const WeightedSet&) = default;
};

/// c_1 h(X_1) + ... >= d_1 h(Y_1) + ... with positive weights; sets may repeat on
/// either side, which the merged InequalityExpr cannot express.
struct TwoSidedInequality {
    VariableUniverse universe;
    std::vector<WeightedSet> lhs;
    std::vector<WeightedSet> rhs;

    /// Positive coefficients to the left, negated negative ones to the right.
    static TwoSidedInequality from_expr(const InequalityExpr& expr);
    InequalityExpr to_expr() const;
};

}  // namespace entroplex

#endif

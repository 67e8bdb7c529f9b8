#include "entroplex/core_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace entroplex {

int universe_cap()
{
    static const int cap = [] {
        const char* env = std::getenv("ENTROPLEX_MAX_N");
        if (env == nullptr || *env == '\0')
            return kDefaultUniverseCap;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            return kDefaultUniverseCap;
        return static_cast<int>(std::min<long>(v, kHardUniverseCap));
    }();
    return cap;
}

bool is_identifier(std::string_view text)
{
    if (text.empty())
        return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(text[0]))
        return false;
    return std::all_of(text.begin() + 1, text.end(), [&](char c) { return alpha(c) || digit(c); });
}

std::vector<int> VarSet::elements() const
{
    std::vector<int> out;
    for (Bits b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

VariableUniverse::VariableUniverse(std::vector<std::string> names) : names_(std::move(names))
{
    if (static_cast<int>(names_.size()) > universe_cap())
        throw CapExceeded("universe of " + std::to_string(names_.size()) +
                          " variables exceeds the cap of " + std::to_string(universe_cap()));
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n))
            throw DomainError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second)
            throw DomainError("duplicate variable name '" + n + "'");
    }
}

VariableUniverse VariableUniverse::sorted(std::vector<std::string> names)
{
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return VariableUniverse(std::move(names));
}

std::optional<int> VariableUniverse::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

int VariableUniverse::index(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw DomainError("unknown variable '" + std::string(name) + "'");
}

VarSet VariableUniverse::set_of(std::initializer_list<std::string_view> names) const
{
    VarSet s;
    for (auto n : names)
        s = s.with(index(n));
    return s;
}

VarSet VariableUniverse::set_of(const std::vector<std::string>& names) const
{
    VarSet s;
    for (const auto& n : names)
        s = s.with(index(n));
    return s;
}

std::string VariableUniverse::format(VarSet s) const
{
    std::string out;
    for (int i : s.elements()) {
        if (!out.empty())
            out += ',';
        out += names_.at(static_cast<std::size_t>(i));
    }
    return out;
}

VariableUniverse VariableUniverse::without(int i) const
{
    std::vector<std::string> rest = names_;
    rest.erase(rest.begin() + i);
    return VariableUniverse(std::move(rest));
}

InequalityExpr::InequalityExpr(VariableUniverse universe, const Terms& terms)
    : universe_(std::move(universe))
{
    for (const auto& [s, c] : terms)
        accumulate(s, c);
}

void InequalityExpr::accumulate(VarSet s, const Rational& c)
{
    if (!universe_.contains(s))
        throw DomainError("term outside the universe");
    if (s.empty() || c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational InequalityExpr::coefficient(VarSet s) const
{
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational() : it->second;
}

InequalityExpr InequalityExpr::scaled(const Rational& factor) const
{
    InequalityExpr out(universe_);
    if (factor.is_zero())
        return out;
    for (const auto& [s, c] : terms_)
        out.terms_.emplace(s, c * factor);
    return out;
}

InequalityExpr operator+(const InequalityExpr& a, const InequalityExpr& b)
{
    if (!(a.universe_ == b.universe_))
        throw DomainError("universe mismatch");
    InequalityExpr out = a;
    for (const auto& [s, c] : b.terms_)
        out.accumulate(s, c);
    return out;
}

InequalityExpr operator-(const InequalityExpr& a, const InequalityExpr& b)
{
    return a + b.scaled(Rational(-1));
}

InequalityExpr combine(const VariableUniverse& universe,
                       const std::vector<std::pair<Rational, InequalityExpr>>& parts)
{
    InequalityExpr out(universe);
    for (const auto& [w, e] : parts)
        out = out + e.scaled(w);
    return out;
}

InequalityExpr combine(const std::vector<std::pair<Rational, InequalityExpr>>& parts)
{
    if (parts.empty())
        throw DomainError("combine of an empty list needs an explicit universe");
    return combine(parts.front().second.universe(), parts);
}

namespace {

struct Expander {
    const VariableUniverse& universe;
    const Rational& weight;

    void check(VarSet s) const
    {
        if (!universe.contains(s))
            throw DomainError("measure operand outside the universe");
    }

    InequalityExpr make(std::initializer_list<std::pair<VarSet, int>> terms) const
    {
        InequalityExpr::Terms t;
        for (auto [s, c] : terms)
            if (!s.empty())
                t[s] += weight * Rational(c);
        return InequalityExpr(universe, t);
    }

    InequalityExpr operator()(const Entropy& m) const
    {
        check(m.set);
        return make({{m.set, 1}});
    }
    InequalityExpr operator()(const CondEntropy& m) const
    {
        check(m.target);
        check(m.given);
        return make({{m.target | m.given, 1}, {m.given, -1}});
    }
    InequalityExpr operator()(const MutualInfo& m) const
    {
        check(m.left);
        check(m.right);
        return make({{m.left, 1}, {m.right, 1}, {m.left | m.right, -1}});
    }
    InequalityExpr operator()(const CondMutualInfo& m) const
    {
        check(m.left);
        check(m.right);
        check(m.given);
        const VarSet x = m.given;
        return make({{x | m.left, 1}, {x | m.right, 1}, {x, -1}, {x | m.left | m.right, -1}});
    }
    InequalityExpr operator()(const MultiMutualInfo& m) const
    {
        check(m.set);
        if (m.set.empty())
            throw DomainError("multivariate mutual information of the empty set");
        InequalityExpr::Terms t;
        // Inclusion-exclusion over the nonempty subsets of the operand.
        const VarSet::Bits s = m.set.bits();
        for (VarSet::Bits sub = s; sub != 0; sub = (sub - 1) & s) {
            VarSet part(sub);
            t[part] += (part.size() % 2 == 1) ? weight : -weight;
        }
        return InequalityExpr(universe, t);
    }
};

}  // namespace

InequalityExpr expand_measure(const VariableUniverse& universe, const MeasureTerm& term,
                              const Rational& weight)
{
    return std::visit(Expander{universe, weight}, term);
}

std::int64_t SetRep::positive_count() const
{
    std::int64_t n = 0;
    for (const auto& [s, k] : positives)
        n += k;
    return n;
}

std::int64_t SetRep::negative_count() const
{
    std::int64_t n = 0;
    for (const auto& [s, k] : negatives)
        n += k;
    return n;
}

SetRep set_representation(const InequalityExpr& expr, std::int64_t cap)
{
    SetRep rep;
    std::vector<Rational> coeffs;
    for (const auto& [s, c] : expr.terms())
        coeffs.push_back(c);
    rep.scale = denominator_lcm(coeffs);
    const Rational scale{mpq_class(rep.scale)};

    mpz_class total = 0;
    for (const auto& [s, c] : expr.terms()) {
        Rational m = (c * scale).abs();
        total += m.numerator();
        if (total > cap)
            throw CapExceeded("set representation needs more than " + std::to_string(cap) +
                              " nodes");
        auto k = static_cast<std::int64_t>(m.numerator().get_si());
        (c.sign() > 0 ? rep.positives : rep.negatives).emplace_back(s, k);
    }
    return rep;
}

TwoSidedInequality TwoSidedInequality::from_expr(const InequalityExpr& expr)
{
    TwoSidedInequality out{expr.universe(), {}, {}};
    for (const auto& [s, c] : expr.terms()) {
        if (c.sign() > 0)
            out.lhs.push_back({s, c});
        else
            out.rhs.push_back({s, -c});
    }
    return out;
}

InequalityExpr TwoSidedInequality::to_expr() const
{
    InequalityExpr::Terms t;
    for (const auto& [s, w] : lhs)
        t[s] += w;
    for (const auto& [s, w] : rhs)
        t[s] -= w;
    return InequalityExpr(universe, t);
}

}  // namespace entroplex

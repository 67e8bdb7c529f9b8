#include "entroplex/function_zoo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace entroplex {

ExactSetFunction zero_function(const VariableUniverse& universe)
{
    return ExactSetFunction(universe);
}

ExactSetFunction step_function(const VariableUniverse& universe, VarSet v)
{
    if (v.empty())
        throw DomainError("step function needs a nonempty set; use zero_function");
    if (!universe.contains(v))
        throw DomainError("step set outside the universe");
    ExactSetFunction h(universe);
    const VarSet::Bits size = VarSet::Bits{1} << universe.size();
    for (VarSet::Bits w = 1; w < size; ++w)
        if (VarSet(w).intersects(v))
            h.set(VarSet(w), Rational(1));
    return h;
}

ExactSetFunction basic_modular(const VariableUniverse& universe, int variable)
{
    if (variable < 0 || variable >= universe.size())
        throw DomainError("unknown variable index " + std::to_string(variable));
    return step_function(universe, VarSet::singleton(variable));
}

ExactSetFunction basic_modular(const VariableUniverse& universe, std::string_view variable)
{
    return basic_modular(universe, universe.index(variable));
}

ExactSetFunction upset_indicator(const VariableUniverse& universe, const std::vector<VarSet>& generators)
{
    ExactSetFunction h(universe);
    const VarSet::Bits size = VarSet::Bits{1} << universe.size();
    for (VarSet::Bits w = 1; w < size; ++w)
        for (VarSet g : generators)
            if (g.subset_of(VarSet(w))) {
                h.set(VarSet(w), Rational(1));
                break;
            }
    return h;
}

std::vector<VarSet> minimal_sets(std::vector<VarSet> family)
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<VarSet> out;
    for (VarSet s : family) {
        bool minimal = std::none_of(family.begin(), family.end(),
                                    [&](VarSet t) { return t != s && t.subset_of(s); });
        if (minimal)
            out.push_back(s);
    }
    return out;
}

JointDistribution::JointDistribution(VariableUniverse schema, std::vector<Row> rows)
    : schema_(std::move(schema)), rows_(std::move(rows))
{
    Rational total;
    std::set<std::vector<std::string>> seen;
    for (const auto& row : rows_) {
        if (static_cast<int>(row.values.size()) != schema_.size())
            throw DomainError("distribution row width does not match the schema");
        if (row.probability.sign() <= 0)
            throw DomainError("distribution probabilities must be positive");
        if (!seen.insert(row.values).second)
            throw DomainError("duplicate tuple in distribution");
        total += row.probability;
    }
    if (total != Rational(1))
        throw DomainError("distribution probabilities sum to " + total.to_string() + ", not 1");
}

EntropicVector entropic_from_distribution(const JointDistribution& d)
{
    const VariableUniverse& u = d.schema();
    EntropicVector h(u);
    const VarSet::Bits size = VarSet::Bits{1} << u.size();
    for (VarSet::Bits s = 1; s < size; ++s) {
        const std::vector<int> cols = VarSet(s).elements();
        std::map<std::vector<std::string>, Rational> marginal;
        for (const auto& row : d.rows()) {
            std::vector<std::string> key;
            key.reserve(cols.size());
            for (int c : cols)
                key.push_back(row.values[static_cast<std::size_t>(c)]);
            marginal[key] += row.probability;
        }
        double entropy = 0.0;
        for (const auto& [key, p] : marginal) {
            const double pd = p.to_double();
            entropy -= pd * std::log2(pd);
        }
        h.set(VarSet(s), entropy == 0.0 ? 0.0 : entropy);
    }
    return h;
}

namespace {

// All upward-closed families of subsets of [k] (the empty set allowed), as
// masks over the 2^k subsets.
std::vector<std::uint64_t> all_upsets(int k)
{
    if (k == 0)
        return {0, 1};
    const std::vector<std::uint64_t> smaller = all_upsets(k - 1);
    const int half = 1 << (k - 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t without : smaller)
        for (std::uint64_t with : smaller)
            if ((without & ~with) == 0)
                out.push_back(without | (with << half));
    return out;
}

}  // namespace

MonotoneBooleanStream::MonotoneBooleanStream(VariableUniverse universe) : universe_(std::move(universe))
{
    if (universe_.size() > kMaxVariables)
        throw DomainError("monotone Boolean enumeration supports at most " +
                          std::to_string(kMaxVariables) + " variables");
    for (std::uint64_t m : all_upsets(universe_.size()))
        if ((m & 1U) == 0)
            masks_.push_back(m);
    std::sort(masks_.begin(), masks_.end());
}

ExactSetFunction MonotoneBooleanStream::function(std::uint64_t mask) const
{
    ExactSetFunction h(universe_);
    const VarSet::Bits size = VarSet::Bits{1} << universe_.size();
    for (VarSet::Bits s = 1; s < size; ++s)
        if ((mask >> s) & 1U)
            h.set(VarSet(s), Rational(1));
    return h;
}

std::optional<ExactSetFunction> MonotoneBooleanStream::next()
{
    if (cursor_ >= masks_.size())
        return std::nullopt;
    return function(masks_[cursor_++]);
}

MonotoneBooleanStream enumerate_monotone_boolean(const VariableUniverse& universe)
{
    return MonotoneBooleanStream(universe);
}

}  // namespace entroplex

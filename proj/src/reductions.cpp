#include "entroplex/reductions.hpp"

#include <algorithm>
#include <set>

namespace entroplex {

namespace {

constexpr std::array<const char*, 3> kColorSuffix{"_r", "_g", "_b"};

void check_clause(const MonSat3Instance::Clause& c, std::size_t n)
{
    for (int v : c)
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw DomainError("clause refers to an unknown variable");
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
        throw DomainError("clause literals must be three distinct variables");
}

VarSet clause_set(const MonSat3Instance::Clause& c)
{
    return VarSet::singleton(c[0]).with(c[1]).with(c[2]);
}

}  // namespace

void MonSat3Instance::validate() const
{
    VariableUniverse check(variables);
    if (positive.empty() && negative.empty())
        throw DomainError("instance has no clauses");
    for (const auto& c : positive)
        check_clause(c, variables.size());
    for (const auto& c : negative)
        check_clause(c, variables.size());
}

void Graph::validate() const
{
    if (vertices.empty())
        throw DomainError("graph has no vertices");
    std::set<std::string> names;
    for (const auto& v : vertices) {
        if (!is_identifier(v))
            throw DomainError("invalid vertex name '" + v + "'");
        if (!names.insert(v).second)
            throw DomainError("duplicate vertex '" + v + "'");
    }
    const auto n = static_cast<int>(vertices.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw DomainError("edge refers to an unknown vertex");
        if (a == b)
            throw DomainError("self-loop on vertex '" + vertices[static_cast<std::size_t>(a)] + "'");
    }
}

Graph Graph::complete(int n)
{
    Graph g;
    for (int i = 0; i < n; ++i)
        g.vertices.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.edges.emplace_back(i, j);
    return g;
}

std::int64_t PartitionInstance::total() const
{
    std::int64_t s = 0;
    for (auto x : items)
        s += x;
    return s;
}

void PartitionInstance::validate() const
{
    if (items.empty())
        throw DomainError("partition instance has no items");
    for (auto x : items)
        if (x < 1)
            throw DomainError("partition items must be positive integers");
    if (total() % 2 != 0)
        throw DomainError("partition instance must have an even total, got " + std::to_string(total()));
}

InequalityExpr from_3dmonsat(const MonSat3Instance& instance)
{
    instance.validate();
    const VariableUniverse u(instance.variables);
    const VarSet all = u.full();
    std::vector<std::pair<Rational, InequalityExpr>> parts;
    for (const auto& c : instance.positive)
        parts.emplace_back(Rational(1), expand_measure(u, CondEntropy{all, clause_set(c)}));
    for (const auto& c : instance.negative)
        parts.emplace_back(Rational(1), expand_measure(u, MultiMutualInfo{clause_set(c)}));
    parts.emplace_back(Rational(-1), expand_measure(u, Entropy{all}));
    return combine(u, parts);
}

InequalityExpr from_3coloring(const Graph& graph)
{
    graph.validate();
    std::vector<std::string> names;
    for (const auto& v : graph.vertices)
        for (const char* suffix : kColorSuffix)
            names.push_back(v + suffix);
    const VariableUniverse u(names);
    const VarSet all = u.full();
    const int n = static_cast<int>(graph.vertices.size());
    const Rational big(2 * n + 1);
    auto var = [](int vertex, int color) { return 3 * vertex + color; };

    std::vector<std::pair<Rational, InequalityExpr>> parts;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < 3; ++c)
            parts.emplace_back(Rational(1), expand_measure(u, Entropy{VarSet::singleton(var(a, c))}));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d)
                if (c != d)
                    parts.emplace_back(big, expand_measure(u, CondEntropy{all, VarSet::singleton(var(a, c)).with(var(a, d))}));
    for (const auto& [a, b] : graph.edges)
        for (int c = 0; c < 3; ++c)
            parts.emplace_back(big, expand_measure(u, CondEntropy{all, VarSet::singleton(var(a, c)).with(var(b, c))}));
    parts.emplace_back(-big, expand_measure(u, Entropy{all}));
    return combine(u, parts);
}

InequalityExpr from_partition(const PartitionInstance& instance)
{
    instance.validate();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < instance.items.size(); ++i)
        names.push_back("A" + std::to_string(i + 1));
    const VariableUniverse u(names);
    const Rational half(instance.total() / 2);
    std::vector<std::pair<Rational, InequalityExpr>> parts;
    parts.emplace_back(half * half - Rational(1), expand_measure(u, Entropy{u.full()}));
    const auto n = static_cast<int>(instance.items.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational w = -Rational(static_cast<long long>(instance.items[static_cast<std::size_t>(i)])) *
                               Rational(static_cast<long long>(instance.items[static_cast<std::size_t>(j)]));
            const VarSet a = VarSet::singleton(i);
            const VarSet b = VarSet::singleton(j);
            parts.emplace_back(w, expand_measure(u, CondEntropy{a, b}));
            parts.emplace_back(w, expand_measure(u, CondEntropy{b, a}));
        }
    return combine(u, parts);
}

bool satisfies(const MonSat3Instance& instance, const std::vector<bool>& assignment)
{
    if (assignment.size() != instance.variables.size())
        throw DomainError("assignment size does not match the instance");
    auto value = [&](int v) { return assignment[static_cast<std::size_t>(v)]; };
    for (const auto& c : instance.positive)
        if (!value(c[0]) && !value(c[1]) && !value(c[2]))
            return false;
    for (const auto& c : instance.negative)
        if (value(c[0]) && value(c[1]) && value(c[2]))
            return false;
    return true;
}

bool sat_oracle(const MonSat3Instance& instance)
{
    instance.validate();
    const std::size_t n = instance.variables.size();
    if (n > static_cast<std::size_t>(kSatOracleCap))
        throw CapExceeded("SAT oracle supports at most " + std::to_string(kSatOracleCap) + " variables");
    std::vector<bool> assignment(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i)
            assignment[i] = (mask >> i) & 1U;
        if (satisfies(instance, assignment))
            return true;
    }
    return false;
}

bool is_proper_coloring(const Graph& graph, const std::vector<int>& colors)
{
    if (colors.size() != graph.vertices.size())
        return false;
    if (std::any_of(colors.begin(), colors.end(), [](int c) { return c < 0 || c > 2; }))
        return false;
    return std::none_of(graph.edges.begin(), graph.edges.end(), [&](const std::pair<int, int>& e) {
        return colors[static_cast<std::size_t>(e.first)] == colors[static_cast<std::size_t>(e.second)];
    });
}

bool coloring_oracle(const Graph& graph)
{
    graph.validate();
    const std::size_t n = graph.vertices.size();
    if (n > static_cast<std::size_t>(kColoringOracleCap))
        throw CapExceeded("coloring oracle supports at most " + std::to_string(kColoringOracleCap) + " vertices");
    std::vector<int> colors(n, 0);
    for (;;) {
        if (is_proper_coloring(graph, colors))
            return true;
        std::size_t i = 0;
        while (i < n && colors[i] == 2)
            colors[i++] = 0;
        if (i == n)
            return false;
        ++colors[i];
    }
}

bool is_equal_split(const PartitionInstance& instance, const std::vector<bool>& side)
{
    if (side.size() != instance.items.size())
        return false;
    std::int64_t in = 0;
    std::int64_t out = 0;
    for (std::size_t i = 0; i < side.size(); ++i)
        (side[i] ? in : out) += instance.items[i];
    return in == out;
}

bool partition_oracle(const PartitionInstance& instance)
{
    instance.validate();
    if (instance.items.size() > static_cast<std::size_t>(kPartitionOracleItems) ||
        instance.total() > kPartitionOracleSum)
        throw CapExceeded("partition oracle supports at most " + std::to_string(kPartitionOracleItems) +
                          " items with sum at most " + std::to_string(kPartitionOracleSum));
    const std::size_t n = instance.items.size();
    std::vector<bool> side(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i)
            side[i] = (mask >> i) & 1U;
        if (is_equal_split(instance, side))
            return true;
    }
    return false;
}

std::vector<bool> decode_assignment(const MonSat3Instance& instance, VarSet step_set)
{
    std::vector<bool> out(instance.variables.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = step_set.contains(static_cast<int>(i));
    return out;
}

std::optional<std::vector<int>> decode_coloring(const Graph& graph, VarSet step_set)
{
    std::vector<int> colors;
    for (std::size_t a = 0; a < graph.vertices.size(); ++a) {
        int found = -1;
        for (int c = 0; c < 3; ++c) {
            if (step_set.contains(3 * static_cast<int>(a) + c))
                continue;
            if (found >= 0)
                return std::nullopt;
            found = c;
        }
        if (found < 0)
            return std::nullopt;
        colors.push_back(found);
    }
    return colors;
}

std::vector<bool> decode_split(const PartitionInstance& instance, VarSet step_set)
{
    std::vector<bool> out(instance.items.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = step_set.contains(static_cast<int>(i));
    return out;
}

}  // namespace entroplex

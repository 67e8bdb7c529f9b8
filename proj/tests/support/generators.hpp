#ifndef ENTROPLEX_TESTS_GENERATORS_HPP
#define ENTROPLEX_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entroplex/bounds.hpp"
#include "entroplex/core_model.hpp"
#include "entroplex/function_zoo.hpp"
#include "entroplex/reductions.hpp"
#include "entroplex/set_function.hpp"
#include "entroplex/validity.hpp"

namespace entroplex::testing {

/// Portable draws on top of mt19937_64 (library distributions differ between vendors).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool coin(int percent = 50) { return static_cast<int>(below(100)) < percent; }

private:
    std::mt19937_64 engine_;
};

inline VariableUniverse letters(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(std::string(1, static_cast<char>('A' + i)));
    return VariableUniverse(names);
}

/// Random integer coefficients in [lo, hi] on a random selection of sets.
inline InequalityExpr random_expr(Rng& rng, const VariableUniverse& u, int lo, int hi, int density = 50)
{
    InequalityExpr::Terms t;
    for (VarSet::Bits s = 1; s < (VarSet::Bits{1} << u.size()); ++s)
        if (rng.coin(density))
            t[VarSet(s)] = Rational(rng.range(lo, hi));
    return InequalityExpr(u, t);
}

/// Independent monotone brute force over all Boolean monotone functions (n <= 5).
inline bool monotone_brute_force(const InequalityExpr& e)
{
    MonotoneBooleanStream stream(e.universe());
    while (auto h = stream.next())
        if (evaluate(e, *h).sign() < 0)
            return false;
    return true;
}

inline Rational random_rational(Rng& rng, int max_num, int max_den)
{
    const int den = rng.range(1, max_den);
    return Rational(rng.range(0, max_num * den), den);
}

inline Query random_query(Rng& rng, int n)
{
    const VariableUniverse u = letters(n);
    std::vector<Atom> atoms;
    VarSet covered;
    const int count = rng.range(1, 3);
    for (int k = 0; k < count || covered != u.full(); ++k) {
        VarSet s(static_cast<VarSet::Bits>(rng.below((VarSet::Bits{1} << n) - 1) + 1));
        if (k >= count)
            s = s | (u.full() - covered);
        atoms.push_back({"R" + std::to_string(k + 1), s});
        covered = covered | s;
    }
    return Query("Q", u, atoms);
}

/// Random guarded constraint set; `simple` bounds the condition size by one,
/// otherwise conditions are arbitrary.
inline GuardedSigma random_sigma(Rng& rng, int n, int max_size, bool simple, int max_b = 3)
{
    Query q = random_query(rng, n);
    std::vector<DegreeConstraint> entries;
    const int size = rng.range(1, max_size);
    for (int k = 0; k < size; ++k) {
        const auto guard = static_cast<std::size_t>(rng.below(q.atoms().size()));
        const std::vector<int> vars = q.atoms()[guard].schema.elements();
        VarSet target;
        VarSet condition;
        for (int v : vars) {
            if (rng.coin(60))
                target = target.with(v);
            else if (rng.coin(50) && (!simple || condition.empty()))
                condition = condition.with(v);
        }
        if (target.empty())
            target = VarSet::singleton(vars[rng.below(vars.size())]) - condition;
        if (target.empty())
            continue;
        entries.push_back({Conditional::make(target, condition), guard, random_rational(rng, max_b, 4)});
    }
    if (entries.empty())
        entries.push_back({Conditional::make(q.atoms()[0].schema, VarSet()), 0, Rational(1)});
    return GuardedSigma(q, entries);
}

inline std::vector<Rational> random_weights(Rng& rng, std::size_t m)
{
    std::vector<Rational> w;
    for (std::size_t k = 0; k < m; ++k)
        w.push_back(rng.coin(20) ? Rational(0) : random_rational(rng, 2, 3));
    return w;
}

inline MonSat3Instance random_monsat(Rng& rng, int n, int positives, int negatives)
{
    MonSat3Instance inst;
    for (int i = 0; i < n; ++i)
        inst.variables.push_back("x" + std::to_string(i + 1));
    auto clause = [&] {
        MonSat3Instance::Clause c{};
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pool[static_cast<std::size_t>(i)] = i;
        for (int k = 0; k < 3; ++k) {
            const auto pick = static_cast<std::size_t>(k) + rng.below(pool.size() - static_cast<std::size_t>(k));
            std::swap(pool[static_cast<std::size_t>(k)], pool[pick]);
            c[static_cast<std::size_t>(k)] = pool[static_cast<std::size_t>(k)];
        }
        return c;
    };
    for (int k = 0; k < positives; ++k)
        inst.positive.push_back(clause());
    for (int k = 0; k < negatives; ++k)
        inst.negative.push_back(clause());
    return inst;
}

/// Both polarities of every triple over a random 5-variable core, minus up to
/// `drop` random clauses. The full family is unsatisfiable: each triple needs a
/// 1 and a 0, so at most two variables of the core may take either value.
inline MonSat3Instance dense_monsat(Rng& rng, int n, int drop)
{
    MonSat3Instance inst;
    for (int i = 0; i < n; ++i)
        inst.variables.push_back("x" + std::to_string(i + 1));
    std::vector<int> core(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        core[static_cast<std::size_t>(i)] = i;
    for (std::size_t k = 0; k < 5; ++k)
        std::swap(core[k], core[k + rng.below(core.size() - k)]);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) {
                const MonSat3Instance::Clause t{core[static_cast<std::size_t>(a)], core[static_cast<std::size_t>(b)],
                                                core[static_cast<std::size_t>(c)]};
                inst.positive.push_back(t);
                inst.negative.push_back(t);
            }
    for (int k = 0; k < drop; ++k) {
        auto& family = rng.coin() ? inst.positive : inst.negative;
        if (family.size() > 1)
            family.erase(family.begin() + static_cast<std::ptrdiff_t>(rng.below(family.size())));
    }
    return inst;
}

/// Every labelled graph on n vertices.
inline std::vector<Graph> all_graphs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        Graph g;
        for (int i = 0; i < n; ++i)
            g.vertices.push_back("v" + std::to_string(i + 1));
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U)
                g.edges.push_back(pairs[k]);
        out.push_back(std::move(g));
    }
    return out;
}

/// Non-decreasing item lists of length 1..max_items with values 1..max_value.
inline std::vector<PartitionInstance> all_multisets(int max_items, int max_value)
{
    std::vector<PartitionInstance> out;
    std::vector<std::int64_t> current;
    auto rec = [&](auto&& self, int lo) -> void {
        if (!current.empty())
            out.push_back({current});
        if (static_cast<int>(current.size()) == max_items)
            return;
        for (int v = lo; v <= max_value; ++v) {
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace entroplex::testing

#endif

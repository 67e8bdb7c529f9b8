#include "entroplex/validity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace entroplex {

std::string to_string(Semantics s)
{
    switch (s) {
    case Semantics::Modular: return "modular";
    case Semantics::Normal: return "normal";
    case Semantics::Step: return "step";
    case Semantics::Polymatroid: return "polymatroid";
    case Semantics::Monotone: return "monotone";
    case Semantics::Entropic: return "entropic";
    case Semantics::Auto: return "auto";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view name)
{
    for (Semantics s : {Semantics::Modular, Semantics::Normal, Semantics::Step, Semantics::Polymatroid,
                        Semantics::Monotone, Semantics::Entropic, Semantics::Auto})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

InequalityExpr Decomposition::recombine(const VariableUniverse& universe) const
{
    InequalityExpr::Terms t;
    for (const auto& [w, ax] : terms) {
        t[ax.sup] += w;
        if (ax.kind == Axiom::Kind::Mono)
            t[ax.sub] -= w;
    }
    return InequalityExpr(universe, t);
}

bool Decomposition::separable() const
{
    std::set<VarSet> positive;
    std::set<VarSet> negative;
    for (const auto& [w, ax] : terms) {
        if (w.is_zero())
            continue;
        if (ax.kind == Axiom::Kind::Mono && ax.sup == ax.sub)
            continue;
        positive.insert(ax.sup);
        if (ax.kind == Axiom::Kind::Mono)
            negative.insert(ax.sub);
    }
    return std::none_of(positive.begin(), positive.end(), [&](VarSet s) { return negative.count(s) > 0; });
}

ExactSetFunction witness_function(const VariableUniverse& universe, const Witness& w)
{
    struct Visitor {
        const VariableUniverse& u;
        ExactSetFunction operator()(const StepWitness& s) const { return step_function(u, s.set); }
        ExactSetFunction operator()(const BooleanMonotoneWitness& b) const { return upset_indicator(u, b.generators); }
        ExactSetFunction operator()(const PolymatroidWitness& p) const { return p.function; }
        ExactSetFunction operator()(const BasicModularWitness& m) const { return basic_modular(u, m.variable); }
    };
    return std::visit(Visitor{universe}, w);
}

std::string witness_kind(const Witness& w)
{
    struct Visitor {
        std::string operator()(const StepWitness&) const { return "step"; }
        std::string operator()(const BooleanMonotoneWitness&) const { return "boolean_monotone"; }
        std::string operator()(const PolymatroidWitness&) const { return "polymatroid"; }
        std::string operator()(const BasicModularWitness&) const { return "basic_modular"; }
    };
    return std::visit(Visitor{}, w);
}

namespace {

Verdict valid_verdict(std::string method, std::vector<Semantics> holds_for)
{
    Verdict v;
    v.valid = true;
    v.method = std::move(method);
    v.holds_for = std::move(holds_for);
    return v;
}

Verdict invalid_verdict(std::string method, std::vector<Semantics> holds_for, std::optional<Witness> w)
{
    Verdict v;
    v.valid = false;
    v.method = std::move(method);
    v.holds_for = std::move(holds_for);
    v.witness = std::move(w);
    v.witness_missing = !v.witness.has_value();
    return v;
}

// Value of the expression on s^V: the sum of the coefficients of the sets meeting V.
Rational step_value(const InequalityExpr& expr, VarSet v)
{
    Rational total;
    for (const auto& [s, c] : expr.terms())
        if (s.intersects(v))
            total += c;
    return total;
}

}  // namespace

Verdict check_modular(const InequalityExpr& expr)
{
    const int n = expr.universe().size();
    for (int a = 0; a < n; ++a)
        if (step_value(expr, VarSet::singleton(a)).sign() < 0)
            return invalid_verdict("modular", {Semantics::Modular}, BasicModularWitness{a});
    return valid_verdict("modular", {Semantics::Modular});
}

Verdict check_step(const InequalityExpr& expr)
{
    const int n = expr.universe().size();
    if (n > universe_cap())
        throw CapExceeded("step enumeration over " + std::to_string(n) + " variables exceeds the cap");
    const VarSet::Bits size = VarSet::Bits{1} << n;
    Verdict v = valid_verdict("step", {Semantics::Step, Semantics::Normal});
    if (expr.is_zero())
        return v;
    for (VarSet::Bits bits = 1; bits < size; ++bits) {
        if (step_value(expr, VarSet(bits)).sign() < 0) {
            Verdict out = invalid_verdict("step", {Semantics::Step, Semantics::Normal}, StepWitness{VarSet(bits)});
            out.iterations = bits;
            return out;
        }
    }
    v.iterations = size - 1;
    return v;
}

namespace {

// Bipartite graph of the augmenting-path fixpoint with nodes grouped by their set; nodes of one group
// are interchangeable, so adjacency is stored per group.
class FixpointGraph {
public:
    explicit FixpointGraph(const SetRep& rep)
    {
        for (const auto& [s, k] : rep.positives) {
            plus_sets_.push_back(s);
            plus_begin_.push_back(plus_nodes_);
            plus_nodes_ += k;
        }
        plus_begin_.push_back(plus_nodes_);
        for (const auto& [s, k] : rep.negatives) {
            minus_sets_.push_back(s);
            minus_begin_.push_back(minus_nodes_);
            minus_nodes_ += k;
        }
        minus_begin_.push_back(minus_nodes_);

        forward_.resize(plus_sets_.size());
        backward_groups_.resize(minus_sets_.size());
        for (std::size_t gp = 0; gp < plus_sets_.size(); ++gp)
            for (std::size_t gm = 0; gm < minus_sets_.size(); ++gm)
                if (minus_sets_[gm].subset_of(plus_sets_[gp])) {
                    forward_[gp].push_back(gm);
                    backward_groups_[gm].push_back(gp);
                }

        match_plus_.assign(static_cast<std::size_t>(plus_nodes_), -1);
        match_minus_.assign(static_cast<std::size_t>(minus_nodes_), -1);
        plus_free_ = std::vector<std::int64_t>(plus_begin_.begin(), plus_begin_.end() - 1);
        minus_free_ = std::vector<std::int64_t>(minus_begin_.begin(), minus_begin_.end() - 1);
        plus_group_.resize(static_cast<std::size_t>(plus_nodes_));
        for (std::size_t g = 0; g < plus_sets_.size(); ++g)
            for (std::int64_t p = plus_begin_[g]; p < plus_begin_[g + 1]; ++p)
                plus_group_[static_cast<std::size_t>(p)] = g;
    }

    // One loop iteration: find a path from S_0 to S_1 and flip it. False if none exists.
    bool augment()
    {
        std::vector<std::int64_t> parent_minus(static_cast<std::size_t>(minus_nodes_), -1);
        std::vector<std::int64_t> parent_plus(static_cast<std::size_t>(plus_nodes_), -2);
        std::vector<char> explored(minus_sets_.size(), 0);
        std::deque<std::int64_t> queue;

        // Free nodes of a group form a suffix; its first node stands for all of them.
        for (std::size_t g = 0; g < plus_sets_.size(); ++g)
            if (plus_free_[g] < plus_begin_[g + 1]) {
                parent_plus[static_cast<std::size_t>(plus_free_[g])] = -1;
                queue.push_back(plus_free_[g]);
            }

        while (!queue.empty()) {
            const std::int64_t p = queue.front();
            queue.pop_front();
            for (std::size_t gm : forward_[plus_group_[static_cast<std::size_t>(p)]]) {
                if (minus_free_[gm] < minus_begin_[gm + 1]) {
                    const std::int64_t q = minus_free_[gm]++;
                    parent_minus[static_cast<std::size_t>(q)] = p;
                    flip(q, parent_minus, parent_plus);
                    return true;
                }
                if (explored[gm])
                    continue;
                explored[gm] = 1;
                for (std::int64_t q = minus_begin_[gm]; q < minus_begin_[gm + 1]; ++q) {
                    parent_minus[static_cast<std::size_t>(q)] = p;
                    const std::int64_t next = match_minus_[static_cast<std::size_t>(q)];
                    if (parent_plus[static_cast<std::size_t>(next)] == -2) {
                        parent_plus[static_cast<std::size_t>(next)] = q;
                        queue.push_back(next);
                    }
                }
            }
        }
        return false;
    }

    std::int64_t free_minus() const
    {
        std::int64_t n = 0;
        for (std::size_t g = 0; g < minus_sets_.size(); ++g)
            n += minus_begin_[g + 1] - minus_free_[g];
        return n;
    }

    std::int64_t backward_edges() const
    {
        return std::count_if(match_minus_.begin(), match_minus_.end(), [](std::int64_t p) { return p >= 0; });
    }

    // Backward edges become Mono axioms, free S+ nodes NonNeg axioms, each of weight 1/scale.
    Decomposition decomposition(const Rational& unit) const
    {
        std::map<Axiom, std::int64_t> counts;
        for (std::size_t gm = 0; gm < minus_sets_.size(); ++gm)
            for (std::int64_t q = minus_begin_[gm]; q < minus_begin_[gm + 1]; ++q) {
                const std::int64_t p = match_minus_[static_cast<std::size_t>(q)];
                if (p >= 0)
                    ++counts[Axiom::mono(plus_sets_[plus_group_[static_cast<std::size_t>(p)]], minus_sets_[gm])];
            }
        for (std::size_t g = 0; g < plus_sets_.size(); ++g)
            if (std::int64_t free = plus_begin_[g + 1] - plus_free_[g]; free > 0)
                counts[Axiom::non_neg(plus_sets_[g])] += free;
        Decomposition d;
        for (const auto& [ax, k] : counts)
            d.terms.emplace_back(unit * Rational(static_cast<long long>(k)), ax);
        return d;
    }

    // Sets of S- nodes from which S_1 is reachable (reverse search from S_1).
    std::vector<VarSet> connected_to_free_minus() const
    {
        std::vector<char> minus_seen(minus_sets_.size(), 0);
        std::vector<char> plus_seen(plus_sets_.size(), 0);
        std::deque<std::size_t> minus_queue;
        for (std::size_t g = 0; g < minus_sets_.size(); ++g)
            if (minus_free_[g] < minus_begin_[g + 1]) {
                minus_seen[g] = 1;
                minus_queue.push_back(g);
            }
        while (!minus_queue.empty()) {
            const std::size_t gm = minus_queue.front();
            minus_queue.pop_front();
            for (std::size_t gp : backward_groups_[gm]) {
                if (plus_seen[gp])
                    continue;
                plus_seen[gp] = 1;
                for (std::int64_t p = plus_begin_[gp]; p < plus_begin_[gp + 1]; ++p) {
                    const std::int64_t q = match_plus_[static_cast<std::size_t>(p)];
                    if (q < 0)
                        continue;
                    const std::size_t g = minus_group_of(q);
                    if (!minus_seen[g]) {
                        minus_seen[g] = 1;
                        minus_queue.push_back(g);
                    }
                }
            }
        }
        std::vector<VarSet> out;
        for (std::size_t g = 0; g < minus_sets_.size(); ++g)
            if (minus_seen[g])
                out.push_back(minus_sets_[g]);
        return out;
    }

private:
    void flip(std::int64_t q, const std::vector<std::int64_t>& parent_minus,
              const std::vector<std::int64_t>& parent_plus)
    {
        while (q >= 0) {
            const std::int64_t p = parent_minus[static_cast<std::size_t>(q)];
            const std::int64_t previous = parent_plus[static_cast<std::size_t>(p)];
            match_minus_[static_cast<std::size_t>(q)] = p;
            match_plus_[static_cast<std::size_t>(p)] = q;
            if (previous == -1) {
                ++plus_free_[plus_group_[static_cast<std::size_t>(p)]];
                break;
            }
            q = previous;
        }
    }

    std::size_t minus_group_of(std::int64_t q) const
    {
        auto it = std::upper_bound(minus_begin_.begin(), minus_begin_.end(), q);
        return static_cast<std::size_t>(it - minus_begin_.begin()) - 1;
    }

    std::vector<VarSet> plus_sets_;
    std::vector<VarSet> minus_sets_;
    std::vector<std::int64_t> plus_begin_;
    std::vector<std::int64_t> minus_begin_;
    std::int64_t plus_nodes_ = 0;
    std::int64_t minus_nodes_ = 0;
    std::vector<std::vector<std::size_t>> forward_;
    std::vector<std::vector<std::size_t>> backward_groups_;
    std::vector<std::size_t> plus_group_;
    std::vector<std::int64_t> match_plus_;
    std::vector<std::int64_t> match_minus_;
    std::vector<std::int64_t> plus_free_;
    std::vector<std::int64_t> minus_free_;
};

}  // namespace

Verdict check_monotone_fixpoint(const InequalityExpr& expr, std::int64_t cap)
{
    const SetRep rep = set_representation(expr, cap);
    FixpointGraph graph(rep);
    std::size_t iterations = 0;
    while (graph.augment())
        ++iterations;

    Verdict v;
    v.method = "monotone_fixpoint";
    v.holds_for = {Semantics::Monotone};
    v.iterations = iterations;
    if (graph.free_minus() == 0) {
        v.valid = true;
        v.certificate = graph.decomposition(Rational(1) / Rational(mpq_class(rep.scale)));
        return v;
    }
    v.valid = false;
    v.witness = BooleanMonotoneWitness{minimal_sets(graph.connected_to_free_minus())};
    return v;
}

MonotoneDistributionLP monotone_distribution_lp(const TwoSidedInequality& phi)
{
    MonotoneDistributionLP out;
    for (std::size_t i = 0; i < phi.rhs.size(); ++i)
        for (std::size_t j = 0; j < phi.lhs.size(); ++j)
            if (phi.rhs[i].set.subset_of(phi.lhs[j].set))
                out.pairs.emplace_back(i, j);

    const auto dim = static_cast<Eigen::Index>(out.pairs.size());
    out.problem = LPProblem(dim, Sense::Minimize);
    for (std::size_t i = 0; i < phi.rhs.size(); ++i) {
        VectorQ row = VectorQ::Zero(dim);
        for (Eigen::Index k = 0; k < dim; ++k)
            if (out.pairs[static_cast<std::size_t>(k)].first == i)
                row(k) = Rational(1);
        out.problem.add_constraint(std::move(row), Relation::GreaterEqual, phi.rhs[i].weight);
    }
    for (std::size_t j = 0; j < phi.lhs.size(); ++j) {
        VectorQ row = VectorQ::Zero(dim);
        for (Eigen::Index k = 0; k < dim; ++k)
            if (out.pairs[static_cast<std::size_t>(k)].second == j)
                row(k) = Rational(1);
        out.problem.add_constraint(std::move(row), Relation::LessEqual, phi.lhs[j].weight);
    }
    return out;
}

namespace {

// Round to a coarser integer grid that fits the cap, tightening the inequality
// (positive coefficients down, negative magnitudes up).
std::optional<InequalityExpr> coarse_integer_version(const InequalityExpr& expr, std::int64_t cap)
{
    Rational mass;
    for (const auto& [s, c] : expr.terms())
        mass += c.abs();
    const auto terms = static_cast<long long>(expr.terms().size());
    if (mass.is_zero() || cap <= terms)
        return std::nullopt;
    const Rational room = Rational(static_cast<long long>(cap - terms)) / mass;
    const mpz_class k = room.numerator() / room.denominator();
    if (k < 1)
        return std::nullopt;
    const Rational scale{mpq_class(k)};
    InequalityExpr::Terms t;
    for (const auto& [s, c] : expr.terms()) {
        const Rational scaled = c * scale;
        // Floor moves positives down and negatives away from zero.
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
        t[s] = Rational(mpq_class(q));
    }
    return InequalityExpr(expr.universe(), t);
}

std::optional<Witness> recover_monotone_witness(const InequalityExpr& expr)
{
    auto refutes = [&](const Witness& w) {
        return evaluate(expr, witness_function(expr.universe(), w)).sign() < 0;
    };
    try {
        Verdict v = check_monotone_fixpoint(expr);
        if (!v.valid && v.witness && refutes(*v.witness))
            return v.witness;
    } catch (const CapExceeded&) {
        if (auto coarse = coarse_integer_version(expr, kDefaultMultiplicityCap)) {
            try {
                Verdict v = check_monotone_fixpoint(*coarse);
                if (!v.valid && v.witness && refutes(*v.witness))
                    return v.witness;
            } catch (const CapExceeded&) {
            }
        }
    }
    if (expr.universe().size() <= MonotoneBooleanStream::kMaxVariables) {
        MonotoneBooleanStream stream(expr.universe());
        for (std::uint64_t mask : stream.masks()) {
            ExactSetFunction h = stream.function(mask);
            if (evaluate(expr, h).sign() < 0) {
                std::vector<VarSet> family;
                for (VarSet::Bits s = 1; s < (VarSet::Bits{1} << expr.universe().size()); ++s)
                    if ((mask >> s) & 1U)
                        family.push_back(VarSet(s));
                return BooleanMonotoneWitness{minimal_sets(family)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Verdict check_monotone_lp(const InequalityExpr& expr)
{
    const TwoSidedInequality phi = TwoSidedInequality::from_expr(expr);
    MonotoneDistributionLP lp = monotone_distribution_lp(phi);
    const FeasibilityResult result = feasible(lp.problem);

    Verdict v;
    v.method = "monotone_lp";
    v.holds_for = {Semantics::Monotone};
    v.lp_rows = lp.problem.constraints.size();
    v.lp_columns = static_cast<std::size_t>(lp.problem.dimension());
    if (!result.feasible) {
        v.valid = false;
        v.witness = recover_monotone_witness(expr);
        v.witness_missing = !v.witness.has_value();
        return v;
    }

    // Trim over-distribution so every RHS term is covered exactly.
    VectorQ x = *result.point;
    for (std::size_t i = 0; i < phi.rhs.size(); ++i) {
        Rational excess = -phi.rhs[i].weight;
        for (Eigen::Index k = 0; k < x.size(); ++k)
            if (lp.pairs[static_cast<std::size_t>(k)].first == i)
                excess += x(k);
        for (Eigen::Index k = 0; k < x.size() && excess.sign() > 0; ++k) {
            if (lp.pairs[static_cast<std::size_t>(k)].first != i)
                continue;
            Rational cut = std::min(excess, x(k));
            x(k) -= cut;
            excess -= cut;
        }
    }
    Decomposition d;
    std::vector<Rational> used(phi.lhs.size());
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        if (x(k).is_zero())
            continue;
        const auto [i, j] = lp.pairs[static_cast<std::size_t>(k)];
        d.terms.emplace_back(x(k), Axiom::mono(phi.lhs[j].set, phi.rhs[i].set));
        used[j] += x(k);
    }
    for (std::size_t j = 0; j < phi.lhs.size(); ++j) {
        Rational rest = phi.lhs[j].weight - used[j];
        if (rest.sign() > 0)
            d.terms.emplace_back(rest, Axiom::non_neg(phi.lhs[j].set));
    }
    v.valid = true;
    v.certificate = std::move(d);
    return v;
}

std::vector<InequalityExpr> elemental_inequalities(const VariableUniverse& universe)
{
    const int n = universe.size();
    const VarSet full = universe.full();
    std::vector<InequalityExpr> out;
    for (int i = 0; i < n; ++i)
        out.push_back(expand_measure(universe, CondEntropy{VarSet::singleton(i), full.without(i)}));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const VarSet rest = full.without(i).without(j);
            const VarSet::Bits r = rest.bits();
            // Every subset K of the remaining variables, the empty set included.
            for (VarSet::Bits k = r;; k = (k - 1) & r) {
                out.push_back(expand_measure(
                    universe, CondMutualInfo{VarSet::singleton(i), VarSet::singleton(j), VarSet(k)}));
                if (k == 0)
                    break;
            }
        }
    return out;
}

LPProblem polymatroid_cone_lp(const VariableUniverse& universe, Sense sense)
{
    const Eigen::Index dim = (Eigen::Index{1} << universe.size()) - 1;
    LPProblem lp(dim, sense);
    for (const InequalityExpr& e : elemental_inequalities(universe)) {
        VectorQ row = VectorQ::Zero(dim);
        for (const auto& [s, c] : e.terms())
            row(static_cast<Eigen::Index>(s.bits()) - 1) = c;
        lp.add_constraint(std::move(row), Relation::GreaterEqual, Rational(0));
    }
    return lp;
}

Verdict check_polymatroid(const InequalityExpr& expr)
{
    const VariableUniverse& u = expr.universe();
    if (u.size() > kPolymatroidCap)
        throw CapExceeded("polymatroid LP supports at most " + std::to_string(kPolymatroidCap) + " variables");
    Verdict v = valid_verdict("polymatroid_lp", {Semantics::Polymatroid});
    if (expr.is_zero())
        return v;

    LPProblem lp = polymatroid_cone_lp(u, Sense::Minimize);
    const Eigen::Index dim = lp.dimension();
    for (const auto& [s, c] : expr.terms())
        lp.objective(static_cast<Eigen::Index>(s.bits()) - 1) = c;
    // The cone is invariant under scaling; h(full) <= 1 bounds every coordinate.
    VectorQ norm = VectorQ::Zero(dim);
    norm(dim - 1) = Rational(1);
    lp.add_constraint(std::move(norm), Relation::LessEqual, Rational(1));

    const LPResult r = solve(lp);
    v.lp_rows = lp.constraints.size();
    v.lp_columns = static_cast<std::size_t>(dim);
    v.lp_pivots = r.pivots;
    if (r.status != LPStatus::Optimal)
        throw std::logic_error("normalised polymatroid LP must have an optimum");
    if (r.value.sign() >= 0)
        return v;

    ExactSetFunction h(u);
    for (Eigen::Index k = 0; k < dim; ++k)
        h.set(VarSet(static_cast<VarSet::Bits>(k + 1)), r.point(k));
    v.valid = false;
    v.witness = PolymatroidWitness{std::move(h)};
    return v;
}

AReduction a_reduction(const TwoSidedInequality& phi, int variable)
{
    const int n = phi.universe.size();
    if (variable < 0 || variable >= n)
        throw DomainError("reduction variable outside the universe");
    AReduction out;
    for (const auto& t : phi.lhs)
        if (t.set.contains(variable))
            out.c_a += t.weight;
    for (const auto& t : phi.rhs)
        if (t.set.contains(variable))
            out.d_a += t.weight;

    out.reduced.universe = phi.universe.without(variable);
    const VarSet rest = phi.universe.full().without(variable).drop_index(variable);
    const Rational net = out.c_a - out.d_a;
    if (!rest.empty() && net.sign() > 0)
        out.reduced.lhs.push_back({rest, net});
    for (const auto& t : phi.lhs)
        if (!t.set.contains(variable))
            out.reduced.lhs.push_back({t.set.drop_index(variable), t.weight});
    for (const auto& t : phi.rhs)
        if (!t.set.contains(variable))
            out.reduced.rhs.push_back({t.set.drop_index(variable), t.weight});
    if (!rest.empty() && net.sign() < 0)
        out.reduced.rhs.push_back({rest, -net});
    return out;
}

bool is_simple_form(const TwoSidedInequality& phi)
{
    const VarSet full = phi.universe.full();
    return std::all_of(phi.rhs.begin(), phi.rhs.end(),
                       [&](const WeightedSet& t) { return t.set.size() == 1 || t.set == full; });
}

namespace {

// Lifts a set over universe-minus-`variable` back to the full universe.
VarSet insert_index(VarSet s, int variable)
{
    const VarSet::Bits b = s.bits();
    const VarSet::Bits low = b & ((VarSet::Bits{1} << variable) - 1);
    const VarSet::Bits high = (b >> variable) << (variable + 1);
    return VarSet(low | high);
}

}  // namespace

Verdict check_simple_sigma(const TwoSidedInequality& phi, Semantics target)
{
    if (target == Semantics::Modular || target == Semantics::Monotone)
        throw DomainError("the simple-form procedure does not decide validity over " + to_string(target) +
                          " functions");
    const VarSet full = phi.universe.full();
    for (const auto& t : phi.rhs)
        if (!(t.set.size() == 1 || t.set == full))
            throw FormError("right-hand side set {" + phi.universe.format(t.set) +
                            "} is neither a singleton nor the full variable set");

    const std::vector<Semantics> classes{Semantics::Step, Semantics::Normal, Semantics::Entropic,
                                         Semantics::Polymatroid};
    Verdict v = valid_verdict("simple_sigma", classes);
    const InequalityExpr whole = phi.to_expr();
    const int n = phi.universe.size();
    for (int a = 0; a < n; ++a) {
        AReduction red = a_reduction(phi, a);
        if (red.c_a < red.d_a)
            return invalid_verdict("simple_sigma", classes, StepWitness{VarSet::singleton(a)});
        if (red.reduced.universe.size() == 0)
            continue;
        const InequalityExpr reduced = red.reduced.to_expr();
        Verdict sub = check_monotone_lp(reduced);
        v.lp_rows += sub.lp_rows;
        v.lp_columns += sub.lp_columns;
        ++v.iterations;
        if (sub.valid)
            continue;

        // Singletons valued 1 by the monotone witness give a step witness of the
        // reduction; adding the eliminated variable lifts it to the original.
        std::optional<VarSet> reduced_step;
        if (sub.witness) {
            const ExactSetFunction h = witness_function(red.reduced.universe, *sub.witness);
            VarSet ones;
            for (int b = 0; b < red.reduced.universe.size(); ++b)
                if (h(VarSet::singleton(b)) == Rational(1))
                    ones = ones.with(b);
            if (!ones.empty())
                reduced_step = ones;
        }
        if (!reduced_step) {
            Verdict steps = check_step(reduced);
            if (steps.witness)
                reduced_step = std::get<StepWitness>(*steps.witness).set;
        }
        std::optional<Witness> w;
        if (reduced_step) {
            const VarSet lifted = insert_index(*reduced_step, a).with(a);
            if (evaluate(whole, step_function(phi.universe, lifted)).sign() < 0)
                w = StepWitness{lifted};
        }
        Verdict out = invalid_verdict("simple_sigma", classes, w);
        out.lp_rows = v.lp_rows;
        out.lp_columns = v.lp_columns;
        out.iterations = v.iterations;
        return out;
    }
    return v;
}

Verdict check(const InequalityExpr& expr, Semantics semantics)
{
    switch (semantics) {
    case Semantics::Modular:
        return check_modular(expr);
    case Semantics::Normal:
    case Semantics::Step:
        return check_step(expr);
    case Semantics::Monotone:
        return check_monotone_lp(expr);
    case Semantics::Polymatroid:
        return check_polymatroid(expr);
    case Semantics::Entropic: {
        const TwoSidedInequality phi = TwoSidedInequality::from_expr(expr);
        if (!is_simple_form(phi))
            throw Unsupported("validity over entropic functions is only decided for inequalities whose "
                              "right-hand sets are singletons or the full variable set");
        return check_simple_sigma(phi, Semantics::Entropic);
    }
    case Semantics::Auto: {
        const TwoSidedInequality phi = TwoSidedInequality::from_expr(expr);
        if (is_simple_form(phi))
            return check_simple_sigma(phi);
        if (expr.universe().size() <= kPolymatroidCap)
            return check_polymatroid(expr);
        return check_step(expr);
    }
    }
    throw DomainError("unknown semantics");
}

}  // namespace entroplex

#include "entroplex/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace entroplex {

Query::Query(std::string name, VariableUniverse universe, std::vector<Atom> atoms)
    : name_(std::move(name)), universe_(std::move(universe)), atoms_(std::move(atoms))
{
    std::set<std::string> names;
    VarSet covered;
    for (const Atom& a : atoms_) {
        if (!is_identifier(a.relation))
            throw DomainError("invalid relation name '" + a.relation + "'");
        if (!names.insert(a.relation).second)
            throw DomainError("relation '" + a.relation + "' occurs twice; queries must be self-join-free");
        if (!universe_.contains(a.schema))
            throw DomainError("atom '" + a.relation + "' uses variables outside the query");
        covered = covered | a.schema;
    }
    if (covered != universe_.full())
        throw DomainError("query variables must be exactly the union of the atom schemas");
}

std::optional<std::size_t> Query::find_atom(std::string_view relation) const
{
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i].relation == relation)
            return i;
    return std::nullopt;
}

Conditional Conditional::make(VarSet target, VarSet condition)
{
    Conditional c{target - condition, condition};
    if (c.target.empty())
        throw DomainError("conditional target is empty after removing the condition");
    return c;
}

GuardedSigma::GuardedSigma(Query query, std::vector<DegreeConstraint> entries)
    : query_(std::move(query)), entries_(std::move(entries))
{
    for (const DegreeConstraint& e : entries_) {
        if (e.sigma.target.empty() || e.sigma.target.intersects(e.sigma.condition))
            throw DomainError("conditional must have a nonempty target disjoint from its condition");
        if (e.guard >= query_.atoms().size())
            throw DomainError("guard index out of range");
        if (!e.sigma.joint().subset_of(query_.atoms()[e.guard].schema))
            throw DomainError("conditional (" + universe().format(e.sigma.target) + " | " +
                              universe().format(e.sigma.condition) + ") is not guarded by " +
                              query_.atoms()[e.guard].relation);
        if (e.log_degree.sign() < 0)
            throw DomainError("log-degree values must be non-negative");
    }
}

std::size_t GuardedSigma::infer_guard(const Query& query, const Conditional& sigma)
{
    for (std::size_t i = 0; i < query.atoms().size(); ++i)
        if (sigma.joint().subset_of(query.atoms()[i].schema))
            return i;
    throw DomainError("no atom guards (" + query.universe().format(sigma.target) + " | " +
                      query.universe().format(sigma.condition) + ")");
}

std::vector<Conditional> GuardedSigma::conditionals() const
{
    std::vector<Conditional> out;
    for (const auto& e : entries_)
        out.push_back(e.sigma);
    return out;
}

std::vector<Rational> GuardedSigma::log_degrees() const
{
    std::vector<Rational> out;
    for (const auto& e : entries_)
        out.push_back(e.log_degree);
    return out;
}

double BoundResult::size_bound() const
{
    if (!value)
        return std::numeric_limits<double>::infinity();
    return std::exp2(value->to_double());
}

bool is_acyclic(const std::vector<Conditional>& sigma)
{
    std::map<int, std::set<int>> edges;
    for (const Conditional& c : sigma)
        for (int a : c.condition.elements())
            for (int b : (c.target - c.condition).elements())
                edges[a].insert(b);
    // 0 = unseen, 1 = on stack, 2 = done.
    std::map<int, int> state;
    std::function<bool(int)> cyclic = [&](int v) {
        state[v] = 1;
        for (int w : edges[v]) {
            if (state[w] == 1)
                return true;
            if (state[w] == 0 && cyclic(w))
                return true;
        }
        state[v] = 2;
        return false;
    };
    for (const auto& [v, out] : edges)
        if (state[v] == 0 && cyclic(v))
            return false;
    return true;
}

bool is_simple(const std::vector<Conditional>& sigma)
{
    return std::all_of(sigma.begin(), sigma.end(), [](const Conditional& c) { return c.condition.size() <= 1; });
}

namespace {

void check_weights(const std::vector<Conditional>& sigma, const std::vector<Rational>& weights)
{
    if (weights.size() != sigma.size())
        throw DomainError("expected " + std::to_string(sigma.size()) + " weights, got " +
                          std::to_string(weights.size()));
    for (const Rational& w : weights)
        if (w.sign() < 0)
            throw DomainError("weights must be non-negative");
}

}  // namespace

InequalityExpr sigma_inequality(const VariableUniverse& universe, const std::vector<Conditional>& sigma,
                                const std::vector<Rational>& weights)
{
    check_weights(sigma, weights);
    std::vector<std::pair<Rational, InequalityExpr>> parts;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        parts.emplace_back(weights[i], expand_measure(universe, CondEntropy{sigma[i].target, sigma[i].condition}));
    parts.emplace_back(Rational(-1), expand_measure(universe, Entropy{universe.full()}));
    return combine(universe, parts);
}

TwoSidedInequality sigma_two_sided(const VariableUniverse& universe, const std::vector<Conditional>& sigma,
                                   const std::vector<Rational>& weights)
{
    check_weights(sigma, weights);
    TwoSidedInequality phi;
    phi.universe = universe;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (weights[i].is_zero())
            continue;
        phi.lhs.push_back({sigma[i].joint(), weights[i]});
        if (!sigma[i].condition.empty())
            phi.rhs.push_back({sigma[i].condition, weights[i]});
    }
    if (universe.size() > 0)
        phi.rhs.push_back({universe.full(), Rational(1)});
    return phi;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational total;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += a[i] * b[i];
    return total;
}

// Minimises b.w over w >= 0 subject to row . w >= 1 for every row.
BoundResult covering_lp(const GuardedSigma& sigma, const std::vector<std::vector<Rational>>& rows,
                        std::string method)
{
    const auto m = static_cast<Eigen::Index>(sigma.size());
    LPProblem lp(m, Sense::Minimize);
    for (Eigen::Index k = 0; k < m; ++k)
        lp.objective(k) = sigma.entries()[static_cast<std::size_t>(k)].log_degree;
    for (const auto& r : rows) {
        VectorQ row(m);
        for (Eigen::Index k = 0; k < m; ++k)
            row(k) = r[static_cast<std::size_t>(k)];
        lp.add_constraint(std::move(row), Relation::GreaterEqual, Rational(1));
    }
    BoundResult out;
    out.method = std::move(method);
    out.lp_rows = lp.constraints.size();
    out.lp_columns = static_cast<std::size_t>(m);
    const LPResult r = solve(lp);
    out.lp_pivots = r.pivots;
    if (r.status == LPStatus::Infeasible)
        return out;
    if (r.status != LPStatus::Optimal)
        throw std::logic_error("covering LP with non-negative costs cannot be unbounded");
    out.value = r.value;
    for (Eigen::Index k = 0; k < m; ++k)
        out.weights.push_back(r.point(k));
    return out;
}

void reverify(const GuardedSigma& sigma, const BoundResult& result, Semantics semantics)
{
    if (result.infinite())
        return;
    const InequalityExpr e = sigma_inequality(sigma.universe(), sigma.conditionals(), result.weights);
    if (!check(e, semantics).valid)
        throw std::logic_error("bound weights fail the " + to_string(semantics) + " validity re-check");
    if (dot(result.weights, sigma.log_degrees()) != *result.value)
        throw std::logic_error("bound value does not match its weights");
}

}  // namespace

BoundResult logbound_modular(const GuardedSigma& sigma)
{
    const int n = sigma.universe().size();
    std::vector<std::vector<Rational>> rows;
    for (int a = 0; a < n; ++a) {
        std::vector<Rational> row;
        for (const auto& e : sigma.entries())
            row.push_back(Rational(e.sigma.target.contains(a) ? 1 : 0));
        rows.push_back(std::move(row));
    }
    BoundResult out = covering_lp(sigma, rows, "modular");
    reverify(sigma, out, Semantics::Modular);
    return out;
}

BoundResult logbound_step(const GuardedSigma& sigma)
{
    const int n = sigma.universe().size();
    if (n > kStepBoundCap)
        throw CapExceeded("step bound supports at most " + std::to_string(kStepBoundCap) + " variables");
    const std::size_t m = sigma.size();
    if (m > 63)
        throw CapExceeded("step bound supports at most 63 constraints");

    // s^V(sigma) = 1 iff V meets U V_sigma but not U; keep only minimal supports.
    std::set<std::uint64_t> supports;
    for (VarSet::Bits bits = 1; bits < (VarSet::Bits{1} << n); ++bits) {
        const VarSet v(bits);
        std::uint64_t support = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const Conditional& c = sigma.entries()[k].sigma;
            if (v.intersects(c.joint()) && !v.intersects(c.condition))
                support |= std::uint64_t{1} << k;
        }
        supports.insert(support);
    }
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t s : supports) {
        const bool dominated = std::any_of(supports.begin(), supports.end(),
                                           [&](std::uint64_t t) { return t != s && (t & ~s) == 0; });
        if (!dominated)
            minimal.push_back(s);
    }
    std::vector<std::vector<Rational>> rows;
    for (std::uint64_t s : minimal) {
        std::vector<Rational> row;
        for (std::size_t k = 0; k < m; ++k)
            row.push_back(Rational(((s >> k) & 1U) ? 1 : 0));
        rows.push_back(std::move(row));
    }
    BoundResult out = covering_lp(sigma, rows, "step");
    reverify(sigma, out, Semantics::Step);
    return out;
}

BoundResult logbound_polymatroid_dual(const GuardedSigma& sigma)
{
    const VariableUniverse& u = sigma.universe();
    if (u.size() > kPolymatroidCap)
        throw CapExceeded("polymatroid bound supports at most " + std::to_string(kPolymatroidCap) + " variables");
    LPProblem lp = polymatroid_cone_lp(u, Sense::Maximize);
    const Eigen::Index dim = lp.dimension();
    lp.objective(dim - 1) = Rational(1);
    const std::size_t first = lp.constraints.size();
    for (const auto& e : sigma.entries()) {
        VectorQ row = VectorQ::Zero(dim);
        row(static_cast<Eigen::Index>(e.sigma.joint().bits()) - 1) += Rational(1);
        if (!e.sigma.condition.empty())
            row(static_cast<Eigen::Index>(e.sigma.condition.bits()) - 1) -= Rational(1);
        lp.add_constraint(std::move(row), Relation::LessEqual, e.log_degree);
    }

    BoundResult out;
    out.method = "polymatroid";
    out.lp_rows = lp.constraints.size();
    out.lp_columns = static_cast<std::size_t>(dim);
    const LPResult r = solve(lp);
    out.lp_pivots = r.pivots;
    if (r.status == LPStatus::Unbounded)
        return out;
    if (r.status != LPStatus::Optimal)
        throw std::logic_error("h = 0 is always feasible for the polymatroid bound LP");
    out.value = r.value;
    for (std::size_t k = 0; k < sigma.size(); ++k)
        out.weights.push_back(r.duals(static_cast<Eigen::Index>(first + k)));
    reverify(sigma, out, Semantics::Polymatroid);
    return out;
}

namespace {

// Affine function of the weights: coefficients . w + constant.
struct Affine {
    VectorQ coefficients;
    Rational constant;
};

// One per variable A: the axiom-distribution matrix of the A-reduction with
// symbolic weights, and w_A = P w + q.
struct ReductionBlock {
    MatrixQ m;
    MatrixQ p;
    VectorQ q;
    Eigen::Index rhs_items = 0;
};

ReductionBlock reduction_block(const GuardedSigma& sigma, int a)
{
    const VariableUniverse& u = sigma.universe();
    const auto m = static_cast<Eigen::Index>(sigma.size());
    auto unit = [&](std::size_t k) {
        Affine f{VectorQ::Zero(m), Rational(0)};
        f.coefficients(static_cast<Eigen::Index>(k)) = Rational(1);
        return f;
    };

    // LHS item 0 is X \ A with coefficient c_A - d_A; the -1 comes from h(X).
    std::vector<std::pair<VarSet, Affine>> lhs;
    Affine net{VectorQ::Zero(m), Rational(-1)};
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        const Conditional& c = sigma.entries()[k].sigma;
        if (c.joint().contains(a))
            net.coefficients(static_cast<Eigen::Index>(k)) += Rational(1);
        if (c.condition.contains(a))
            net.coefficients(static_cast<Eigen::Index>(k)) -= Rational(1);
    }
    lhs.emplace_back(u.full().without(a), net);
    std::vector<std::pair<VarSet, Affine>> rhs;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        const Conditional& c = sigma.entries()[k].sigma;
        if (!c.joint().contains(a))
            lhs.emplace_back(c.joint(), unit(k));
        if (!c.condition.empty() && !c.condition.contains(a))
            rhs.emplace_back(c.condition, unit(k));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < rhs.size(); ++i)
        for (std::size_t j = 0; j < lhs.size(); ++j)
            if (rhs[i].first.subset_of(lhs[j].first))
                pairs.emplace_back(i, j);

    const auto r = static_cast<Eigen::Index>(rhs.size());
    const auto l = static_cast<Eigen::Index>(lhs.size());
    const auto np = static_cast<Eigen::Index>(pairs.size());
    ReductionBlock block;
    block.rhs_items = r;
    block.m = MatrixQ::Zero(r + l, np);
    for (Eigen::Index k = 0; k < np; ++k) {
        const auto [i, j] = pairs[static_cast<std::size_t>(k)];
        block.m(static_cast<Eigen::Index>(i), k) = Rational(1);
        block.m(r + static_cast<Eigen::Index>(j), k) = Rational(-1);
    }
    // w_A holds d_i for RHS rows and -c_j for LHS rows.
    block.p = MatrixQ::Zero(r + l, m);
    block.q = VectorQ::Zero(r + l);
    for (Eigen::Index i = 0; i < r; ++i) {
        block.p.row(i) = rhs[static_cast<std::size_t>(i)].second.coefficients.transpose();
        block.q(i) = rhs[static_cast<std::size_t>(i)].second.constant;
    }
    for (Eigen::Index j = 0; j < l; ++j) {
        block.p.row(r + j) = -lhs[static_cast<std::size_t>(j)].second.coefficients.transpose();
        block.q(r + j) = -lhs[static_cast<std::size_t>(j)].second.constant;
    }
    return block;
}

}  // namespace

SimpleBoundProgram simple_bound_program(const GuardedSigma& sigma)
{
    if (!is_simple(sigma.conditionals()))
        throw FormError("the polynomial bound LP needs every condition to have at most one variable");
    const int n = sigma.universe().size();
    const auto m = static_cast<Eigen::Index>(sigma.size());

    std::vector<ReductionBlock> blocks;
    Eigen::Index x_total = 0;
    Eigen::Index stacked = 0;
    Eigen::Index out_rows = 0;
    for (int a = 0; a < n; ++a) {
        blocks.push_back(reduction_block(sigma, a));
        const ReductionBlock& b = blocks.back();
        x_total += b.m.cols();
        stacked += b.m.cols() + b.m.rows();
        out_rows += b.m.rows() + 1;
    }

    // M* maps (x, w) to the stacked (x_A, w_A - q_A); M_X is block diagonal in the M'_A.
    MatrixQ selector = MatrixQ::Zero(stacked, x_total + m);
    MatrixQ diagonal = MatrixQ::Zero(out_rows, stacked);
    VectorQ shift = VectorQ::Zero(stacked);
    Eigen::Index x_offset = 0;
    Eigen::Index s_offset = 0;
    Eigen::Index r_offset = 0;
    for (const ReductionBlock& b : blocks) {
        const Eigen::Index px = b.m.cols();
        const Eigen::Index pw = b.m.rows();
        for (Eigen::Index k = 0; k < px; ++k)
            selector(s_offset + k, x_offset + k) = Rational(1);
        selector.block(s_offset + px, x_total, pw, m) = b.p;
        shift.segment(s_offset + px, pw) = b.q;

        MatrixQ prime = MatrixQ::Zero(pw + 1, px + pw);
        prime.block(0, 0, pw, px) = b.m;
        for (Eigen::Index k = 0; k < pw; ++k)
            prime(k, px + k) = Rational(-1);
        // Extra row: c_A >= d_A, i.e. -(w_A entry of LHS item 0) >= 0.
        prime(pw, px + b.rhs_items) = Rational(-1);
        diagonal.block(r_offset, s_offset, pw + 1, px + pw) = prime;

        x_offset += px;
        s_offset += px + pw;
        r_offset += pw + 1;
    }

    SimpleBoundProgram program;
    program.m_sigma = diagonal * selector;
    program.rhs = -(diagonal * shift);
    program.weight_offset = x_total;
    return program;
}

BoundResult logbound_simple_entropic(const GuardedSigma& sigma)
{
    const SimpleBoundProgram program = simple_bound_program(sigma);
    const Eigen::Index dim = program.m_sigma.cols();
    LPProblem lp(dim, Sense::Minimize);
    for (std::size_t k = 0; k < sigma.size(); ++k)
        lp.objective(program.weight_offset + static_cast<Eigen::Index>(k)) = sigma.entries()[k].log_degree;
    for (Eigen::Index i = 0; i < program.m_sigma.rows(); ++i)
        lp.add_constraint(program.m_sigma.row(i).transpose(), Relation::GreaterEqual, program.rhs(i));

    BoundResult out;
    out.method = "simple";
    out.lp_rows = lp.constraints.size();
    out.lp_columns = static_cast<std::size_t>(dim);
    const LPResult r = solve(lp);
    out.lp_pivots = r.pivots;
    if (r.status == LPStatus::Infeasible)
        return out;
    if (r.status != LPStatus::Optimal)
        throw std::logic_error("bound LP with non-negative costs cannot be unbounded");
    out.value = r.value;
    for (std::size_t k = 0; k < sigma.size(); ++k)
        out.weights.push_back(r.point(program.weight_offset + static_cast<Eigen::Index>(k)));

    const Verdict v = check_simple_sigma(sigma_two_sided(sigma.universe(), sigma.conditionals(), out.weights));
    if (!v.valid)
        throw std::logic_error("bound weights fail the simple-form validity re-check");
    return out;
}

Conditional conditional_in(const RelationInstance& relation, const std::vector<std::string>& target,
                           const std::vector<std::string>& condition)
{
    for (const auto& names : {target, condition})
        for (const auto& name : names)
            if (!relation.schema.find(name))
                throw DomainError("variable '" + name + "' is not in the relation schema");
    return Conditional::make(relation.schema.set_of(target), relation.schema.set_of(condition));
}

std::int64_t degree_scan(const RelationInstance& relation, const Conditional& sigma)
{
    if (!relation.schema.contains(sigma.joint()))
        throw DomainError("conditional uses columns outside the relation schema");
    const auto width = static_cast<std::size_t>(relation.schema.size());
    auto project = [](const std::vector<std::string>& row, VarSet s) {
        std::vector<std::string> out;
        for (int i : s.elements())
            out.push_back(row[static_cast<std::size_t>(i)]);
        return out;
    };
    std::map<std::vector<std::string>, std::set<std::vector<std::string>>> groups;
    for (const auto& row : relation.rows) {
        if (row.size() != width)
            throw DomainError("relation row has " + std::to_string(row.size()) + " values, schema has " +
                              std::to_string(width));
        groups[project(row, sigma.condition)].insert(project(row, sigma.target));
    }
    std::int64_t best = 0;
    for (const auto& [u, vs] : groups)
        best = std::max(best, static_cast<std::int64_t>(vs.size()));
    return best;
}

namespace {

// Columns of `relation` holding the query variables of `s`, by name.
VarSet translate(const VariableUniverse& query, const RelationInstance& relation, VarSet s)
{
    VarSet out;
    for (int i : s.elements()) {
        auto col = relation.schema.find(query.name(i));
        if (!col)
            throw DomainError("relation lacks column '" + query.name(i) + "'");
        out = out.with(*col);
    }
    return out;
}

// deg <= 2^b, exactly: deg^den <= 2^num.
bool within(std::int64_t degree, const Rational& b)
{
    if (degree <= 1)
        return true;
    const mpz_class num = b.numerator();
    const mpz_class den = b.denominator();
    if (!num.fits_ulong_p() || !den.fits_ulong_p())
        throw DomainError("log-degree too large to compare");
    mpz_class lhs;
    mpz_class rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(degree), den.get_ui());
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2UL, num.get_ui());
    return lhs <= rhs;
}

}  // namespace

bool satisfies_degrees(const GuardedSigma& sigma, const std::vector<RelationInstance>& database)
{
    if (database.size() != sigma.query().atoms().size())
        throw DomainError("database must hold one relation per atom");
    for (const auto& e : sigma.entries()) {
        const RelationInstance& r = database[e.guard];
        const Conditional local{translate(sigma.universe(), r, e.sigma.target),
                                translate(sigma.universe(), r, e.sigma.condition)};
        if (!within(degree_scan(r, local), e.log_degree))
            return false;
    }
    return true;
}

std::int64_t join_size(const Query& query, const std::vector<RelationInstance>& database)
{
    if (database.size() != query.atoms().size())
        throw DomainError("database must hold one relation per atom");
    const VariableUniverse& u = query.universe();
    std::vector<std::vector<int>> columns;
    for (std::size_t k = 0; k < database.size(); ++k) {
        std::vector<int> cols;
        for (int i : query.atoms()[k].schema.elements()) {
            auto col = database[k].schema.find(u.name(i));
            if (!col)
                throw DomainError("relation for atom '" + query.atoms()[k].relation + "' lacks column '" +
                                  u.name(i) + "'");
            cols.push_back(*col);
        }
        columns.push_back(std::move(cols));
    }

    std::vector<std::optional<std::string>> binding(static_cast<std::size_t>(u.size()));
    std::int64_t count = 0;
    std::function<void(std::size_t)> extend = [&](std::size_t k) {
        if (k == database.size()) {
            ++count;
            return;
        }
        const std::vector<int> vars = query.atoms()[k].schema.elements();
        for (const auto& row : database[k].rows) {
            std::vector<std::size_t> bound_here;
            bool ok = true;
            for (std::size_t t = 0; t < vars.size() && ok; ++t) {
                auto& slot = binding[static_cast<std::size_t>(vars[t])];
                const std::string& value = row[static_cast<std::size_t>(columns[k][t])];
                if (!slot) {
                    slot = value;
                    bound_here.push_back(static_cast<std::size_t>(vars[t]));
                } else if (*slot != value) {
                    ok = false;
                }
            }
            if (ok)
                extend(k + 1);
            for (std::size_t v : bound_here)
                binding[v].reset();
        }
    };
    extend(0);
    return count;
}

}  // namespace entroplex

#include "entroplex/rational_lp.hpp"

#include <stdexcept>
#include <string>

namespace entroplex {

namespace {

using Tableau = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

void validate(const LPProblem& p)
{
    const Index n = p.dimension();
    if (static_cast<Index>(p.lower_bounds.size()) != n)
        throw DomainError("lower bound count does not match the LP dimension");
    for (std::size_t i = 0; i < p.constraints.size(); ++i)
        if (p.constraints[i].coefficients.size() != n)
            throw DomainError("constraint " + std::to_string(i) + " has dimension " +
                              std::to_string(p.constraints[i].coefficients.size()) + ", expected " +
                              std::to_string(n));
}

// Standard form: min c'z, A z (+slack/-surplus/+artificial) = b >= 0, z >= 0.
// Original variable j maps to z[pos[j]] (+ lower bound) or z[pos[j]] - z[neg[j]].
class Simplex {
public:
    explicit Simplex(const LPProblem& p) : problem_(p)
    {
        const Index n = p.dimension();
        pos_.resize(static_cast<std::size_t>(n));
        neg_.assign(static_cast<std::size_t>(n), -1);
        Index cols = 0;
        for (Index j = 0; j < n; ++j) {
            pos_[static_cast<std::size_t>(j)] = cols++;
            if (!p.lower_bounds[static_cast<std::size_t>(j)])
                neg_[static_cast<std::size_t>(j)] = cols++;
        }
        structural_ = cols;

        const Index m = static_cast<Index>(p.constraints.size());
        flipped_.assign(static_cast<std::size_t>(m), false);
        std::vector<Relation> rel(static_cast<std::size_t>(m));
        std::vector<Rational> rhs(static_cast<std::size_t>(m));
        Index slack_count = 0;
        Index artificial_count = 0;
        for (Index i = 0; i < m; ++i) {
            const auto& con = p.constraints[static_cast<std::size_t>(i)];
            Rational b = con.rhs;
            for (Index j = 0; j < n; ++j)
                if (const auto& lb = p.lower_bounds[static_cast<std::size_t>(j)]; lb && !lb->is_zero())
                    b -= con.coefficients(j) * *lb;
            Relation r = con.relation;
            // Negate so that b >= 0, and turn ">= 0" rows into "<= 0" to get a slack basis.
            bool flip = b.sign() < 0 || (b.is_zero() && r == Relation::GreaterEqual);
            if (flip) {
                b = -b;
                if (r == Relation::GreaterEqual)
                    r = Relation::LessEqual;
                else if (r == Relation::LessEqual)
                    r = Relation::GreaterEqual;
            }
            flipped_[static_cast<std::size_t>(i)] = flip;
            rel[static_cast<std::size_t>(i)] = r;
            rhs[static_cast<std::size_t>(i)] = b;
            if (r != Relation::Equal)
                ++slack_count;
            if (r != Relation::LessEqual)
                ++artificial_count;
        }

        artificial_begin_ = structural_ + slack_count;
        cols_ = artificial_begin_ + artificial_count;
        rows_ = m;
        table_ = Tableau::Constant(m + 1, cols_ + 1, Rational(0));
        basis_.assign(static_cast<std::size_t>(m), -1);
        unit_.assign(static_cast<std::size_t>(m), -1);

        Index next_slack = structural_;
        Index next_artificial = artificial_begin_;
        for (Index i = 0; i < m; ++i) {
            const auto& con = p.constraints[static_cast<std::size_t>(i)];
            const bool flip = flipped_[static_cast<std::size_t>(i)];
            for (Index j = 0; j < n; ++j) {
                const Rational& a = con.coefficients(j);
                if (a.is_zero())
                    continue;
                Rational v = flip ? -a : a;
                table_(i, pos_[static_cast<std::size_t>(j)]) = v;
                if (Index k = neg_[static_cast<std::size_t>(j)]; k >= 0)
                    table_(i, k) = -v;
            }
            table_(i, cols_) = rhs[static_cast<std::size_t>(i)];
            switch (rel[static_cast<std::size_t>(i)]) {
            case Relation::LessEqual:
                table_(i, next_slack) = Rational(1);
                basis_[static_cast<std::size_t>(i)] = next_slack;
                unit_[static_cast<std::size_t>(i)] = next_slack;
                ++next_slack;
                break;
            case Relation::GreaterEqual:
                table_(i, next_slack++) = Rational(-1);
                [[fallthrough]];
            case Relation::Equal:
                table_(i, next_artificial) = Rational(1);
                basis_[static_cast<std::size_t>(i)] = next_artificial;
                unit_[static_cast<std::size_t>(i)] = next_artificial;
                ++next_artificial;
                break;
            }
        }
    }

    // Returns false when the problem is infeasible.
    bool phase_one()
    {
        if (artificial_begin_ == cols_)
            return true;
        auto obj = table_.row(rows_);
        for (Index j = 0; j <= cols_; ++j)
            obj(j) = Rational(0);
        for (Index i = 0; i < rows_; ++i)
            if (is_artificial(basis_[static_cast<std::size_t>(i)]))
                for (Index j = 0; j <= cols_; ++j)
                    if (!table_(i, j).is_zero() && (j == cols_ || !is_artificial(j)))
                        obj(j) -= table_(i, j);
        if (run() != LPStatus::Optimal)
            throw std::logic_error("phase one cannot be unbounded");
        if (!table_(rows_, cols_).is_zero())
            return false;
        // Drive zero-level artificials out where possible; rows left with one are redundant.
        for (Index i = 0; i < rows_; ++i) {
            if (!is_artificial(basis_[static_cast<std::size_t>(i)]))
                continue;
            for (Index j = 0; j < artificial_begin_; ++j)
                if (!table_(i, j).is_zero()) {
                    pivot(i, j);
                    break;
                }
        }
        return true;
    }

    LPStatus phase_two()
    {
        const Index n = problem_.dimension();
        VectorQ cost = VectorQ::Zero(cols_);
        const bool maximize = problem_.sense == Sense::Maximize;
        for (Index j = 0; j < n; ++j) {
            Rational c = maximize ? -problem_.objective(j) : problem_.objective(j);
            cost(pos_[static_cast<std::size_t>(j)]) = c;
            if (Index k = neg_[static_cast<std::size_t>(j)]; k >= 0)
                cost(k) = -c;
        }
        auto obj = table_.row(rows_);
        for (Index j = 0; j < cols_; ++j)
            obj(j) = cost(j);
        obj(cols_) = Rational(0);
        for (Index i = 0; i < rows_; ++i) {
            const Rational& cb = cost(basis_[static_cast<std::size_t>(i)]);
            if (cb.is_zero())
                continue;
            for (Index j = 0; j <= cols_; ++j)
                if (!table_(i, j).is_zero())
                    obj(j) -= cb * table_(i, j);
        }
        return run();
    }

    VectorQ point() const
    {
        VectorQ z = VectorQ::Zero(cols_);
        for (Index i = 0; i < rows_; ++i)
            z(basis_[static_cast<std::size_t>(i)]) = table_(i, cols_);
        const Index n = problem_.dimension();
        VectorQ x(n);
        for (Index j = 0; j < n; ++j) {
            Rational v = z(pos_[static_cast<std::size_t>(j)]);
            if (Index k = neg_[static_cast<std::size_t>(j)]; k >= 0)
                v -= z(k);
            else if (const auto& lb = problem_.lower_bounds[static_cast<std::size_t>(j)])
                v += *lb;
            x(j) = v;
        }
        return x;
    }

    VectorQ duals() const
    {
        VectorQ y(rows_);
        const bool maximize = problem_.sense == Sense::Maximize;
        for (Index i = 0; i < rows_; ++i) {
            Rational v = -table_(rows_, unit_[static_cast<std::size_t>(i)]);
            if (flipped_[static_cast<std::size_t>(i)])
                v = -v;
            y(i) = maximize ? -v : v;
        }
        return y;
    }

    std::size_t pivots() const { return pivots_; }

private:
    bool is_artificial(Index j) const { return j >= artificial_begin_; }

    // Bland's rule: lowest-index improving column, lowest-index basic variable on ties.
    LPStatus run()
    {
        for (;;) {
            Index enter = -1;
            for (Index j = 0; j < artificial_begin_; ++j)
                if (table_(rows_, j).sign() < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0)
                return LPStatus::Optimal;

            Index leave = -1;
            Rational best;
            for (Index i = 0; i < rows_; ++i) {
                const Rational& a = table_(i, enter);
                if (a.sign() <= 0)
                    continue;
                Rational ratio = table_(i, cols_) / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[static_cast<std::size_t>(i)] <
                                          basis_[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave < 0)
                return LPStatus::Unbounded;
            pivot(leave, enter);
        }
    }

    void pivot(Index r, Index c)
    {
        ++pivots_;
        const Rational inv = Rational(1) / table_(r, c);
        nonzero_.clear();
        for (Index j = 0; j <= cols_; ++j) {
            if (table_(r, j).is_zero())
                continue;
            table_(r, j) *= inv;
            nonzero_.push_back(j);
        }
        for (Index i = 0; i <= rows_; ++i) {
            if (i == r || table_(i, c).is_zero())
                continue;
            const Rational f = table_(i, c);
            for (Index j : nonzero_)
                table_(i, j) -= f * table_(r, j);
        }
        basis_[static_cast<std::size_t>(r)] = c;
    }

    const LPProblem& problem_;
    std::vector<Index> pos_;
    std::vector<Index> neg_;
    std::vector<bool> flipped_;
    std::vector<Index> basis_;
    std::vector<Index> unit_;
    std::vector<Index> nonzero_;
    Index structural_ = 0;
    Index artificial_begin_ = 0;
    Index cols_ = 0;
    Index rows_ = 0;
    Tableau table_;
    std::size_t pivots_ = 0;
};

}  // namespace

bool satisfies(const LPProblem& problem, const VectorQ& point)
{
    if (point.size() != problem.dimension())
        return false;
    for (Index j = 0; j < point.size(); ++j)
        if (const auto& lb = problem.lower_bounds[static_cast<std::size_t>(j)]; lb && point(j) < *lb)
            return false;
    for (const auto& con : problem.constraints) {
        Rational lhs;
        for (Index j = 0; j < point.size(); ++j)
            if (!con.coefficients(j).is_zero() && !point(j).is_zero())
                lhs += con.coefficients(j) * point(j);
        switch (con.relation) {
        case Relation::GreaterEqual:
            if (lhs < con.rhs)
                return false;
            break;
        case Relation::LessEqual:
            if (lhs > con.rhs)
                return false;
            break;
        case Relation::Equal:
            if (lhs != con.rhs)
                return false;
            break;
        }
    }
    return true;
}

LPResult solve(const LPProblem& problem)
{
    validate(problem);
    Simplex simplex(problem);
    LPResult result;
    if (!simplex.phase_one()) {
        result.status = LPStatus::Infeasible;
        result.pivots = simplex.pivots();
        return result;
    }
    result.status = simplex.phase_two();
    result.pivots = simplex.pivots();
    if (result.status != LPStatus::Optimal)
        return result;
    result.point = simplex.point();
    result.duals = simplex.duals();
    Rational value;
    for (Index j = 0; j < problem.dimension(); ++j)
        if (!problem.objective(j).is_zero())
            value += problem.objective(j) * result.point(j);
    result.value = value;
    if (!satisfies(problem, result.point))
        throw std::logic_error("simplex produced a point violating its constraints");
    return result;
}

FeasibilityResult feasible(const LPProblem& problem)
{
    validate(problem);
    Simplex simplex(problem);
    FeasibilityResult out;
    out.feasible = simplex.phase_one();
    if (out.feasible)
        out.point = simplex.point();
    return out;
}

}  // namespace entroplex

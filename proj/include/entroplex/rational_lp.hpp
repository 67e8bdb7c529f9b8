#ifndef ENTROPLEX_RATIONAL_LP_HPP
#define ENTROPLEX_RATIONAL_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "entroplex/errors.hpp"
#include "entroplex/rational.hpp"

namespace entroplex {

enum class Sense { Minimize, Maximize };
enum class Relation { GreaterEqual, LessEqual, Equal };

struct LinearConstraint {
    VectorQ coefficients;
    Relation relation = Relation::GreaterEqual;
    Rational rhs;
};

/// Linear program over rationals. Variables default to a lower bound of 0;
/// a disengaged bound makes the variable free.
struct LPProblem {
    LPProblem() = default;
    explicit LPProblem(Eigen::Index dimension, Sense sense = Sense::Minimize)
        : sense(sense), objective(VectorQ::Zero(dimension)),
          lower_bounds(static_cast<std::size_t>(dimension), Rational(0))
    {
    }

    Eigen::Index dimension() const { return objective.size(); }

    void add_constraint(VectorQ coefficients, Relation relation, Rational rhs)
    {
        constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
    }

    Sense sense = Sense::Minimize;
    VectorQ objective;
    std::vector<LinearConstraint> constraints;
    std::vector<std::optional<Rational>> lower_bounds;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    VectorQ point;
    /// One multiplier per constraint, signed so that value == duals . rhs
    /// whenever every variable has lower bound 0.
    VectorQ duals;
    std::size_t pivots = 0;

    bool optimal() const { return status == LPStatus::Optimal; }
};

/// Exact two-phase primal simplex with Bland's rule.
LPResult solve(const LPProblem& problem);

struct FeasibilityResult {
    bool feasible = false;
    std::optional<VectorQ> point;
};

/// Phase one only.
FeasibilityResult feasible(const LPProblem& problem);

/// Residual-free check of a point against every constraint and bound.
bool satisfies(const LPProblem& problem, const VectorQ& point);

}  // namespace entroplex

#endif

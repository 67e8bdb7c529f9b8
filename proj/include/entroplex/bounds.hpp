#ifndef ENTROPLEX_BOUNDS_HPP
#define ENTROPLEX_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entroplex/core_model.hpp"
#include "entroplex/rational_lp.hpp"
#include "entroplex/validity.hpp"

namespace entroplex {

struct Atom {
    std::string relation;
    VarSet schema;
};

/// Full self-join-free conjunctive query; the universe is the set of query variables.
class Query {
public:
    Query() = default;
    Query(std::string name, VariableUniverse universe, std::vector<Atom> atoms);

    const std::string& name() const { return name_; }
    const VariableUniverse& universe() const { return universe_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    std::optional<std::size_t> find_atom(std::string_view relation) const;

private:
    std::string name_;
    VariableUniverse universe_;
    std::vector<Atom> atoms_;
};

/// (V | U) with V and U disjoint.
struct Conditional {
    VarSet target;
    VarSet condition;

    /// Normalises V := V \ U; throws when the target becomes empty.
    static Conditional make(VarSet target, VarSet condition);

    VarSet joint() const { return target | condition; }
    friend bool operator==(const Conditional&, const Conditional&) = default;
};

struct DegreeConstraint {
    Conditional sigma;
    std::size_t guard = 0;
    Rational log_degree;
};

/// Degree constraints together with the query that guards them.
class GuardedSigma {
public:
    GuardedSigma() = default;
    GuardedSigma(Query query, std::vector<DegreeConstraint> entries);

    /// Picks the first atom whose schema contains U and V.
    static std::size_t infer_guard(const Query& query, const Conditional& sigma);

    const Query& query() const { return query_; }
    const VariableUniverse& universe() const { return query_.universe(); }
    const std::vector<DegreeConstraint>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::vector<Conditional> conditionals() const;
    std::vector<Rational> log_degrees() const;

private:
    Query query_;
    std::vector<DegreeConstraint> entries_;
};

struct BoundResult {
    /// Empty means +infinity.
    std::optional<Rational> value;
    std::vector<Rational> weights;
    std::string method;
    std::size_t lp_rows = 0;
    std::size_t lp_columns = 0;
    std::size_t lp_pivots = 0;

    bool infinite() const { return !value.has_value(); }
    /// 2^value, for display.
    double size_bound() const;
};

bool is_acyclic(const std::vector<Conditional>& sigma);
bool is_simple(const std::vector<Conditional>& sigma);

/// sum_s w_s h(V_s | U_s) - h(X) over `universe`.
InequalityExpr sigma_inequality(const VariableUniverse& universe, const std::vector<Conditional>& sigma,
                                const std::vector<Rational>& weights);

/// The same inequality before merging: one LHS item per conditional and the
/// conditioning sets plus h(X) on the right.
TwoSidedInequality sigma_two_sided(const VariableUniverse& universe, const std::vector<Conditional>& sigma,
                                   const std::vector<Rational>& weights);

inline constexpr int kStepBoundCap = 16;

BoundResult logbound_modular(const GuardedSigma& sigma);
/// Polynomial LP for simple constraint sets. Throws FormError otherwise.
BoundResult logbound_simple_entropic(const GuardedSigma& sigma);
BoundResult logbound_polymatroid_dual(const GuardedSigma& sigma);
BoundResult logbound_step(const GuardedSigma& sigma);

/// Matrices of the polynomial LP, exposed for inspection: the program is
/// minimise b.w subject to m_sigma * (x, w) >= rhs, (x, w) >= 0.
struct SimpleBoundProgram {
    MatrixQ m_sigma;
    VectorQ rhs;
    /// Columns of w inside (x, w).
    Eigen::Index weight_offset = 0;
};
SimpleBoundProgram simple_bound_program(const GuardedSigma& sigma);

/// A relation instance: schema plus rows of values.
struct RelationInstance {
    VariableUniverse schema;
    std::vector<std::vector<std::string>> rows;
};

/// deg_R(V | U): the largest number of distinct V-values paired with one U-value.
std::int64_t degree_scan(const RelationInstance& relation, const Conditional& sigma);

/// Looks up the variables of a conditional given by names in the relation schema.
Conditional conditional_in(const RelationInstance& relation, const std::vector<std::string>& target,
                           const std::vector<std::string>& condition);

/// D |= (Sigma, B) with B_s = 2^{b_s}; relations are matched to atoms by position.
bool satisfies_degrees(const GuardedSigma& sigma, const std::vector<RelationInstance>& database);

/// Naive evaluation of the full join; returns the number of output tuples.
std::int64_t join_size(const Query& query, const std::vector<RelationInstance>& database);

}  // namespace entroplex

#endif

#ifndef ENTROPLEX_VALIDITY_HPP
#define ENTROPLEX_VALIDITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entroplex/core_model.hpp"
#include "entroplex/function_zoo.hpp"
#include "entroplex/rational_lp.hpp"
#include "entroplex/set_function.hpp"

namespace entroplex {

enum class Semantics { Modular, Normal, Step, Polymatroid, Monotone, Entropic, Auto };

std::string to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view name);

/// Largest universe for the elemental-cone LP.
inline constexpr int kPolymatroidCap = 10;

/// h(sup) >= h(sub) when `kind == Mono`, h(sup) >= 0 when `kind == NonNeg`.
struct Axiom {
    enum class Kind { NonNeg, Mono };

    Kind kind = Kind::NonNeg;
    VarSet sup;
    VarSet sub;

    static Axiom non_neg(VarSet s) { return {Kind::NonNeg, s, VarSet()}; }
    static Axiom mono(VarSet sup, VarSet sub) { return {Kind::Mono, sup, sub}; }

    friend auto operator<=>(const Axiom&, const Axiom&) = default;
};

/// Positive combination of monotonicity and non-negativity axioms.
struct Decomposition {
    std::vector<std::pair<Rational, Axiom>> terms;

    InequalityExpr recombine(const VariableUniverse& universe) const;
    /// No set is touched positively by one weighted axiom and negatively by another.
    bool separable() const;
};

struct StepWitness {
    VarSet set;
};
struct BooleanMonotoneWitness {
    /// Minimal generators of the upward-closed family on which h = 1.
    std::vector<VarSet> generators;
};
struct PolymatroidWitness {
    ExactSetFunction function;
};
struct BasicModularWitness {
    int variable = 0;
};

using Witness = std::variant<StepWitness, BooleanMonotoneWitness, PolymatroidWitness, BasicModularWitness>;

ExactSetFunction witness_function(const VariableUniverse& universe, const Witness& w);
std::string witness_kind(const Witness& w);

struct Verdict {
    bool valid = true;
    std::optional<Decomposition> certificate;
    std::optional<Witness> witness;
    /// Invalid, but no witness could be recovered within the caps.
    bool witness_missing = false;

    std::string method;
    std::vector<Semantics> holds_for;
    std::size_t iterations = 0;
    std::size_t lp_rows = 0;
    std::size_t lp_columns = 0;
    std::size_t lp_pivots = 0;
};

/// Valid iff the expression holds on every basic modular function.
Verdict check_modular(const InequalityExpr& expr);

/// Exhaustive over the 2^n - 1 step functions; reports the least failing set.
Verdict check_step(const InequalityExpr& expr);

/// Augmenting-path fixpoint over the set representation. Throws CapExceeded.
Verdict check_monotone_fixpoint(const InequalityExpr& expr, std::int64_t cap = kDefaultMultiplicityCap);

/// Feasibility of the axiom-distribution LP (one variable per RHS set / LHS superset pair).
Verdict check_monotone_lp(const InequalityExpr& expr);

/// The axiom-distribution LP itself, exposed for tests and the bound construction.
struct MonotoneDistributionLP {
    LPProblem problem;
    /// (rhs index, lhs index) for each LP variable.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
MonotoneDistributionLP monotone_distribution_lp(const TwoSidedInequality& phi);

/// One inequality per elemental Shannon inequality, as a sparse coefficient list.
std::vector<InequalityExpr> elemental_inequalities(const VariableUniverse& universe);

/// LP over h(S), S nonempty (column S.bits() - 1), restricted to the elemental cone.
LPProblem polymatroid_cone_lp(const VariableUniverse& universe, Sense sense);

/// Minimises the expression over polymatroids normalised by h(full) <= 1.
Verdict check_polymatroid(const InequalityExpr& expr);

struct AReduction {
    Rational c_a;
    Rational d_a;
    TwoSidedInequality reduced;
};

/// Eliminates `variable` from a two-sided inequality.
AReduction a_reduction(const TwoSidedInequality& phi, int variable);

/// Every RHS set is a singleton or the full universe.
bool is_simple_form(const TwoSidedInequality& phi);

/// Polynomial decision for simple-form inequalities; the verdict holds simultaneously
/// for step functions, normal polymatroids, entropic functions and polymatroids.
/// Throws FormError if the form does not match; `target` must be one of those
/// classes (or Auto) and is only used to reject unrelated requests.
Verdict check_simple_sigma(const TwoSidedInequality& phi, Semantics target = Semantics::Auto);

/// Dispatch. `Normal` is `Step`; `Entropic` is only answered for simple forms.
Verdict check(const InequalityExpr& expr, Semantics semantics);

}  // namespace entroplex

#endif

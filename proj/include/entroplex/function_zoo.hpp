#ifndef ENTROPLEX_FUNCTION_ZOO_HPP
#define ENTROPLEX_FUNCTION_ZOO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entroplex/set_function.hpp"

namespace entroplex {

ExactSetFunction zero_function(const VariableUniverse& universe);

/// s^V: value 1 exactly on the sets that meet V. V must be nonempty.
ExactSetFunction step_function(const VariableUniverse& universe, VarSet v);

/// s^{A}: value 1 exactly on the sets containing A.
ExactSetFunction basic_modular(const VariableUniverse& universe, int variable);
ExactSetFunction basic_modular(const VariableUniverse& universe, std::string_view variable);

/// Indicator of the upward closure of `generators`.
ExactSetFunction upset_indicator(const VariableUniverse& universe, const std::vector<VarSet>& generators);

/// Inclusion-minimal members of a family of sets, in VarSet order.
std::vector<VarSet> minimal_sets(std::vector<VarSet> family);

/// Finite joint distribution with exact probabilities.
class JointDistribution {
public:
    struct Row {
        std::vector<std::string> values;
        Rational probability;
    };

    /// Validates: positive probabilities summing to 1, distinct tuples of the right width.
    JointDistribution(VariableUniverse schema, std::vector<Row> rows);

    const VariableUniverse& schema() const { return schema_; }
    const std::vector<Row>& rows() const { return rows_; }

private:
    VariableUniverse schema_;
    std::vector<Row> rows_;
};

/// Base-2 entropies of all marginals.
EntropicVector entropic_from_distribution(const JointDistribution& d);

/// Deterministic stream over all monotone 0/1-valued set functions with h(empty)=0,
/// ordered by the bit mask of their upward-closed family (bit S set iff h(S)=1).
class MonotoneBooleanStream {
public:
    static constexpr int kMaxVariables = 5;

    explicit MonotoneBooleanStream(VariableUniverse universe);

    std::optional<ExactSetFunction> next();
    std::size_t size() const { return masks_.size(); }
    const std::vector<std::uint64_t>& masks() const { return masks_; }

    /// Function for one family mask.
    ExactSetFunction function(std::uint64_t mask) const;

private:
    VariableUniverse universe_;
    std::vector<std::uint64_t> masks_;
    std::size_t cursor_ = 0;
};

MonotoneBooleanStream enumerate_monotone_boolean(const VariableUniverse& universe);

}  // namespace entroplex

#endif

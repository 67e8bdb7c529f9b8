#ifndef ENTROPLEX_CLI_FORMATS_HPP
#define ENTROPLEX_CLI_FORMATS_HPP

#include <string>
#include <string_view>

#include "entroplex/bounds.hpp"
#include "entroplex/function_zoo.hpp"
#include "entroplex/reductions.hpp"
#include "entroplex/set_function.hpp"

namespace entroplex::cli {

std::string read_file(const std::string& path);

/// Lines `h(X,Y) = 1/2`; sets not listed are 0.
ExactSetFunction parse_function_table(std::string_view text, const VariableUniverse& universe);
/// Nonzero values in the same format.
std::string print_function_table(const ExactSetFunction& h);

/// Header of column names plus a `prob` column; rows of values and rational probabilities.
JointDistribution parse_distribution_csv(std::string_view text);
/// Marginal on the columns named by `universe`, in its order.
JointDistribution marginal(const JointDistribution& d, const VariableUniverse& universe);

/// Header row naming the attributes, then one tuple per line.
RelationInstance parse_relation_csv(std::string_view text);

/// Constraint system:
///   query Q(A,B,C) = R1(A,B), R2(B,C), R3(A,C)
///   logdeg [R] (V | U) <= b      b rational; the guard R is optional
///   deg [R] (V | U) <= B         B a power of two
///   card R <= B                  B a power of two
GuardedSigma parse_constraints(std::string_view text);

/// `p <variables>` line, then clauses `+ 1 2 3` / `- 1 2 4`; variables are x1..xn.
MonSat3Instance parse_3dmonsat(std::string_view text);
/// One edge `u v` per line; a single name declares an isolated vertex.
Graph parse_graph(std::string_view text);
/// Whitespace-separated positive integers.
PartitionInstance parse_partition(std::string_view text);

}  // namespace entroplex::cli

#endif

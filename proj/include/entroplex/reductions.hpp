#ifndef ENTROPLEX_REDUCTIONS_HPP
#define ENTROPLEX_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entroplex/core_model.hpp"

namespace entroplex {

/// Monotone 3-SAT: clauses are index triples into `variables`.
struct MonSat3Instance {
    using Clause = std::array<int, 3>;

    std::vector<std::string> variables;
    std::vector<Clause> positive;
    std::vector<Clause> negative;

    /// Throws DomainError on repeated literals, bad indices or an empty clause set.
    void validate() const;
};

struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;

    void validate() const;
    static Graph complete(int n);
};

struct PartitionInstance {
    std::vector<std::int64_t> items;

    std::int64_t total() const;
    void validate() const;
};

inline constexpr int kSatOracleCap = 20;
inline constexpr int kColoringOracleCap = 8;
inline constexpr int kPartitionOracleItems = 20;
inline constexpr std::int64_t kPartitionOracleSum = 60;

/// sum_{C+} h(X | C) + sum_{C-} I(C) >= h(X); satisfiable iff not valid over step functions.
InequalityExpr from_3dmonsat(const MonSat3Instance& instance);
/// Universe {A_r, A_g, A_b : A vertex}; 3-colorable iff not valid over step functions.
InequalityExpr from_3coloring(const Graph& graph);
/// ((m/2)^2 - 1) h(X) >= sum_{i<j} x_i x_j (h(A_i|A_j) + h(A_j|A_i)); throws on odd sums.
InequalityExpr from_partition(const PartitionInstance& instance);

bool sat_oracle(const MonSat3Instance& instance);
bool coloring_oracle(const Graph& graph);
bool partition_oracle(const PartitionInstance& instance);

/// Variables in the step set are true.
std::vector<bool> decode_assignment(const MonSat3Instance& instance, VarSet step_set);
bool satisfies(const MonSat3Instance& instance, const std::vector<bool>& assignment);

/// Vertex A gets the unique colour c with A_c outside the step set; nullopt if not unique.
std::optional<std::vector<int>> decode_coloring(const Graph& graph, VarSet step_set);
bool is_proper_coloring(const Graph& graph, const std::vector<int>& colors);

/// Items whose variable lies in the step set form one side.
std::vector<bool> decode_split(const PartitionInstance& instance, VarSet step_set);
bool is_equal_split(const PartitionInstance& instance, const std::vector<bool>& side);

}  // namespace entroplex

#endif

#ifndef ENTROPLEX_CLI_DSL_HPP
#define ENTROPLEX_CLI_DSL_HPP

#include <string>
#include <string_view>

#include "entroplex/core_model.hpp"

namespace entroplex::cli {

/// Grammar:
///   program := ["vars" ident ("," ident)* ";"] ineq
///   ineq    := sum ">=" sum
///   sum     := "0" | term ("+" term)*
///   term    := [rat "*"] measure
///   measure := "h(" vars ["|" vars] ")" | "I(" vars ";" vars ["|" vars] ")" | "Im(" vars ")"
///   rat     := ["-"] int ["/" int]
/// Negative coefficients are accepted only when the right side is "0".
/// Without a vars header the universe is the sorted set of mentioned names.
InequalityExpr parse_inequality(std::string_view text);

/// Two-sided rendering with a vars header; parse_inequality inverts it.
std::string print_inequality(const InequalityExpr& expr);

/// "V" or "V|U" with comma-separated names, resolved against `universe`.
std::pair<VarSet, VarSet> parse_conditional(std::string_view text, const VariableUniverse& universe);

}  // namespace entroplex::cli

#endif

#ifndef ENTROPLEX_CLI_COMMANDS_HPP
#define ENTROPLEX_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "entroplex/validity.hpp"

namespace entroplex::cli {

inline constexpr int kExitValid = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitError = 2;
inline constexpr const char* kJsonSchema = "entroplex.v1";

struct CheckOptions {
    std::string file;
    Semantics semantics = Semantics::Auto;
    bool certificate = false;
    bool witness = false;
    bool json = false;
};

struct BoundOptions {
    std::string file;
    std::string method = "auto";
    bool json = false;
};

/// 0 valid, 1 invalid; errors propagate as exceptions.
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);
int cmd_bound(const BoundOptions& options, std::ostream& out, std::ostream& err);
/// kind: 3dmonsat | 3coloring | partition. Writes the .ineq text to `out`.
int cmd_reduce(const std::string& kind, const std::string& instance_file, std::ostream& out);
/// A .csv second argument is read as a distribution, anything else as a value table.
int cmd_eval(const std::string& ineq_file, const std::string& function_file, bool json, std::ostream& out);
int cmd_degscan(const std::string& csv_file, const std::string& conditional, bool json, std::ostream& out);

/// Full command line (args[0] is the program name). Errors become exit code 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entroplex::cli

#endif

#include "entroplex/cli/commands.hpp"

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entroplex/bounds.hpp"
#include "entroplex/cli/dsl.hpp"
#include "entroplex/cli/formats.hpp"
#include "entroplex/reductions.hpp"

namespace entroplex::cli {

using nlohmann::json;

namespace {

std::string axiom_text(const VariableUniverse& u, const Axiom& a)
{
    if (a.kind == Axiom::Kind::NonNeg)
        return "h(" + u.format(a.sup) + ") >= 0";
    return "h(" + u.format(a.sup) + ") >= h(" + u.format(a.sub) + ")";
}

json function_json(const ExactSetFunction& h)
{
    json values = json::object();
    const VariableUniverse& u = h.universe();
    for (VarSet::Bits bits = 1; bits < (VarSet::Bits{1} << u.size()); ++bits)
        if (!h(VarSet(bits)).is_zero())
            values[u.format(VarSet(bits))] = h(VarSet(bits)).to_string();
    return values;
}

std::string float_text(double v)
{
    std::ostringstream s;
    s << std::setprecision(12) << v;
    std::string t = s.str();
    if (t.find_first_of(".eEin") == std::string::npos)
        t += ".0";
    return t;
}

}  // namespace

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream&)
{
    const InequalityExpr expr = parse_inequality(read_file(options.file));
    const Verdict v = check(expr, options.semantics);
    const VariableUniverse& u = expr.universe();

    if (options.json) {
        json j;
        j["schema"] = kJsonSchema;
        j["command"] = "check";
        j["class"] = to_string(options.semantics);
        j["valid"] = v.valid;
        j["method"] = v.method;
        j["holds_for"] = json::array();
        for (Semantics s : v.holds_for)
            j["holds_for"].push_back(to_string(s));
        j["iterations"] = v.iterations;
        j["lp"] = {{"rows", v.lp_rows}, {"columns", v.lp_columns}, {"pivots", v.lp_pivots}};
        if (options.certificate && v.certificate) {
            j["certificate"] = json::array();
            for (const auto& [w, ax] : v.certificate->terms)
                j["certificate"].push_back({{"weight", w.to_string()}, {"axiom", axiom_text(u, ax)}});
        }
        if (!v.valid) {
            j["witness_missing"] = v.witness_missing;
            if (v.witness) {
                j["witness_kind"] = witness_kind(*v.witness);
                if (options.witness)
                    j["witness"] = function_json(witness_function(u, *v.witness));
            }
        }
        out << j.dump(2) << "\n";
    } else {
        out << (v.valid ? "valid" : "invalid") << " over " << to_string(options.semantics);
        if (!v.holds_for.empty()) {
            out << " (holds for";
            for (Semantics s : v.holds_for)
                out << " " << to_string(s);
            out << ")";
        }
        out << "\nmethod: " << v.method << "\n";
        if (options.certificate && v.certificate) {
            out << "certificate:\n";
            for (const auto& [w, ax] : v.certificate->terms)
                out << "  " << w << " * [" << axiom_text(u, ax) << "]\n";
        }
        if (!v.valid && v.witness_missing)
            out << "witness: not recovered within the size caps\n";
        if (!v.valid && v.witness && options.witness)
            out << "witness (" << witness_kind(*v.witness) << "):\n"
                << print_function_table(witness_function(u, *v.witness));
    }
    return v.valid ? kExitValid : kExitInvalid;
}

int cmd_bound(const BoundOptions& options, std::ostream& out, std::ostream& err)
{
    const GuardedSigma sigma = parse_constraints(read_file(options.file));
    std::string method = options.method;
    if (method == "auto") {
        if (is_simple(sigma.conditionals()))
            method = "simple";
        else if (is_acyclic(sigma.conditionals()))
            method = "modular";
        else {
            method = "polymatroid";
            err << "warning: constraints are neither simple nor acyclic; solving the exponential polymatroid LP over "
                << sigma.universe().size() << " variables\n";
        }
    }
    BoundResult r;
    if (method == "simple")
        r = logbound_simple_entropic(sigma);
    else if (method == "modular")
        r = logbound_modular(sigma);
    else if (method == "polymatroid")
        r = logbound_polymatroid_dual(sigma);
    else if (method == "step")
        r = logbound_step(sigma);
    else
        throw DomainError("unknown bound method '" + method + "'");

    if (options.json) {
        json j;
        j["schema"] = kJsonSchema;
        j["command"] = "bound";
        j["method"] = r.method;
        j["log_bound"] = r.infinite() ? std::string("inf") : r.value->to_string();
        j["size_bound"] = r.infinite() ? std::string("inf") : float_text(r.size_bound());
        j["weights"] = json::array();
        for (const Rational& w : r.weights)
            j["weights"].push_back(w.to_string());
        j["simple"] = is_simple(sigma.conditionals());
        j["acyclic"] = is_acyclic(sigma.conditionals());
        j["lp"] = {{"rows", r.lp_rows}, {"columns", r.lp_columns}, {"pivots", r.lp_pivots}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << (r.infinite() ? std::string("inf") : r.value->to_string()) << "\n";
    out << "method: " << r.method << "\n";
    if (!r.infinite()) {
        out << "weights:";
        const VariableUniverse& u = sigma.universe();
        for (std::size_t k = 0; k < r.weights.size(); ++k) {
            const Conditional& c = sigma.entries()[k].sigma;
            out << " (" << u.format(c.target);
            if (!c.condition.empty())
                out << "|" << u.format(c.condition);
            out << ")=" << r.weights[k];
        }
        out << "\nsize bound: " << float_text(r.size_bound()) << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& kind, const std::string& instance_file, std::ostream& out)
{
    const std::string text = read_file(instance_file);
    InequalityExpr e;
    if (kind == "3dmonsat")
        e = from_3dmonsat(parse_3dmonsat(text));
    else if (kind == "3coloring")
        e = from_3coloring(parse_graph(text));
    else if (kind == "partition")
        e = from_partition(parse_partition(text));
    else
        throw DomainError("unknown reduction '" + kind + "'");
    out << print_inequality(e);
    return 0;
}

int cmd_eval(const std::string& ineq_file, const std::string& function_file, bool json_output, std::ostream& out)
{
    const InequalityExpr expr = parse_inequality(read_file(ineq_file));
    const std::string text = read_file(function_file);
    const bool distribution = function_file.size() >= 4 && function_file.substr(function_file.size() - 4) == ".csv";
    std::string value;
    if (distribution) {
        const JointDistribution d = marginal(parse_distribution_csv(text), expr.universe());
        value = float_text(evaluate(expr, entropic_from_distribution(d)));
    } else {
        value = evaluate(expr, parse_function_table(text, expr.universe())).to_string();
    }
    if (json_output) {
        json j;
        j["schema"] = kJsonSchema;
        j["command"] = "eval";
        j["exact"] = !distribution;
        j["value"] = value;
        out << j.dump(2) << "\n";
    } else {
        out << value << "\n";
    }
    return 0;
}

int cmd_degscan(const std::string& csv_file, const std::string& conditional, bool json_output, std::ostream& out)
{
    const RelationInstance r = parse_relation_csv(read_file(csv_file));
    const auto [v, u] = parse_conditional(conditional, r.schema);
    const std::int64_t d = degree_scan(r, Conditional::make(v, u));
    if (json_output) {
        json j;
        j["schema"] = kJsonSchema;
        j["command"] = "degscan";
        j["conditional"] = conditional;
        j["degree"] = d;
        out << j.dump(2) << "\n";
    } else {
        out << d << "\n";
    }
    return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact validity checking for information inequalities and log-bounds on query outputs"};
    app.require_subcommand(1);

    CheckOptions check_options;
    std::string class_name = "auto";
    auto* check_cmd = app.add_subcommand("check", "Decide validity of an inequality (.ineq)");
    check_cmd->add_option("file", check_options.file, "Inequality file")->required();
    check_cmd->add_option("--class", class_name, "modular|normal|step|polymatroid|monotone|entropic|auto")
        ->check(CLI::IsMember({"modular", "normal", "step", "polymatroid", "monotone", "entropic", "auto"}));
    check_cmd->add_flag("--certificate", check_options.certificate, "Print the axiom decomposition");
    check_cmd->add_flag("--witness", check_options.witness, "Print the counterexample as a value table");
    check_cmd->add_flag("--json", check_options.json, "JSON output");

    BoundOptions bound_options;
    auto* bound_cmd = app.add_subcommand("bound", "Log-bound on the output size of a query (.cstr)");
    bound_cmd->add_option("file", bound_options.file, "Constraint file")->required();
    bound_cmd->add_option("--method", bound_options.method, "modular|simple|polymatroid|step|auto")
        ->check(CLI::IsMember({"modular", "simple", "polymatroid", "step", "auto"}));
    bound_cmd->add_flag("--json", bound_options.json, "JSON output");

    std::string reduce_kind;
    std::string reduce_file;
    auto* reduce_cmd = app.add_subcommand("reduce", "Emit the inequality of a hardness reduction");
    reduce_cmd->add_option("kind", reduce_kind, "3dmonsat|3coloring|partition")
        ->required()
        ->check(CLI::IsMember({"3dmonsat", "3coloring", "partition"}));
    reduce_cmd->add_option("instance", reduce_file, "Instance file")->required();

    std::string eval_ineq;
    std::string eval_function;
    bool eval_json = false;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an inequality on a value table or distribution (.csv)");
    eval_cmd->add_option("ineq", eval_ineq, "Inequality file")->required();
    eval_cmd->add_option("function", eval_function, "Value table or distribution CSV")->required();
    eval_cmd->add_flag("--json", eval_json, "JSON output");

    std::string deg_file;
    std::string deg_conditional;
    bool deg_json = false;
    auto* deg_cmd = app.add_subcommand("degscan", "Max degree deg_R(V|U) of a relation CSV");
    deg_cmd->add_option("csv", deg_file, "Relation CSV")->required();
    deg_cmd->add_option("conditional", deg_conditional, "V|U, e.g. \"B|A\"")->required();
    deg_cmd->add_flag("--json", deg_json, "JSON output");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*check_cmd) {
            check_options.semantics = *parse_semantics(class_name);
            return cmd_check(check_options, out, err);
        }
        if (*bound_cmd)
            return cmd_bound(bound_options, out, err);
        if (*reduce_cmd)
            return cmd_reduce(reduce_kind, reduce_file, out);
        if (*eval_cmd)
            return cmd_eval(eval_ineq, eval_function, eval_json, out);
        if (*deg_cmd)
            return cmd_degscan(deg_file, deg_conditional, deg_json, out);
    } catch (const Unsupported& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace entroplex::cli

#include "entroplex/cli/formats.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "entroplex/cli/dsl.hpp"

namespace entroplex::cli {

namespace {

std::string trim(std::string_view s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

std::string strip_comment(std::string_view line)
{
    return trim(line.substr(0, line.find('#')));
}

// Non-empty, comment-free lines with their 1-based numbers.
std::vector<std::pair<int, std::string>> lines_of(std::string_view text)
{
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string s = strip_comment(line);
        if (!s.empty())
            out.emplace_back(number, std::move(s));
    }
    return out;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = s.find(sep, start);
        out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos)
            return out;
        start = at + 1;
    }
}

std::vector<std::string> words(std::string_view s)
{
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

Rational parse_rational_at(const std::string& text, int line)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(e.what(), static_cast<std::size_t>(line), 1);
    }
}

// log2 of a positive power of two given as an integer literal.
Rational log2_exact(const std::string& text, int line)
{
    const Rational v = parse_rational_at(text, line);
    if (!v.is_integer() || v.sign() <= 0)
        throw ParseError("degree bound '" + text + "' must be a positive integer power of two",
                         static_cast<std::size_t>(line), 1);
    const mpz_class n = v.numerator();
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (mpz_popcount(n.get_mpz_t()) != 1)
        throw ParseError("degree bound '" + text + "' is not a power of two; use logdeg for other values",
                         static_cast<std::size_t>(line), 1);
    return Rational(static_cast<long long>(bits - 1));
}

}  // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ExactSetFunction parse_function_table(std::string_view text, const VariableUniverse& universe)
{
    static const std::regex entry(R"(h\(([^)]*)\)\s*=\s*(\S+))");
    ExactSetFunction h(universe);
    for (const auto& [line, s] : lines_of(text)) {
        std::smatch m;
        if (!std::regex_match(s, m, entry))
            throw ParseError("expected 'h(vars) = value'", static_cast<std::size_t>(line), 1);
        VarSet set;
        try {
            set = parse_conditional(m[1].str(), universe).first;
        } catch (const DomainError& e) {
            throw ParseError(e.what(), static_cast<std::size_t>(line), 1);
        }
        h.set(set, parse_rational_at(m[2].str(), line));
    }
    return h;
}

std::string print_function_table(const ExactSetFunction& h)
{
    const VariableUniverse& u = h.universe();
    std::ostringstream out;
    for (VarSet::Bits bits = 1; bits < (VarSet::Bits{1} << u.size()); ++bits)
        if (!h(VarSet(bits)).is_zero())
            out << "h(" << u.format(VarSet(bits)) << ") = " << h(VarSet(bits)) << "\n";
    return out.str();
}

JointDistribution parse_distribution_csv(std::string_view text)
{
    const auto lines = lines_of(text);
    if (lines.empty())
        throw DomainError("distribution file is empty");
    std::vector<std::string> header = split(lines[0].second, ',');
    std::size_t prob = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == "prob")
            prob = i;
    if (prob == header.size())
        throw ParseError("header lacks a 'prob' column", static_cast<std::size_t>(lines[0].first), 1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (i != prob)
            names.push_back(header[i]);
    std::vector<JointDistribution::Row> rows;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [line, s] = lines[k];
        std::vector<std::string> cells = split(s, ',');
        if (cells.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " cells",
                             static_cast<std::size_t>(line), 1);
        JointDistribution::Row row;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == prob)
                row.probability = parse_rational_at(cells[i], line);
            else
                row.values.push_back(cells[i]);
        }
        rows.push_back(std::move(row));
    }
    return JointDistribution(VariableUniverse(names), std::move(rows));
}

JointDistribution marginal(const JointDistribution& d, const VariableUniverse& universe)
{
    std::vector<int> columns;
    for (const auto& name : universe.names()) {
        auto col = d.schema().find(name);
        if (!col)
            throw DomainError("distribution has no column '" + name + "'");
        columns.push_back(*col);
    }
    std::map<std::vector<std::string>, Rational> merged;
    for (const auto& row : d.rows()) {
        std::vector<std::string> key;
        for (int c : columns)
            key.push_back(row.values[static_cast<std::size_t>(c)]);
        merged[key] += row.probability;
    }
    std::vector<JointDistribution::Row> rows;
    for (auto& [values, p] : merged)
        rows.push_back({values, p});
    return JointDistribution(universe, std::move(rows));
}

RelationInstance parse_relation_csv(std::string_view text)
{
    const auto lines = lines_of(text);
    if (lines.empty())
        throw DomainError("relation file is empty");
    RelationInstance r;
    r.schema = VariableUniverse(split(lines[0].second, ','));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::vector<std::string> cells = split(lines[k].second, ',');
        if (static_cast<int>(cells.size()) != r.schema.size())
            throw ParseError("expected " + std::to_string(r.schema.size()) + " cells",
                             static_cast<std::size_t>(lines[k].first), 1);
        r.rows.push_back(std::move(cells));
    }
    return r;
}

GuardedSigma parse_constraints(std::string_view text)
{
    static const std::regex query_line(R"(query\s+(\w+)\s*\(([^)]*)\)\s*=\s*(.+))");
    static const std::regex atom(R"((\w+)\s*\(([^)]*)\))");
    static const std::regex degree_line(R"((logdeg|deg)\s+(\w+)?\s*\(([^|)]*)(?:\|([^)]*))?\)\s*<=\s*(\S+))");
    static const std::regex card_line(R"(card\s+(\w+)\s*<=\s*(\S+))");

    std::optional<Query> query;
    struct Pending {
        int line;
        std::string relation;
        std::string target;
        std::string condition;
        Rational b;
    };
    std::vector<Pending> pending;

    for (const auto& [line, s] : lines_of(text)) {
        const auto at = static_cast<std::size_t>(line);
        std::smatch m;
        if (std::regex_match(s, m, query_line)) {
            if (query)
                throw ParseError("second query declaration", at, 1);
            std::vector<std::string> head = split(m[2].str(), ',');
            VariableUniverse u;
            try {
                u = VariableUniverse(head);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), at, 1);
            }
            std::vector<Atom> atoms;
            const std::string body = m[3].str();
            std::size_t consumed = 0;
            for (auto it = std::sregex_iterator(body.begin(), body.end(), atom); it != std::sregex_iterator(); ++it) {
                const std::string between = trim(body.substr(consumed, static_cast<std::size_t>(it->position()) - consumed));
                if (!(between.empty() || (consumed > 0 && between == ",")))
                    throw ParseError("malformed query body near '" + between + "'", at, 1);
                std::vector<std::string> vars = split((*it)[2].str(), ',');
                VarSet schema;
                for (const auto& v : vars) {
                    auto i = u.find(v);
                    if (!i)
                        throw ParseError("atom variable '" + v + "' is not in the query head", at, 1);
                    schema = schema.with(*i);
                }
                atoms.push_back({(*it)[1].str(), schema});
                consumed = static_cast<std::size_t>(it->position() + it->length());
            }
            if (!trim(body.substr(consumed)).empty() || atoms.empty())
                throw ParseError("malformed query body", at, 1);
            try {
                query = Query(m[1].str(), u, atoms);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), at, 1);
            }
        } else if (std::regex_match(s, m, degree_line)) {
            const Rational b = m[1].str() == "logdeg" ? parse_rational_at(m[5].str(), line)
                                                      : log2_exact(m[5].str(), line);
            pending.push_back({line, m[2].str(), m[3].str(), m[4].matched ? m[4].str() : "", b});
        } else if (std::regex_match(s, m, card_line)) {
            pending.push_back({line, m[1].str(), "*", "", log2_exact(m[2].str(), line)});
        } else {
            throw ParseError("unrecognised line", at, 1);
        }
    }
    if (!query)
        throw DomainError("constraint file has no query declaration");

    std::vector<DegreeConstraint> entries;
    for (const Pending& p : pending) {
        const auto at = static_cast<std::size_t>(p.line);
        try {
            std::optional<std::size_t> guard;
            if (!p.relation.empty()) {
                guard = query->find_atom(p.relation);
                if (!guard)
                    throw DomainError("unknown relation '" + p.relation + "'");
            }
            Conditional sigma;
            if (p.target == "*") {
                sigma = Conditional::make(query->atoms()[*guard].schema, VarSet());
            } else {
                const std::string spec = trim(p.condition).empty() ? p.target : p.target + "|" + p.condition;
                const auto [v, u] = parse_conditional(spec, query->universe());
                sigma = Conditional::make(v, u);
            }
            if (!guard)
                guard = GuardedSigma::infer_guard(*query, sigma);
            entries.push_back({sigma, *guard, p.b});
        } catch (const DomainError& e) {
            throw ParseError(e.what(), at, 1);
        }
    }
    return GuardedSigma(*query, std::move(entries));
}

MonSat3Instance parse_3dmonsat(std::string_view text)
{
    MonSat3Instance inst;
    std::optional<int> count;
    for (const auto& [line, s] : lines_of(text)) {
        const auto at = static_cast<std::size_t>(line);
        std::vector<std::string> w = words(s);
        if (w[0] == "c")
            continue;
        if (w[0] == "p") {
            for (std::size_t i = 1; i < w.size() && !count; ++i)
                if (std::all_of(w[i].begin(), w[i].end(), ::isdigit))
                    count = std::stoi(w[i]);
            if (!count || *count < 1)
                throw ParseError("'p' line must give the number of variables", at, 1);
            for (int i = 1; i <= *count; ++i)
                inst.variables.push_back("x" + std::to_string(i));
            continue;
        }
        if (!count)
            throw ParseError("clause before the 'p' line", at, 1);
        if (w[0] != "+" && w[0] != "-")
            throw ParseError("clause must start with '+' or '-'", at, 1);
        if (w.size() == 5 && w[4] == "0")
            w.pop_back();
        if (w.size() != 4)
            throw ParseError("clause must have exactly three variables", at, 1);
        MonSat3Instance::Clause c{};
        for (int k = 0; k < 3; ++k) {
            int v = 0;
            try {
                v = std::stoi(w[static_cast<std::size_t>(k + 1)]);
            } catch (const std::exception&) {
                throw ParseError("bad variable '" + w[static_cast<std::size_t>(k + 1)] + "'", at, 1);
            }
            if (v < 1 || v > *count)
                throw ParseError("variable " + std::to_string(v) + " out of range", at, 1);
            c[static_cast<std::size_t>(k)] = v - 1;
        }
        (w[0] == "+" ? inst.positive : inst.negative).push_back(c);
    }
    inst.validate();
    return inst;
}

Graph parse_graph(std::string_view text)
{
    Graph g;
    std::map<std::string, int> index;
    auto vertex = [&](const std::string& token) {
        const std::string name = is_identifier(token) ? token : "v" + token;
        auto [it, fresh] = index.emplace(name, static_cast<int>(g.vertices.size()));
        if (fresh)
            g.vertices.push_back(name);
        return it->second;
    };
    for (const auto& [line, s] : lines_of(text)) {
        std::vector<std::string> w = words(s);
        if (w.size() == 1) {
            vertex(w[0]);
        } else if (w.size() == 2) {
            const int a = vertex(w[0]);
            const int b = vertex(w[1]);
            if (a == b)
                throw ParseError("self-loop", static_cast<std::size_t>(line), 1);
            g.edges.emplace_back(a, b);
        } else {
            throw ParseError("expected 'u v' or a single vertex", static_cast<std::size_t>(line), 1);
        }
    }
    g.validate();
    return g;
}

PartitionInstance parse_partition(std::string_view text)
{
    PartitionInstance inst;
    for (const auto& [line, s] : lines_of(text))
        for (const auto& w : words(s)) {
            const Rational v = parse_rational_at(w, line);
            if (!v.is_integer() || !v.numerator().fits_slong_p())
                throw ParseError("'" + w + "' is not an integer", static_cast<std::size_t>(line), 1);
            inst.items.push_back(v.numerator().get_si());
        }
    inst.validate();
    return inst;
}

}  // namespace entroplex::cli

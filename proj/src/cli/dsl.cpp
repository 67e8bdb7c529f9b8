#include "entroplex/cli/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace entroplex::cli {

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t t = 0; t < k; ++t) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = column;
        std::size_t len = 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok.kind = Token::Kind::Ident;
            while (i + len < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_'))
                ++len;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = Token::Kind::Int;
            while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len])))
                ++len;
        } else if (c == '>' && i + 1 < text.size() && text[i + 1] == '=') {
            tok.kind = Token::Kind::Punct;
            len = 2;
        } else if (std::string_view("()|;,*/+-").find(c) != std::string_view::npos) {
            tok.kind = Token::Kind::Punct;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, column);
        }
        tok.text = std::string(text.substr(i, len));
        out.push_back(tok);
        advance(len);
    }
    Token end;
    end.line = line;
    end.column = column;
    out.push_back(end);
    return out;
}

struct NameList {
    std::vector<std::string> names;
    int line = 0;
    int column = 0;
};

struct RawTerm {
    Rational weight{1};
    std::string measure;
    std::vector<NameList> operands;
    bool negative = false;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    InequalityExpr parse()
    {
        std::optional<VariableUniverse> declared;
        if (peek().kind == Token::Kind::Ident && peek().text == "vars" && peek(1).kind == Token::Kind::Ident) {
            next();
            NameList names = name_list();
            expect(";");
            try {
                declared = VariableUniverse(names.names);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), names.line, names.column);
            }
        }
        std::vector<RawTerm> lhs = sum();
        expect(">=");
        const Token rhs_start = peek();
        std::vector<RawTerm> rhs = sum();
        if (peek().kind != Token::Kind::End)
            fail("expected end of input");
        if (!rhs.empty())
            for (const RawTerm& t : lhs)
                if (t.negative)
                    throw ParseError("negative coefficients need a right-hand side of 0", rhs_start.line,
                                     rhs_start.column);
        for (const RawTerm& t : rhs)
            if (t.negative)
                throw ParseError("negative coefficients are only allowed on the left of '>= 0'", rhs_start.line,
                                 rhs_start.column);

        VariableUniverse universe;
        if (declared) {
            universe = *declared;
        } else {
            std::set<std::string> mentioned;
            for (const auto* side : {&lhs, &rhs})
                for (const RawTerm& t : *side)
                    for (const NameList& l : t.operands)
                        mentioned.insert(l.names.begin(), l.names.end());
            universe = VariableUniverse::sorted(std::vector<std::string>(mentioned.begin(), mentioned.end()));
        }

        std::vector<std::pair<Rational, InequalityExpr>> parts;
        for (const RawTerm& t : lhs)
            parts.emplace_back(t.weight, expand(universe, t));
        for (const RawTerm& t : rhs)
            parts.emplace_back(-t.weight, expand(universe, t));
        return combine(universe, parts);
    }

private:
    const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
    Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        const Token& t = peek();
        throw ParseError(what + (t.kind == Token::Kind::End ? " at end of input" : ", found '" + t.text + "'"),
                         t.line, t.column);
    }

    bool accept(std::string_view punct)
    {
        if (peek().kind == Token::Kind::Punct && peek().text == punct) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(std::string_view punct)
    {
        if (!accept(punct))
            fail("expected '" + std::string(punct) + "'");
    }

    NameList name_list()
    {
        NameList out;
        out.line = peek().line;
        out.column = peek().column;
        do {
            if (peek().kind != Token::Kind::Ident)
                fail("expected a variable name");
            out.names.push_back(next().text);
        } while (accept(","));
        return out;
    }

    std::vector<RawTerm> sum()
    {
        std::vector<RawTerm> out;
        if (peek().kind == Token::Kind::Int && peek().text == "0" && !(peek(1).kind == Token::Kind::Punct &&
                                                                       (peek(1).text == "*" || peek(1).text == "/"))) {
            next();
            return out;
        }
        do
            out.push_back(term());
        while (accept("+"));
        return out;
    }

    RawTerm term()
    {
        RawTerm t;
        if (peek().kind == Token::Kind::Int || (peek().kind == Token::Kind::Punct && peek().text == "-")) {
            const Token start = peek();
            std::string text;
            if (accept("-"))
                text = "-";
            if (peek().kind != Token::Kind::Int)
                fail("expected an integer");
            text += next().text;
            if (accept("/")) {
                if (peek().kind != Token::Kind::Int)
                    fail("expected a denominator");
                text += "/" + next().text;
            }
            try {
                t.weight = Rational::parse(text);
            } catch (const std::exception& e) {
                throw ParseError(e.what(), start.line, start.column);
            }
            t.negative = t.weight.sign() < 0;
            expect("*");
        }
        if (peek().kind != Token::Kind::Ident)
            fail("expected a measure h(...), I(...) or Im(...)");
        const Token name = next();
        t.measure = name.text;
        expect("(");
        if (t.measure == "h") {
            t.operands.push_back(name_list());
            if (accept("|"))
                t.operands.push_back(name_list());
        } else if (t.measure == "I") {
            t.operands.push_back(name_list());
            expect(";");
            t.operands.push_back(name_list());
            if (accept("|"))
                t.operands.push_back(name_list());
        } else if (t.measure == "Im") {
            t.operands.push_back(name_list());
        } else {
            throw ParseError("unknown measure '" + t.measure + "'", name.line, name.column);
        }
        expect(")");
        return t;
    }

    static VarSet resolve(const VariableUniverse& u, const NameList& l)
    {
        VarSet s;
        for (const auto& n : l.names) {
            auto i = u.find(n);
            if (!i)
                throw ParseError("unknown variable '" + n + "'", l.line, l.column);
            s = s.with(*i);
        }
        return s;
    }

    static InequalityExpr expand(const VariableUniverse& u, const RawTerm& t)
    {
        std::vector<VarSet> s;
        for (const NameList& l : t.operands)
            s.push_back(resolve(u, l));
        const std::size_t given = t.measure == "h" ? 1 : 2;
        if (s.size() > given)
            for (std::size_t k = 0; k < given; ++k)
                if (s[k].subset_of(s[given]))
                    throw ParseError("measure operand is empty once the condition is removed", t.operands[k].line,
                                     t.operands[k].column);
        if (t.measure == "h")
            return s.size() == 1 ? expand_measure(u, Entropy{s[0]}) : expand_measure(u, CondEntropy{s[0], s[1]});
        if (t.measure == "I")
            return s.size() == 2 ? expand_measure(u, MutualInfo{s[0], s[1]})
                                 : expand_measure(u, CondMutualInfo{s[0], s[1], s[2]});
        return expand_measure(u, MultiMutualInfo{s[0]});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

InequalityExpr parse_inequality(std::string_view text)
{
    return Parser(tokenize(text)).parse();
}

std::string print_inequality(const InequalityExpr& expr)
{
    const VariableUniverse& u = expr.universe();
    std::ostringstream out;
    out << "vars " << u.format(u.full()) << ";\n";
    auto side = [&](int sign) {
        std::string text;
        for (const auto& [s, c] : expr.terms()) {
            if (c.sign() != sign)
                continue;
            const Rational w = c.abs();
            if (!text.empty())
                text += " + ";
            if (w != Rational(1))
                text += w.to_string() + "*";
            text += "h(" + u.format(s) + ")";
        }
        return text.empty() ? std::string("0") : text;
    };
    out << side(1) << " >= " << side(-1) << "\n";
    return out.str();
}

std::pair<VarSet, VarSet> parse_conditional(std::string_view text, const VariableUniverse& universe)
{
    auto names = [&](std::string_view part) {
        VarSet s;
        std::size_t start = 0;
        while (start <= part.size()) {
            std::size_t comma = part.find(',', start);
            if (comma == std::string_view::npos)
                comma = part.size();
            std::string name(part.substr(start, comma - start));
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name.empty())
                throw DomainError("empty variable name in conditional '" + std::string(text) + "'");
            s = s.with(universe.index(name));
            start = comma + 1;
        }
        return s;
    };
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        return {names(text), VarSet()};
    return {names(text.substr(0, bar)), names(text.substr(bar + 1))};
}

}  // namespace entroplex::cli

#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "contactsym/symbol.hpp"

namespace contactsym {

// Symbol text format. One block per symbol:
//
//   symbol
//   n 1
//   grading R
//   delta -1/2
//   term -1/2 0 0 0 0 0 1
//   term 3 1 0 0 0 1 0
//   end
//
// Lines hold whitespace-separated tokens; blank lines and lines starting
// with '#' are ignored. Each term line carries a rational coefficient and
// the 2(2n+1) exponents in the order q^1..q^n p^1..p^n t xi_{q^1}..xi_t.
// Output is canonical: terms merged, zero terms dropped, graded-lex order.

namespace detail {

struct Token {
    std::string text;
    int line;
    int col;
};

inline std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<Token>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            if (line[i] == '#') break;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            toks.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
        }
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

inline int parse_int(const Token& tok, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok.text, &pos);
        if (pos != tok.text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'", tok.line,
                         tok.col);
    }
}

inline Rational parse_rational_token(const Token& tok) {
    try {
        return parse_rational(tok.text);
    } catch (const Error& e) {
        throw ParseError(e.what(), tok.line, tok.col);
    }
}

}  // namespace detail

/// Parses a stream of symbol blocks.
inline std::vector<Symbol> parse_symbols(const std::string& text) {
    using detail::Token;
    auto lines = detail::tokenize_lines(text);
    std::vector<Symbol> out;
    std::size_t li = 0;

    auto expect_key = [&](const char* key) -> const std::vector<Token>& {
        if (li >= lines.size())
            throw ParseError(std::string("unexpected end of input, expected '") + key + "'",
                             lines.empty() ? 1 : lines.back()[0].line + 1, 1);
        const auto& toks = lines[li];
        if (toks[0].text != key)
            throw ParseError(std::string("expected '") + key + "', got '" + toks[0].text + "'",
                             toks[0].line, toks[0].col);
        return toks;
    };

    while (li < lines.size()) {
        {
            const auto& toks = expect_key("symbol");
            if (toks.size() != 1)
                throw ParseError("unexpected tokens after 'symbol'", toks[1].line, toks[1].col);
            ++li;
        }
        const auto& ntoks = expect_key("n");
        if (ntoks.size() != 2) throw ParseError("expected 'n <integer>'", ntoks[0].line, 1);
        int n = detail::parse_int(ntoks[1], "integer n");
        if (n < 1) throw ParseError("n must be >= 1", ntoks[1].line, ntoks[1].col);
        ++li;

        const auto& gtoks = expect_key("grading");
        if (gtoks.size() != 2) throw ParseError("expected 'grading S|R'", gtoks[0].line, 1);
        Grading grading;
        if (gtoks[1].text == "S") grading = Grading::S;
        else if (gtoks[1].text == "R") grading = Grading::R;
        else
            throw ParseError("unknown grading tag '" + gtoks[1].text + "'", gtoks[1].line,
                             gtoks[1].col);
        ++li;

        const auto& dtoks = expect_key("delta");
        if (dtoks.size() != 2) throw ParseError("expected 'delta <rational>'", dtoks[0].line, 1);
        Rational delta = detail::parse_rational_token(dtoks[1]);
        ++li;

        Poly poly(n);
        while (li < lines.size() && lines[li][0].text == "term") {
            const auto& toks = lines[li];
            const int want = num_vars(n);
            if (static_cast<int>(toks.size()) != 2 + want)
                throw ParseError("term needs a coefficient and " + std::to_string(want) +
                                     " exponents",
                                 toks[0].line, toks[0].col);
            Rational coeff = detail::parse_rational_token(toks[1]);
            Monomial m{std::vector<int>(want, 0)};
            for (int j = 0; j < want; ++j) {
                int e = detail::parse_int(toks[2 + j], "exponent");
                if (e < 0)
                    throw ParseError("exponents must be >= 0", toks[2 + j].line, toks[2 + j].col);
                m.exps[j] = e;
            }
            poly.add_term(m, coeff);
            ++li;
        }

        const auto& etoks = expect_key("end");
        if (etoks.size() != 1)
            throw ParseError("unexpected tokens after 'end'", etoks[1].line, etoks[1].col);
        ++li;

        out.emplace_back(n, Weight{std::move(delta)}, grading, std::move(poly));
    }
    return out;
}

/// Parses exactly one symbol.
inline Symbol parse_symbol(const std::string& text) {
    auto all = parse_symbols(text);
    if (all.empty()) throw ParseError("no symbol block found", 1, 1);
    if (all.size() > 1) throw ParseError("expected a single symbol block", 1, 1);
    return std::move(all.front());
}

inline std::string serialize_symbol(const Symbol& u) {
    std::string out = "symbol\n";
    out += "n " + std::to_string(u.n) + "\n";
    out += "grading " + to_string(u.grading) + "\n";
    out += "delta " + to_string(u.weight.value) + "\n";
    for (const auto& [m, c] : u.poly.terms()) {
        out += "term " + to_string(c);
        for (int e : m.exps) out += " " + std::to_string(e);
        out += "\n";
    }
    out += "end\n";
    return out;
}

inline std::string serialize_symbols(const std::vector<Symbol>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += "\n";
        out += serialize_symbol(list[i]);
    }
    return out;
}

}  // namespace contactsym

/**
 * @file format.hpp
 * @brief Plain-text and LaTeX rendering of combinations, plus a parser for the
 *        plain-text form.
 *
 * Text form: terms joined by " + " / " - ", each term
 *     [int* | (p/q)*][pi^e*]monomial    e.g.  "(1/2)*z3^2 - (1/1260)*pi^6"
 * A term with no pi and no zeta factor is a bare rational ("3", "-1/2").
 */
#pragma once

#include <lzeta/monomial.hpp>
#include <lzeta/rational.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzeta {

struct ParsedTerm {
    Rational coeff;
    int pi_exponent = 0;
    ZetaMonomial monomial;
};

namespace detail {

/// One signed term "c*factors"; unit magnitudes are elided when factors exist.
inline std::string text_signed(const Rational& c, const std::string& factors, bool first) {
    const Rational mag = c.abs();
    std::string body;
    if (factors.empty()) body = mag.str();
    else if (mag == Rational(1)) body = factors;
    else if (mag.is_integer()) body = mag.str() + "*" + factors;
    else body = "(" + mag.str() + ")*" + factors;

    if (first) return (c.sign() < 0 ? "-" : "") + body;
    return (c.sign() < 0 ? " - " : " + ") + body;
}

inline std::string text_factors(int pi_exp, const ZetaMonomial& m) {
    std::string factors;
    if (pi_exp == 1) factors = "pi";
    if (pi_exp > 1) factors = "pi^" + std::to_string(pi_exp);
    if (!m.is_unit()) factors += (factors.empty() ? "" : "*") + m.str();
    return factors;
}

inline std::string text_term(const Rational& c, int pi_exp, const ZetaMonomial& m, bool first) {
    return text_signed(c, text_factors(pi_exp, m), first);
}

inline std::string latex_signed(const Rational& c, const std::string& factors, bool first) {
    const Rational mag = c.abs();
    std::string coeff;
    if (mag.is_integer()) coeff = (mag == Rational(1) && !factors.empty()) ? "" : mag.str();
    else coeff = "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";

    std::string sign = c.sign() < 0 ? "-" : (first ? "" : "+");
    return sign + coeff + factors;
}

inline std::string latex_factors(int pi_exp, const ZetaMonomial& m) {
    std::string factors;
    if (pi_exp == 1) factors = "\\pi";
    if (pi_exp > 1) factors = "\\pi^{" + std::to_string(pi_exp) + "}";
    return factors + m.latex();
}

inline std::string latex_term(const Rational& c, int pi_exp, const ZetaMonomial& m, bool first) {
    return latex_signed(c, latex_factors(pi_exp, m), first);
}

}  // namespace detail

inline std::string to_text(const ZetaCombination& c) {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, q] : c.display_terms()) {
        s += detail::text_term(q, 0, m, first);
        first = false;
    }
    return s;
}

inline std::string to_text(const PiReducedCombination& c) {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, sc] : c.display_terms()) {
        s += detail::text_term(sc.coeff(), sc.pi_exponent(), m, first);
        first = false;
    }
    return s;
}

inline std::string to_latex(const ZetaCombination& c) {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, q] : c.display_terms()) {
        s += detail::latex_term(q, 0, m, first);
        first = false;
    }
    return s;
}

inline std::string to_latex(const PiReducedCombination& c) {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, sc] : c.display_terms()) {
        s += detail::latex_term(sc.coeff(), sc.pi_exponent(), m, first);
        first = false;
    }
    return s;
}

inline std::string pi_scalar_text(const PiPowerScalar& s) {
    return detail::text_term(s.coeff(), s.pi_exponent(), ZetaMonomial{}, true);
}

inline std::vector<ParsedTerm> parse_terms(std::string_view text) {
    std::string s(text);
    std::vector<ParsedTerm> out;
    if (s == "0") return out;
    // Split on " + " / " - ", remembering each term's sign.
    std::vector<std::pair<int, std::string>> raw;
    int sign = 1;
    std::size_t pos = 0;
    if (!s.empty() && s[0] == '-') {
        sign = -1;
        pos = 1;
    }
    while (true) {
        std::size_t plus = s.find(" + ", pos), minus = s.find(" - ", pos);
        std::size_t cut = std::min(plus, minus);
        raw.emplace_back(sign, s.substr(pos, cut - pos));
        if (cut == std::string::npos) break;
        sign = (cut == minus) ? -1 : 1;
        pos = cut + 3;
    }
    for (const auto& [sg, body] : raw) {
        if (body.empty()) throw std::invalid_argument("parse_terms: empty term in '" + s + "'");
        ParsedTerm t{Rational(sg), 0, {}};
        std::map<int, int> factors;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, '*')) {
            if (tok.empty()) throw std::invalid_argument("parse_terms: malformed term '" + body + "'");
            if (tok.front() == '(' && tok.back() == ')') {
                t.coeff *= Rational::parse(tok.substr(1, tok.size() - 2));
            } else if (std::isdigit(static_cast<unsigned char>(tok.front()))) {
                t.coeff *= Rational::parse(tok);
            } else if (tok == "pi") {
                t.pi_exponent += 1;
            } else if (tok.rfind("pi^", 0) == 0) {
                t.pi_exponent += std::stoi(tok.substr(3));
            } else {
                const ZetaMonomial m = ZetaMonomial::parse(tok);
                for (const auto& [n, k] : m.factors()) factors[n] += k;
            }
        }
        t.monomial = ZetaMonomial(std::move(factors));
        out.push_back(std::move(t));
    }
    return out;
}

inline ZetaCombination parse_zeta_combination(std::string_view text) {
    ZetaCombination c;
    for (const auto& t : parse_terms(text)) {
        if (t.pi_exponent != 0) throw std::invalid_argument("parse_zeta_combination: unexpected pi factor");
        c.add(t.monomial, t.coeff);
    }
    return c;
}

inline PiReducedCombination parse_pi_reduced(std::string_view text, int weight) {
    PiReducedCombination c(weight);
    for (const auto& t : parse_terms(text)) c.add(t.monomial, PiPowerScalar(t.coeff, t.pi_exponent));
    return c;
}

}  // namespace lzeta

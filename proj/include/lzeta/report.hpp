/**
 * @file report.hpp
 * @brief Text and LaTeX renderings of certificates, surveys, verification
 *        reports and partition listings.
 */
#pragma once

#include <lzeta/format.hpp>
#include <lzeta/numerics.hpp>
#include <lzeta/serialize.hpp>
#include <lzeta/solver.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace lzeta {

namespace detail {

inline std::string lz_factors(std::pair<int, int> ab, int pi_exp, bool latex) {
    std::string pi;
    if (pi_exp == 1) pi = latex ? "\\pi " : "pi*";
    if (pi_exp > 1) pi = latex ? "\\pi^{" + std::to_string(pi_exp) + "}" : "pi^" + std::to_string(pi_exp) + "*";
    return pi + "Lz(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")";
}

// "lhs = rhs" with every rational multiplied by `scale`.
inline std::string certificate_line(const Certificate& c, const Rational& scale, bool latex) {
    auto term = [&](const Rational& q, const std::string& f, bool first) {
        return latex ? latex_signed(q * scale, f, first) : text_signed(q * scale, f, first);
    };
    std::string lhs = term(Rational(1), latex ? latex_factors(c.pi_shift(), c.target) : text_factors(c.pi_shift(), c.target),
                           true);
    std::string rhs;
    bool first = true;
    for (auto it = c.lz_terms.rbegin(); it != c.lz_terms.rend(); ++it) {
        rhs += term(it->second.coeff(), lz_factors(it->first, it->second.pi_exponent(), latex), first);
        first = false;
    }
    for (const auto& [m, s] : c.known_remainder.display_terms()) {
        rhs += term(s.coeff(), latex ? latex_factors(s.pi_exponent(), m) : text_factors(s.pi_exponent(), m), first);
        first = false;
    }
    if (first) rhs = "0";
    return lhs + (latex ? "=" : " = ") + rhs;
}

}  // namespace detail

/// "pi^2*z3 = 12*Lz(4,1) - 6*Lz(3,2)"
inline std::string to_text(const Certificate& c) { return detail::certificate_line(c, Rational(1), false); }

/// The same identity with denominators cleared to the least common one.
inline std::string to_text_cleared(const Certificate& c) {
    return detail::certificate_line(c, Rational(common_denominator(c)), false);
}

inline std::string to_latex(const Certificate& c) { return detail::certificate_line(c, Rational(1), true); }

inline std::string to_text(const ExpressResult& r) {
    std::string out;
    if (r.certificate) {
        out += to_text(*r.certificate) + "\n";
        if (common_denominator(*r.certificate) != 1) out += "cleared: " + to_text_cleared(*r.certificate) + "\n";
    }
    out += "status: " + to_string(r.status) + " (" + r.target.str() + ", weight " + std::to_string(r.weight) +
           ", mode " + to_string(r.mode) + ")\n";
    if (!r.dependencies.empty()) {
        out += "depends on:";
        for (const auto& m : r.dependencies) out += " " + m.str();
        out += "\n";
    }
    return out;
}

inline std::string to_latex(const ExpressResult& r) {
    if (!r.certificate) return "% " + r.target.str() + ": " + to_string(r.status) + "\n";
    return to_latex(*r.certificate) + "\n";
}

inline std::string lz_line_text(std::pair<int, int> ab, const std::string& body) {
    return "Lz(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ") = " + body;
}

inline std::string lz_line_latex(std::pair<int, int> ab, const std::string& body) {
    return "Lz(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")=" + body;
}

inline std::string join_monomials(const std::vector<ZetaMonomial>& ms) {
    if (ms.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + ms[i].str();
    return s;
}

inline std::string to_text(const SurveyReport& r) {
    std::string out = "mode: " + to_string(r.mode) + "\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "%4s %9s %8s %5s %9s  %s\n", "N", "equations", "unknowns", "rank", "counting",
                  "inexpressible");
    out += buf;
    for (const auto& rec : r.records) {
        const std::string counting = std::to_string(rec.counting.equations) + "/" + std::to_string(rec.counting.unknowns);
        std::snprintf(buf, sizeof buf, "%4d %9zu %8zu %5zu %9s  ", rec.weight, rec.equations, rec.unknowns, rec.rank,
                      counting.c_str());
        out += buf + join_monomials(rec.inexpressible) + "\n";
    }
    for (const auto& n : r.notes) out += "note: " + n + "\n";
    return out;
}

inline std::string to_latex(const SurveyReport& r) {
    std::string out = "\\begin{tabular}{rrrrl}\n$N$ & equations & unknowns & rank & inexpressible\\\\\n";
    for (const auto& rec : r.records) {
        std::string inex;
        for (std::size_t i = 0; i < rec.inexpressible.size(); ++i)
            inex += (i ? ", $" : "$") + rec.inexpressible[i].latex() + "$";
        out += std::to_string(rec.weight) + " & " + std::to_string(rec.equations) + " & " +
               std::to_string(rec.unknowns) + " & " + std::to_string(rec.rank) + " & " + inex + "\\\\\n";
    }
    return out + "\\end{tabular}\n";
}

inline std::string to_text(const VerificationReport& r) {
    std::string out = lz_line_text({r.a, r.b}, r.expansion) + "\n";
    out += "symbolic   " + r.symbolic_value + "\n";
    if (r.series_value) out += "series     " + *r.series_value + "\n";
    if (r.quadrature_value) out += "quadrature " + *r.quadrature_value + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", r.max_deviation_digits);
    if (r.max_deviation_digits > 0) out += "agreement  " + std::string(buf) + " digits (threshold " +
                                           std::to_string(r.threshold_digits) + ")\n";
    out += (r.passed ? "PASS" : "FAIL: " + r.message) + "\n";
    return out;
}

inline std::string to_text(const PartitionListing& l) {
    std::string out;
    for (const auto& x : l.partitions) out += x.str() + "\n";
    return out + "count: " + std::to_string(l.partitions.size()) + "\n";
}

inline std::string to_latex(const PartitionListing& l) {
    std::string out;
    for (const auto& x : l.partitions) {
        std::string s = x.str();
        out += "\\{" + s.substr(1, s.size() - 2) + "\\}\n";
    }
    return out;
}

}  // namespace lzeta

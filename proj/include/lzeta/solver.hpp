/**
 * @file solver.hpp
 * @brief Expressibility of odd-zeta monomials as Q(pi)-combinations of Lz
 *        values, with exact certificates and a per-weight survey.
 *
 * At weight N every Lz(N-b,b) reduces to sum_m q_m pi^{N-wt(m)} m over odd
 * monomials m. Dividing each column by its pi power turns Q(pi)-membership
 * into Q-row-space membership of a rational matrix.
 *
 * Columns:
 *  - optimistic: odd monomials of weight exactly N. Lower-weight monomials
 *    and the pure pi^N term are treated as known.
 *  - strict: every non-unit odd monomial of weight <= N and of the same parity
 *    as N. Only pi^N is known.
 */
#pragma once

#include <lzeta/expansion.hpp>
#include <lzeta/matrix.hpp>
#include <lzeta/monomial.hpp>
#include <lzeta/partitions.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lzeta {

enum class Mode { optimistic, strict };

inline std::string to_string(Mode m) { return m == Mode::optimistic ? "optimistic" : "strict"; }

inline Mode parse_mode(const std::string& s) {
    if (s == "optimistic") return Mode::optimistic;
    if (s == "strict") return Mode::strict;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

/// Products of odd zeta values of weight exactly w, arguments >= 3, in
/// enumeration order of the partitions.
inline std::vector<ZetaMonomial> odd_monomials(int w) {
    std::vector<ZetaMonomial> out;
    if (w < 3) return out;
    for (const auto& x : enumerate_partitions(w, PartitionFilter{3, std::nullopt, Parity::odd}))
        out.push_back(ZetaMonomial::from_partition(x));
    return out;
}

struct SystemRow {
    std::pair<int, int> lz;        // (a,b)
    std::vector<Rational> coeffs;  // one per column, pi power divided out
    PiReducedCombination known;    // everything outside the columns
};

struct LinearSystem {
    int weight = 0;
    Mode mode = Mode::optimistic;
    std::vector<ZetaMonomial> columns;
    std::vector<SystemRow> rows;

    std::optional<std::size_t> column_index(const ZetaMonomial& m) const {
        auto it = std::find(columns.begin(), columns.end(), m);
        if (it == columns.end()) return std::nullopt;
        return static_cast<std::size_t>(it - columns.begin());
    }

    RationalMatrix matrix() const {
        RationalMatrix out(rows.size(), columns.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < columns.size(); ++c) out(r, c) = rows[r].coeffs[c];
        return out;
    }
};

/// Rows b = 1..floor(N/2); rows with no unknown entries are dropped.
/// `extra_columns` are appended when not already present (lifted targets).
inline LinearSystem build_system(int n, Mode mode, const std::vector<ZetaMonomial>& extra_columns = {}) {
    if (n < 3) throw std::invalid_argument("build_system: N must be >= 3");
    LinearSystem sys;
    sys.weight = n;
    sys.mode = mode;
    sys.columns = odd_monomials(n);
    if (mode == Mode::strict)
        for (int w = n - 2; w >= 3; w -= 2)
            for (auto& m : odd_monomials(w)) sys.columns.push_back(std::move(m));
    for (const auto& m : extra_columns) {
        if (!m.is_odd_only() || m.is_unit() || m.weight() > n)
            throw std::invalid_argument("build_system: extra column " + m.str() + " is not an odd monomial of weight <= N");
        if (!sys.column_index(m)) sys.columns.push_back(m);
    }

    for (auto& [ab, combo] : expand_weight(n)) {
        PiReducedCombination reduced(n);
        reduced += reduce_even(combo);
        SystemRow row{ab, std::vector<Rational>(sys.columns.size()), PiReducedCombination(n)};
        bool touches = false;
        for (const auto& [m, q] : reduced.coefficients()) {
            if (auto c = sys.column_index(m)) {
                row.coeffs[*c] = q;
                touches = true;
            } else {
                row.known.add_coeff(m, q);
            }
        }
        if (touches) sys.rows.push_back(std::move(row));
    }
    // expand_weight is keyed by (a,b) with a descending; order rows by b.
    std::sort(sys.rows.begin(), sys.rows.end(),
              [](const SystemRow& x, const SystemRow& y) { return x.lz.second < y.lz.second; });
    return sys;
}

// ---------------------------------------------------------------------------
// Certificates

/// pi^{weight - wt(target)} * target
///     = sum_{(a,b)} lz_terms[(a,b)] * Lz(a,b) + known_remainder.
struct Certificate {
    ZetaMonomial target;
    int weight = 0;
    std::map<std::pair<int, int>, PiPowerScalar> lz_terms;
    PiReducedCombination known_remainder;

    int pi_shift() const { return weight - target.weight(); }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Substitutes the reduced expansion of every Lz term and compares exactly.
inline bool check_certificate(const Certificate& cert) {
    if (cert.pi_shift() < 0) return false;
    PiReducedCombination lhs(cert.weight);
    lhs.add(cert.target, PiPowerScalar(1, cert.pi_shift()));
    PiReducedCombination rhs(cert.weight);
    rhs += cert.known_remainder;
    for (const auto& [ab, s] : cert.lz_terms) {
        if (ab.first + ab.second + s.pi_exponent() != cert.weight) return false;
        rhs += reduced_lz(ab.first, ab.second).scaled(s);
    }
    return lhs == rhs;
}

/// Least common denominator of every rational in the certificate.
inline BigInt common_denominator(const Certificate& cert) {
    BigInt d = 1;
    for (const auto& [ab, s] : cert.lz_terms) d = lcm(d, s.coeff().denominator());
    for (const auto& [m, q] : cert.known_remainder.coefficients()) d = lcm(d, q.denominator());
    return d;
}

/// Non-unit monomials in the known remainder.
inline std::vector<ZetaMonomial> remainder_dependencies(const Certificate& cert) {
    std::vector<ZetaMonomial> out;
    for (const auto& [m, q] : cert.known_remainder.display_terms())
        if (!m.is_unit()) out.push_back(m);
    return out;
}

enum class ExpressStatus { expressible, not_expressible, unresolved_dependency };

inline std::string to_string(ExpressStatus s) {
    switch (s) {
        case ExpressStatus::expressible: return "expressible";
        case ExpressStatus::not_expressible: return "not expressible";
        case ExpressStatus::unresolved_dependency: return "unresolved dependency";
    }
    return "?";
}

struct ExpressResult {
    ExpressStatus status = ExpressStatus::not_expressible;
    Mode mode = Mode::optimistic;
    ZetaMonomial target;
    int weight = 0;
    std::optional<Certificate> certificate;  // present unless not_expressible
    std::vector<ZetaMonomial> dependencies;  // lower-weight monomials the certificate leans on

    friend bool operator==(const ExpressResult&, const ExpressResult&) = default;
};

namespace detail {

inline std::optional<Certificate> certify(const LinearSystem& sys, const ZetaMonomial& target) {
    const auto col = sys.column_index(target);
    if (!col) return std::nullopt;
    std::vector<Rational> unit(sys.columns.size());
    unit[*col] = Rational(1);
    const auto lambda = solve_membership(sys.matrix(), unit);
    if (!lambda) return std::nullopt;

    Certificate cert;
    cert.target = target;
    cert.weight = sys.weight;
    cert.known_remainder = PiReducedCombination(sys.weight);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        const Rational& l = (*lambda)[r];
        if (l.is_zero()) continue;
        cert.lz_terms.emplace(sys.rows[r].lz, PiPowerScalar(l));
        cert.known_remainder -= sys.rows[r].known.scaled(PiPowerScalar(l));
    }
    if (!check_certificate(cert)) throw std::logic_error("express: certificate failed the substitution check");
    return cert;
}

}  // namespace detail

/// Searches for a certificate of `target` among the Lz values of weight
/// `weight` (default: the target's weight). A certificate with no lower-weight
/// monomials in its remainder is preferred in both modes. In strict mode a
/// certificate that needs lower-weight monomials is reported as an unresolved
/// dependency.
inline ExpressResult express(const ZetaMonomial& target, Mode mode, std::optional<int> weight = std::nullopt) {
    if (target.is_unit() || !target.is_odd_only())
        throw std::invalid_argument("express: target must be a product of odd zeta values, got '" + target.str() + "'");
    for (const auto& [n, k] : target.factors())
        if (n < 3) throw std::invalid_argument("express: arguments must be >= 3");
    const int w = weight.value_or(target.weight());
    if (w < target.weight())
        throw std::invalid_argument("express: weight " + std::to_string(w) + " is below the target weight " +
                                    std::to_string(target.weight()));

    ExpressResult result;
    result.mode = mode;
    result.target = target;
    result.weight = w;

    if (auto pure = detail::certify(build_system(w, Mode::strict, {target}), target)) {
        result.status = ExpressStatus::expressible;
        result.certificate = std::move(pure);
        return result;
    }
    if (auto cert = detail::certify(build_system(w, Mode::optimistic, {target}), target)) {
        result.dependencies = remainder_dependencies(*cert);
        result.status = mode == Mode::optimistic ? ExpressStatus::expressible : ExpressStatus::unresolved_dependency;
        result.certificate = std::move(cert);
        return result;
    }
    result.status = ExpressStatus::not_expressible;
    return result;
}

// ---------------------------------------------------------------------------
// Survey

/// The equation and unknown counts used in the counting argument: for
/// N = 2M+1, M-3+1 equations against |PO_3(N)| - 1 unknowns (zeta(N) itself
/// excluded); for N = 2M, M-2+1 equations against |PO_3(N)| unknowns.
struct CountingQuantities {
    int m = 0;
    long equations = 0;
    long unknowns = 0;
    bool deficient = false;  // equations < unknowns

    friend bool operator==(const CountingQuantities&, const CountingQuantities&) = default;
};

inline CountingQuantities counting_quantities(int n) {
    CountingQuantities q;
    const long po3 = n >= 3 ? count_partitions(n, PartitionFilter{3, std::nullopt, Parity::odd}).get_si() : 0;
    q.m = n / 2;
    if (n % 2 == 1) {
        q.equations = q.m - 3 + 1;
        q.unknowns = po3 - 1;
    } else {
        q.equations = q.m - 2 + 1;
        q.unknowns = po3;
    }
    q.deficient = q.equations < q.unknowns;
    return q;
}

/// Threshold stated for the counting argument: deficiency for every N > 20.
inline constexpr int kClaimedThreshold = 20;

struct SurveyRecord {
    int weight = 0;
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::vector<ZetaMonomial> expressible;
    std::vector<ZetaMonomial> inexpressible;
    CountingQuantities counting;

    bool rank_deficient() const { return !inexpressible.empty(); }
    bool claimed_deficient() const { return weight > kClaimedThreshold; }

    friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct SurveyReport {
    Mode mode = Mode::optimistic;
    int n_min = 0;
    int n_max = 0;
    std::vector<SurveyRecord> records;
    std::vector<std::string> notes;  // disagreements between verdicts

    friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

inline SurveyRecord survey_weight(int n, Mode mode) {
    const LinearSystem sys = build_system(n, mode);
    const RationalMatrix a = sys.matrix();
    SurveyRecord rec;
    rec.weight = n;
    rec.equations = sys.rows.size();
    rec.unknowns = sys.columns.size();
    rec.rank = rank(a);
    for (std::size_t c = 0; c < sys.columns.size(); ++c) {
        std::vector<Rational> unit(sys.columns.size());
        unit[c] = Rational(1);
        (solve_membership(a, unit) ? rec.expressible : rec.inexpressible).push_back(sys.columns[c]);
    }
    rec.counting = counting_quantities(n);
    return rec;
}

inline std::vector<std::string> survey_notes(const std::vector<SurveyRecord>& records) {
    std::vector<std::string> notes;
    for (const auto& r : records) {
        const std::string n = "N=" + std::to_string(r.weight) + ": ";
        if (r.rank_deficient() != r.claimed_deficient())
            notes.push_back(n + "rank verdict (" + (r.rank_deficient() ? "deficient" : "full") +
                            ") differs from the N > 20 threshold");
        if (r.counting.equations < 1) continue;  // counts are only meaningful once equations exist
        if (r.counting.deficient != r.claimed_deficient())
            notes.push_back(n + "counting verdict (" + std::to_string(r.counting.equations) + " equations vs " +
                            std::to_string(r.counting.unknowns) + " unknowns) differs from the N > 20 threshold");
        if (r.counting.deficient != r.rank_deficient())
            notes.push_back(n + "counting and rank verdicts differ");
    }
    return notes;
}

/// Weights are independent; with `parallel` each runs on its own thread.
/// Records are always ordered by N.
inline SurveyReport survey(int n_min, int n_max, Mode mode, bool parallel = false) {
    if (n_min < 3 || n_max < n_min) throw std::invalid_argument("survey: need 3 <= from <= to");
    SurveyReport rep;
    rep.mode = mode;
    rep.n_min = n_min;
    rep.n_max = n_max;
    if (parallel) {
        std::vector<std::future<SurveyRecord>> jobs;
        for (int n = n_min; n <= n_max; ++n)
            jobs.push_back(std::async(std::launch::async, [n, mode] { return survey_weight(n, mode); }));
        for (auto& j : jobs) rep.records.push_back(j.get());
    } else {
        for (int n = n_min; n <= n_max; ++n) rep.records.push_back(survey_weight(n, mode));
    }
    rep.notes = survey_notes(rep.records);
    return rep;
}

}  // namespace lzeta

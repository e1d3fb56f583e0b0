/**
 * @file numerics.hpp
 * @brief High-precision evaluation of zeta values and Lz(a,b), independent of
 *        the symbolic expansion.
 *
 * Two independent routes to Lz(a,b):
 *
 *  - lz_series(): the S-coefficient series
 *        Lz(a,b) = (-1)^{a+b-1}/b! * sum_{n>=b} S_n^{(b)} / n^a,
 *        S_n^{(k)} = sum over compositions n = m_1+...+m_k of prod 1/m_j.
 *    The raw series converges like (log n)^{b-1}/n^a, far too slowly for 50
 *    digits, so the sum is evaluated through its Mellin form
 *        sum_n S_n^{(k)}/n^s = 1/(s-1)! int_0^inf z^{s-1} (-log(1-e^{-z}))^k dz
 *    split at z = 1. On [1,inf) the S_n^{(k)} series is integrated termwise
 *    (terms decay like e^{-n}); on [0,1] we use -log(1-e^{-z}) = -log z + h(z)
 *    with h analytic in |z| < 2 pi, and integrate termwise exactly.
 *
 *  - lz_quadrature(): tanh-sinh quadrature of
 *        1/((a-1)! b!) int_0^1 log^{a-1}(t) log^b(1-t) / t dt
 *    with level halving until two consecutive levels agree.
 *
 * zeta_value() uses Euler-Maclaurin summation with Bernoulli numbers taken
 * from the exact core.
 */
#pragma once

#include <lzeta/bernoulli.hpp>
#include <lzeta/bigfloat.hpp>
#include <lzeta/expansion.hpp>
#include <lzeta/format.hpp>
#include <lzeta/monomial.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lzeta {

struct PrecisionUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Guard digits for a sum of about `terms` terms: 10 + ceil(log10 terms).
inline int guard_digits_for(long terms) {
    return 10 + static_cast<int>(std::ceil(std::log10(static_cast<double>(std::max(terms, 2L)))));
}

// ---------------------------------------------------------------------------
// zeta(s)

inline BigFloat zeta_value(int s, Precision prec) {
    if (s < 2) throw std::domain_error("zeta_value: s must be >= 2");
    const mpfr_prec_t bits = prec.bits();
    const BigFloat eps = BigFloat::pow10(-prec.working_digits(), bits);
    const unsigned long n = static_cast<unsigned long>(prec.working_digits()) + 10;

    BigFloat sum(bits);
    for (unsigned long k = 1; k < n; ++k) sum += inverse_power(k, s, bits);
    BigFloat tail = inverse_power(n, s - 1, bits) / BigFloat(s - 1, bits);
    tail += inverse_power(n, s, bits) / BigFloat(2, bits);
    sum += tail;

    // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * n^{-s-2j+1}. For real
    // s the remainder is bounded by the first omitted term.
    BigInt rising = s;  // s(s+1)...(s+2j-2), starts at j = 1
    for (unsigned j = 1; j < 4000; ++j) {
        Rational c = bernoulli_number(2 * j) / Rational(factorial(2 * j)) * Rational(rising);
        BigFloat term = BigFloat(c, bits) * inverse_power(n, s + 2 * j - 1, bits);
        if (abs(term) < eps) return sum;
        sum += term;
        rising *= BigInt(s + 2 * j - 1) * BigInt(s + 2 * j);
    }
    throw PrecisionUnreachable("zeta_value: Euler-Maclaurin did not converge");
}

// ---------------------------------------------------------------------------
// S_n^{(k)} tables

struct STable {
    int max_order = 0;
    int max_index = 0;
    std::vector<std::vector<BigFloat>> entries;  // entries[k][n], k in [1,max_order], n in [0,max_index]

    const BigFloat& at(int k, int n) const { return entries.at(k).at(n); }
};

/// S_n^{(k)} = sum_{m=1}^{n-k+1} S_m^{(1)} S_{n-m}^{(k-1)}, S_n^{(1)} = 1/n.
inline STable build_s_table(int max_order, int max_index, mpfr_prec_t bits) {
    if (max_order < 1) throw std::invalid_argument("build_s_table: max_order must be >= 1");
    STable t{max_order, max_index, {}};
    t.entries.assign(max_order + 1, std::vector<BigFloat>(max_index + 1, BigFloat(bits)));
    std::vector<BigFloat> inv(max_index + 1, BigFloat(bits));
    for (int n = 1; n <= max_index; ++n) inv[n] = BigFloat(1, bits) / BigFloat(n, bits);
    for (int n = 1; n <= max_index; ++n) t.entries[1][n] = inv[n];
    for (int k = 2; k <= max_order; ++k) {
        for (int n = k; n <= max_index; ++n) {
            BigFloat acc(bits);
            for (int m = 1; m <= n - k + 1; ++m) acc += inv[m] * t.entries[k - 1][n - m];
            t.entries[k][n] = std::move(acc);
        }
    }
    return t;
}

/// Exact-mode table: entries[k][n] as rationals.
inline std::vector<std::vector<Rational>> build_s_table_exact(int max_order, int max_index) {
    std::vector<std::vector<Rational>> s(max_order + 1, std::vector<Rational>(max_index + 1));
    for (int n = 1; n <= max_index; ++n) s[1][n] = Rational(1, n);
    for (int k = 2; k <= max_order; ++k)
        for (int n = k; n <= max_index; ++n)
            for (int m = 1; m <= n - k + 1; ++m) s[k][n] += Rational(1, m) * s[k - 1][n - m];
    return s;
}

// ---------------------------------------------------------------------------
// sum_{n>=k} S_n^{(k)} / n^s

struct SeriesOptions {
    long term_budget = 20000;
};

namespace detail {

// Coefficients of h(z) = z/2 - sum_{m>=1} B_{2m} z^{2m} / (2m (2m)!) up to z^order.
inline std::vector<BigFloat> h_series(int order, mpfr_prec_t bits) {
    std::vector<BigFloat> h(order + 1, BigFloat(bits));
    if (order >= 1) h[1] = BigFloat(Rational(1, 2), bits);
    for (int m = 1; 2 * m <= order; ++m) {
        Rational c = -bernoulli_number(2 * m) / Rational(BigInt(BigInt(2 * m) * factorial(2 * m)));
        h[2 * m] = BigFloat(c, bits);
    }
    return h;
}

inline std::vector<BigFloat> truncated_product(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b,
                                               mpfr_prec_t bits) {
    const std::size_t n = a.size();
    std::vector<BigFloat> out(n, BigFloat(bits));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

// (1/(s-1)!) int_0^1 z^{s-1} (-log z + h(z))^k dz, truncated at z^order.
inline BigFloat near_part(int k, int s, int order, mpfr_prec_t bits, BigFloat* last_block) {
    const auto h = h_series(order, bits);
    std::vector<BigFloat> power(order + 1, BigFloat(bits));
    power[0] = BigFloat(1, bits);  // h^0
    BigFloat total(bits);
    BigFloat block(bits);  // size of the highest-order contributions, for the tail check
    for (int j = 0; j <= k; ++j) {
        if (j > 0) power = truncated_product(power, h, bits);
        const int i = k - j;  // power of -log z
        const BigFloat weight = BigFloat(Rational(BigInt(binomial(k, j) * factorial(i))), bits);
        for (int m = j; m <= order; ++m) {
            if (power[m].is_zero()) continue;
            // int_0^1 z^{s-1+m} (-log z)^i dz = i! / (s+m)^{i+1}
            BigFloat term = weight * power[m] * inverse_power(s + m, i + 1, bits);
            total += term;
            if (m + 8 > order) block += abs(term);
        }
    }
    const BigFloat norm(Rational(factorial(s - 1)), bits);
    if (last_block) *last_block = block / norm;
    return total / norm;
}

}  // namespace detail

/// sum_{n >= k} S_n^{(k)} / n^s for k, s >= 1.
///
/// Far part: terms S_n e^{-n} sum_{j<s} n^j/j! / n^s; once n >= 2(s+k) the
/// ratio of consecutive terms stays below 0.61, so stopping at a term below
/// eps/4 bounds the tail by eps. Near part: the h-series has radius 2 pi, and
/// truncation is accepted when the last eight orders contribute below eps.
inline BigFloat series_sum(int k, int s, Precision prec, SeriesOptions opts = {}) {
    if (k < 1 || s < 1) throw std::invalid_argument("series_sum: order and exponent must be >= 1");
    const mpfr_prec_t bits = prec.bits();
    const int wd = prec.working_digits();
    const BigFloat eps = BigFloat::pow10(-wd, bits);

    // Far part.
    int n_max = static_cast<int>(std::ceil(2.31 * wd)) + 4 * (s + k) + 20;
    BigFloat far(bits);
    bool converged = false;
    while (!converged) {
        if (n_max > opts.term_budget)
            throw PrecisionUnreachable("lz_series: " + std::to_string(prec.digits) +
                                       " digits not reached within term budget " +
                                       std::to_string(opts.term_budget));
        const STable table = build_s_table(k, n_max, bits);
        far = BigFloat(bits);
        for (int n = k; n <= n_max; ++n) {
            BigFloat poly(bits), power(1, bits), fact(1, bits);
            const BigFloat bn(n, bits);
            for (int j = 0; j < s; ++j) {
                if (j > 0) {
                    power *= bn;
                    fact *= BigFloat(j, bits);
                }
                poly += power / fact;
            }
            BigFloat term = table.at(k, n) * exp(-bn) * poly * inverse_power(n, s, bits);
            far += term;
            if (n >= 2 * (s + k) && term < eps / BigFloat(4, bits)) {
                converged = true;
                break;
            }
        }
        if (!converged) n_max *= 2;
    }

    // Near part.
    int order = static_cast<int>(std::ceil(wd / std::log10(2 * M_PI))) + 2 * k + 16;
    while (true) {
        if (order > opts.term_budget)
            throw PrecisionUnreachable("lz_series: near-part order exceeds term budget " +
                                       std::to_string(opts.term_budget));
        BigFloat block(bits);
        BigFloat near = detail::near_part(k, s, order, bits, &block);
        if (block < eps) return far + near;
        order *= 2;
    }
}

/// Lz(a,b) = (-1)^{a+b-1}/b! * sum_n S_n^{(b)}/n^a, taken literally (no use
/// of the a <-> b symmetry).
inline BigFloat lz_series(int a, int b, Precision prec, SeriesOptions opts = {}) {
    if (a < 1 || b < 1) throw std::invalid_argument("lz_series: a and b must be >= 1");
    BigFloat v = series_sum(b, a, prec, opts) / BigFloat(Rational(factorial(b)), prec.bits());
    return ((a + b - 1) % 2 == 0) ? v : -v;
}

// ---------------------------------------------------------------------------
// tanh-sinh quadrature on (0,1)

struct QuadratureNode {
    BigFloat t, one_minus_t, log_t, log_one_minus_t;
};

struct QuadratureOptions {
    int max_level = 12;
    int min_level = 3;
};

/// int_0^1 f(t) dt with t = 1/(1 + exp(-pi sinh u)); t, 1-t and their logs are
/// formed directly so nothing cancels near either endpoint.
template <typename F>
BigFloat tanh_sinh(F&& f, Precision prec, QuadratureOptions opts = {}) {
    const mpfr_prec_t bits = prec.bits();
    const BigFloat half_pi = BigFloat::pi(bits) / BigFloat(2, bits);
    const BigFloat pi = BigFloat::pi(bits);
    const BigFloat tiny = BigFloat::pow10(-(prec.working_digits() + 5), bits);
    const BigFloat tol = BigFloat::pow10(-prec.digits, bits);
    const BigFloat one(1, bits);

    auto sample = [&](const BigFloat& u) -> BigFloat {
        const BigFloat v = half_pi * sinh(u);
        const bool positive = v.sign() >= 0;
        const BigFloat e = exp(positive ? BigFloat(-2, bits) * v : BigFloat(2, bits) * v);  // exp(-2|v|)
        const BigFloat l1p = log1p(e);
        const BigFloat inv = one / (one + e);
        QuadratureNode node{positive ? inv : e * inv, positive ? e * inv : inv,
                            positive ? -l1p : BigFloat(2, bits) * v - l1p,
                            positive ? BigFloat(-2, bits) * v - l1p : -l1p};
        const BigFloat jac = pi * cosh(u) * node.t * node.one_minus_t;
        return f(node) * jac;
    };

    // Sums f over u = j*h for the given j stride, walking outward until terms vanish.
    auto sweep = [&](const BigFloat& h, int start, int step) {
        BigFloat acc(bits);
        for (int dir : {1, -1}) {
            int small_run = 0;
            for (int j = start; j < 200000; j += step) {
                if (j == 0 && dir == -1) continue;
                const BigFloat u = BigFloat(dir * j, bits) * h;
                if (abs(u) > BigFloat(9, bits)) break;
                BigFloat term = sample(u);
                acc += term;
                small_run = abs(term) < tiny ? small_run + 1 : 0;
                if (small_run >= 2) break;
            }
        }
        return acc;
    };

    BigFloat h(1, bits);
    BigFloat estimate = h * sweep(h, 0, 1);
    for (int level = 1; level <= opts.max_level; ++level) {
        h /= BigFloat(2, bits);
        BigFloat next = estimate / BigFloat(2, bits) + h * sweep(h, 1, 2);
        const bool agree = abs(next - estimate) < tol;
        estimate = std::move(next);
        if (agree && level >= opts.min_level) return estimate;
    }
    throw QuadratureFailure("tanh-sinh: no convergence to " + std::to_string(prec.digits) + " digits by level " +
                            std::to_string(opts.max_level));
}

/// Unnormalized lz(a,b) = int_0^1 log^a(t) log^b(1-t) dt, a, b >= 0.
inline BigFloat lz_raw_quadrature(int a, int b, Precision prec, QuadratureOptions opts = {}) {
    if (a < 0 || b < 0) throw std::invalid_argument("lz_raw_quadrature: a and b must be >= 0");
    return tanh_sinh([&](const QuadratureNode& x) { return pow(x.log_t, a) * pow(x.log_one_minus_t, b); }, prec,
                     opts);
}

inline BigFloat lz_quadrature(int a, int b, Precision prec, QuadratureOptions opts = {}) {
    if (a < 1 || b < 1) throw std::invalid_argument("lz_quadrature: a and b must be >= 1");
    const mpfr_prec_t bits = prec.bits();
    BigFloat integral = tanh_sinh(
        [&](const QuadratureNode& x) { return pow(x.log_t, a - 1) * pow(x.log_one_minus_t, b) / x.t; }, prec, opts);
    return integral / BigFloat(Rational(BigInt(factorial(a - 1) * factorial(b))), bits);
}

// ---------------------------------------------------------------------------
// Evaluation of symbolic combinations

/// Memoized zeta(s) at one precision.
class ZetaCache {
public:
    explicit ZetaCache(Precision prec) : prec_(prec) {}

    const BigFloat& operator()(int s) {
        std::lock_guard lock(mutex_);
        auto it = values_.find(s);
        if (it == values_.end()) it = values_.emplace(s, zeta_value(s, prec_)).first;
        return it->second;
    }

    Precision precision() const { return prec_; }

private:
    Precision prec_;
    std::mutex mutex_;
    std::map<int, BigFloat> values_;
};

inline BigFloat evaluate(const PiReducedCombination& c, ZetaCache& zetas) {
    const mpfr_prec_t bits = zetas.precision().bits();
    const BigFloat pi = BigFloat::pi(bits);
    BigFloat total(bits);
    for (const auto& [m, sc] : c.display_terms()) {
        BigFloat term(sc.coeff(), bits);
        if (sc.pi_exponent() > 0) term *= pow(pi, sc.pi_exponent());
        for (const auto& [n, k] : m.factors()) term *= pow(zetas(n), k);
        total += term;
    }
    return total;
}

inline BigFloat evaluate(const PiReducedCombination& c, Precision prec) {
    ZetaCache zetas(prec);
    return evaluate(c, zetas);
}

inline BigFloat evaluate(const ZetaCombination& c, Precision prec) {
    return evaluate(reduce_even(c), prec);
}

// ---------------------------------------------------------------------------
// Verification of expansions

enum class VerifyMethod { series, quadrature, both };

struct VerificationReport {
    int a = 0;
    int b = 0;
    int digits = 0;
    VerifyMethod method = VerifyMethod::both;
    std::string expansion;  // reduced symbolic form, text
    std::string symbolic_value;
    std::optional<std::string> series_value;
    std::optional<std::string> quadrature_value;
    double max_deviation_digits = 0;  // -log10 of the largest |difference|
    int threshold_digits = 0;         // pass requires deviation < 10^-threshold
    bool passed = false;
    std::string message;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Compares reduce_even(expand_lz(a,b)) against the requested numeric routes.
/// Deviation above 10^-(digits-5) or an unreachable precision is reported as a
/// failed verification, not thrown.
inline VerificationReport verify_expansion(int a, int b, Precision prec, VerifyMethod method = VerifyMethod::both,
                                           ZetaCache* shared_zetas = nullptr) {
    VerificationReport r;
    r.a = a;
    r.b = b;
    r.digits = prec.digits;
    r.method = method;
    r.threshold_digits = prec.digits - 5;
    const PiReducedCombination reduced = reduced_lz(a, b);
    r.expansion = to_text(reduced);
    ZetaCache local(prec);
    ZetaCache& zetas = shared_zetas ? *shared_zetas : local;
    const BigFloat symbolic = evaluate(reduced, zetas);
    const int shown = prec.digits;
    r.symbolic_value = symbolic.str(shown);

    const mpfr_prec_t bits = prec.bits();
    BigFloat worst(bits);
    try {
        if (method != VerifyMethod::quadrature) {
            BigFloat v = lz_series(a, b, prec);
            r.series_value = v.str(shown);
            BigFloat d = abs(v - symbolic);
            if (d > worst) worst = d;
        }
        if (method != VerifyMethod::series) {
            BigFloat v = lz_quadrature(a, b, prec);
            r.quadrature_value = v.str(shown);
            BigFloat d = abs(v - symbolic);
            if (d > worst) worst = d;
        }
    } catch (const PrecisionUnreachable& e) {
        r.passed = false;
        r.message = e.what();
        return r;
    } catch (const QuadratureFailure& e) {
        r.passed = false;
        r.message = e.what();
        return r;
    }
    r.max_deviation_digits = agreement_digits(worst);
    r.passed = worst < BigFloat::pow10(-r.threshold_digits, bits);
    r.message = r.passed ? "ok" : "deviation exceeds 1e-" + std::to_string(r.threshold_digits);
    return r;
}

}  // namespace lzeta

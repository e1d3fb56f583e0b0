// Independent reference computations used only by the tests. None of these
// call into the library's algorithms; they share only its value types.
#pragma once

#include <lzeta/lzeta.hpp>

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using lzeta::BigInt;
using lzeta::Rational;

/// p(n) for n = 0..max by Euler's pentagonal-number recurrence.
inline std::vector<BigInt> partition_numbers(int max) {
    std::vector<BigInt> p(max + 1);
    p[0] = 1;
    for (int n = 1; n <= max; ++n) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[n - g1];
            if (g2 <= n) acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return p;
}

/// All partitions of n as sorted-descending vectors, by deduplicating every
/// composition (bitmask over the n-1 gaps). Usable for n <= 20.
inline std::set<std::vector<int>> partitions_by_compositions(int n) {
    std::set<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1UL << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        std::sort(parts.rbegin(), parts.rend());
        out.insert(parts);
    }
    return out;
}

/// Dense bivariate integer polynomial, coefficient [i][j] of x^i y^j.
using Poly2 = std::vector<std::vector<BigInt>>;

inline Poly2 poly_mul(const Poly2& a, const Poly2& b) {
    Poly2 out(a.size() + b.size() - 1, std::vector<BigInt>(a[0].size() + b[0].size() - 1));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b[0].size(); ++l) out[i + k][j + l] += a[i][j] * b[k][l];
        }
    return out;
}

/// (x+y)^n - x^n - y^n, expanded by repeated multiplication.
inline Poly2 slot_poly(int n) {
    Poly2 xy{{0, 1}, {1, 0}};  // y + x
    Poly2 p{{1}};
    for (int i = 0; i < n; ++i) p = poly_mul(p, xy);
    p[n][0] -= 1;
    p[0][n] -= 1;
    return p;
}

/// Coefficient of x^(N-b) y^b in prod ((x+y)^n - x^n - y^n)^k.
inline BigInt big_c_bruteforce(const lzeta::PartitionElement& x, int b) {
    Poly2 p{{1}};
    for (const auto& [n, k] : x.support())
        for (int i = 0; i < k; ++i) p = poly_mul(p, slot_poly(n));
    const int n = x.weight();
    if (b < 0 || b > n) return 0;
    return p[n - b][b];
}

/// Polynomial in formal symbols z_k with rational coefficients.
using ZetaPoly = std::map<lzeta::ZetaMonomial, Rational>;

inline void add_to(ZetaPoly& a, const ZetaPoly& b, const Rational& scale = Rational(1)) {
    for (const auto& [m, q] : b) {
        a[m] += q * scale;
        if (a[m].is_zero()) a.erase(m);
    }
}

inline ZetaPoly zmul(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly out;
    for (const auto& [m1, q1] : a)
        for (const auto& [m2, q2] : b) add_to(out, ZetaPoly{{m1 * m2, q1 * q2}});
    return out;
}

/// Bivariate series with ZetaPoly coefficients, keyed by (i, j), truncated at
/// total degree `deg`.
using Series2 = std::map<std::pair<int, int>, ZetaPoly>;

inline Series2 series_mul(const Series2& a, const Series2& b, int deg) {
    Series2 out;
    for (const auto& [ij, p] : a)
        for (const auto& [kl, q] : b) {
            if (ij.first + ij.second + kl.first + kl.second > deg) continue;
            add_to(out[{ij.first + kl.first, ij.second + kl.second}], zmul(p, q));
        }
    return out;
}

/// Every Lz(a,b) with a + b == n from the generating identity
///   1 + sum Lz(a,b) x^a y^b = exp( sum_{k>=2} (-1)^k zeta(k)/k (x^k + y^k - (x+y)^k) ),
/// expanded as a formal power series in x, y.
inline std::map<std::pair<int, int>, lzeta::ZetaCombination> lz_by_generating_function(int n) {
    Series2 s;
    for (int k = 2; k <= n; ++k) {
        const Rational c = Rational((k % 2 == 0) ? 1 : -1) / Rational(k);
        const auto z = lzeta::ZetaMonomial::zeta(k);
        for (int i = 1; i < k; ++i)
            add_to(s[{i, k - i}], ZetaPoly{{z, -c * Rational(lzeta::binomial(k, i))}});
    }
    // exp(S) = sum_m S^m / m!, S has total degree >= 2.
    Series2 total;
    Series2 power{{{0, 0}, ZetaPoly{{lzeta::ZetaMonomial{}, Rational(1)}}}};
    BigInt fact = 1;
    for (int m = 1; 2 * m <= n; ++m) {
        power = series_mul(power, s, n);
        fact *= m;
        for (const auto& [ij, p] : power)
            if (ij.first + ij.second == n) add_to(total[ij], p, Rational(1) / Rational(fact));
    }
    std::map<std::pair<int, int>, lzeta::ZetaCombination> out;
    for (int b = 1; b < n; ++b) {
        lzeta::ZetaCombination c;
        for (const auto& [m, q] : total[{n - b, b}]) c.add(m, q);
        out.emplace(std::pair{n - b, b}, c);
    }
    return out;
}

/// S_n^{(k)} as an explicit sum over compositions of n into k positive parts.
inline Rational s_coefficient_bruteforce(int k, int n) {
    Rational total;
    std::vector<int> parts;
    std::function<void(int, int, Rational)> rec = [&](int left, int slots, Rational prod) {
        if (slots == 0) {
            if (left == 0) total += prod;
            return;
        }
        for (int m = 1; m <= left - (slots - 1); ++m) rec(left - m, slots - 1, prod / Rational(m));
    };
    rec(n, k, Rational(1));
    return total;
}

/// Bernoulli numbers B_0..B_max by the Akiyama-Tanigawa algorithm (which
/// yields B_1 = +1/2; callers compare only indices != 1).
inline std::vector<Rational> bernoulli_akiyama_tanigawa(int max) {
    std::vector<Rational> out;
    std::vector<Rational> a(max + 1);
    for (int m = 0; m <= max; ++m) {
        a[m] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    return out;
}

/// zeta(s) from MPFR's own implementation, as a decimal string.
inline std::string mpfr_zeta_string(unsigned long s, int digits) {
    mpfr_t z;
    mpfr_init2(z, static_cast<mpfr_prec_t>(digits * 3.33) + 64);
    mpfr_zeta_ui(z, s, MPFR_RNDN);
    char buf[512];
    mpfr_snprintf(buf, sizeof buf, "%.*Re", digits + 10, z);
    mpfr_clear(z);
    return buf;
}

}  // namespace oracle

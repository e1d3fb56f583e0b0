/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers and the rational factor of even zeta values.
 *
 * Convention: B_1 = -1/2. Every B_m is produced by the recurrence
 *
 *     sum_{k=0}^{m} C(m+1, k) B_k = 0,   B_0 = 1,
 *
 * which fixes that sign. zeta(2n) = q_n * pi^{2n} with
 * q_n = (-1)^{n+1} B_{2n} 2^{2n} / (2 (2n)!).
 */
#pragma once

#include <lzeta/rational.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lzeta {

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

namespace detail {

// Process-wide memo of B_0..B_m; grown under a lock, never shrunk.
struct BernoulliTable {
    std::mutex mutex;
    std::vector<Rational> values{Rational(1)};
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

}  // namespace detail

inline Rational bernoulli_number(unsigned m) {
    auto& table = detail::bernoulli_table();
    std::lock_guard lock(table.mutex);
    auto& b = table.values;
    while (b.size() <= m) {
        const unsigned long next = b.size();
        Rational acc(0);
        for (unsigned long k = 0; k < next; ++k) {
            if (k > 1 && (k & 1U)) continue;  // odd B_k vanish for k > 1
            acc += Rational(binomial(next + 1, k)) * b[k];
        }
        b.push_back(-acc / Rational(BigInt(next + 1)));
    }
    return b[m];
}

/// Rational q with zeta(2n) = q * pi^(2n).
inline Rational zeta_even_pi_coeff(unsigned n) {
    if (n == 0) throw std::domain_error("zeta_even_pi_coeff: n must be >= 1");
    const unsigned m = 2 * n;
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, m);
    Rational q = bernoulli_number(m) * Rational(two_pow) / Rational(BigInt(2 * factorial(m)));
    return (n % 2 == 1) ? q : -q;
}

}  // namespace lzeta

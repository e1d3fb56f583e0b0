/**
 * @file expansion.hpp
 * @brief Lz(a,b) as an exact rational combination of zeta monomials.
 *
 *     Lz(N-b, b) = sum_{X in P_2(N)} c_b(X) prod_{(n,k) in Supp X} zeta(n)^k
 *
 * Only X with ||X|| <= b and ||X|| <= N - b contribute. reduce_even() then
 * replaces every zeta(2n) by q_n pi^{2n}.
 */
#pragma once

#include <lzeta/bernoulli.hpp>
#include <lzeta/coefficients.hpp>
#include <lzeta/monomial.hpp>
#include <lzeta/partitions.hpp>

#include <future>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lzeta {

namespace detail {

inline ZetaCombination expand_over(const std::vector<PartitionElement>& p2, int n, int b) {
    ZetaCombination out;
    for (const auto& x : p2) {
        const int nx = x.norm();
        if (nx > b || nx > n - b) continue;
        out.add(ZetaMonomial::from_partition(x), little_c(x, b));
    }
    return out;
}

inline std::vector<PartitionElement> parts_at_least_two(int n) {
    return enumerate_partitions(n, PartitionFilter{2, std::nullopt, Parity::any});
}

}  // namespace detail

/// Coefficient of x^a y^b: Lz(a,b) expanded over P_2(a+b).
inline ZetaCombination expand_lz(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("expand_lz: a and b must be >= 1");
    const int n = a + b;
    return detail::expand_over(detail::parts_at_least_two(n), n, b);
}

/// All Lz(a,b) with a + b = n and a >= b >= 1, sharing one partition list.
/// b values run concurrently when `parallel` is set; output is identical.
inline std::map<std::pair<int, int>, ZetaCombination> expand_weight(int n, bool parallel = false) {
    if (n < 2) throw std::invalid_argument("expand_weight: N must be >= 2");
    const auto p2 = detail::parts_at_least_two(n);
    std::map<std::pair<int, int>, ZetaCombination> out;
    if (!parallel) {
        for (int b = 1; b <= n / 2; ++b) out.emplace(std::pair{n - b, b}, detail::expand_over(p2, n, b));
        return out;
    }
    std::vector<std::future<ZetaCombination>> jobs;
    for (int b = 1; b <= n / 2; ++b)
        jobs.push_back(std::async(std::launch::async, [&p2, n, b] { return detail::expand_over(p2, n, b); }));
    for (int b = 1; b <= n / 2; ++b) out.emplace(std::pair{n - b, b}, jobs[b - 1].get());
    return out;
}

/// Folds even zeta factors into powers of pi and merges like terms.
inline PiReducedCombination reduce_even(const ZetaCombination& c) {
    if (c.empty()) return PiReducedCombination(0);
    PiReducedCombination out(c.terms().begin()->first.weight());
    for (const auto& [m, q] : c.terms()) {
        Rational coeff = q;
        for (const auto& [n, k] : m.factors())
            if (n % 2 == 0) coeff *= zeta_even_pi_coeff(static_cast<unsigned>(n / 2)).pow(static_cast<unsigned>(k));
        out.add_coeff(m.odd_part(), coeff);
    }
    return out;
}

/// reduce_even(expand_lz(a,b)) with the weight fixed to a+b even when the
/// combination is empty.
inline PiReducedCombination reduced_lz(int a, int b) {
    PiReducedCombination out(a + b);
    out += reduce_even(expand_lz(a, b));
    return out;
}

}  // namespace lzeta

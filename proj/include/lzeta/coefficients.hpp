/**
 * @file coefficients.hpp
 * @brief Coefficients of x^{N-b} y^b in prod P_n(x,y)^k, P_n = (x+y)^n - x^n - y^n,
 *        and the rational weights c_b(X) attached to each partition X.
 *
 * For X with support {(n_j, k_j)} there are ||X|| slots, k_j of them for part
 * n_j. A composition assigns each slot a value l in [1, n_j - 1] (the range
 * of y-degrees present in P_{n_j}); the coefficient is
 *
 *     C_b(X) = sum over assignments with sum l = b of prod binom(n_j, l),
 *
 * and c_b(X) = C_b(X) * C~(X) with C~(X) = (-1)^{N+||X||} prod 1/(k! n^k).
 */
#pragma once

#include <lzeta/bernoulli.hpp>
#include <lzeta/partitions.hpp>
#include <lzeta/rational.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lzeta {

struct CompositionEntry {
    int part = 0;   // n_j
    int slot = 0;   // i, 1-based within part n_j
    int value = 0;  // l_{ji}
    friend bool operator==(const CompositionEntry&, const CompositionEntry&) = default;
};

struct CompositionAssignment {
    std::vector<CompositionEntry> entries;  // ascending part, then slot
    int total = 0;
    friend bool operator==(const CompositionAssignment&, const CompositionAssignment&) = default;
};

struct CoefficientRecord {
    PartitionElement partition;
    int b = 0;
    BigInt big_c;
    Rational c_tilde;
    Rational little_c;
};

namespace detail {

inline void require_min_part_two(const PartitionElement& x, const char* where) {
    if (x.support().empty() || x.min_part() < 2)
        throw std::invalid_argument(std::string(where) + ": partition must be nonempty with parts >= 2");
}

// Flattened slot list: part size per slot, ascending part order.
inline std::vector<int> slot_parts(const PartitionElement& x) {
    std::vector<int> slots;
    for (const auto& [n, k] : x.support()) slots.insert(slots.end(), k, n);
    return slots;
}

inline bool b_in_range(const PartitionElement& x, int b) {
    const int nx = x.norm();
    return b >= nx && b <= x.weight() - nx;
}

}  // namespace detail

inline std::vector<CompositionAssignment> enumerate_compositions(const PartitionElement& x, int b) {
    detail::require_min_part_two(x, "enumerate_compositions");
    std::vector<CompositionAssignment> out;
    if (!detail::b_in_range(x, b)) return out;
    const auto slots = detail::slot_parts(x);
    // Suffix bounds on attainable sums for pruning.
    std::vector<int> max_suffix(slots.size() + 1, 0);
    for (std::size_t i = slots.size(); i-- > 0;) max_suffix[i] = max_suffix[i + 1] + slots[i] - 1;

    std::vector<int> values(slots.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == slots.size()) {
            if (remaining != 0) return;
            CompositionAssignment a;
            a.total = b;
            int slot_index = 0;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                slot_index = (s > 0 && slots[s] == slots[s - 1]) ? slot_index + 1 : 1;
                a.entries.push_back({slots[s], slot_index, values[s]});
            }
            out.push_back(std::move(a));
            return;
        }
        const int left_after = static_cast<int>(slots.size() - i - 1);
        for (int l = 1; l <= slots[i] - 1; ++l) {
            const int rest = remaining - l;
            if (rest < left_after || rest > max_suffix[i + 1]) continue;
            values[i] = l;
            rec(i + 1, rest);
        }
    };
    rec(0, b);
    return out;
}

/// C_b(X), summed by memoized recursion over (slot, remaining total).
inline BigInt big_c(const PartitionElement& x, int b) {
    detail::require_min_part_two(x, "big_c");
    if (!detail::b_in_range(x, b)) return 0;
    const auto slots = detail::slot_parts(x);
    const std::size_t n_slots = slots.size();
    std::vector<std::vector<std::optional<BigInt>>> memo(n_slots + 1, std::vector<std::optional<BigInt>>(b + 1));

    std::function<BigInt(std::size_t, int)> rec = [&](std::size_t i, int remaining) -> BigInt {
        if (i == n_slots) return remaining == 0 ? BigInt(1) : BigInt(0);
        auto& cell = memo[i][remaining];
        if (cell) return *cell;
        BigInt acc = 0;
        const int left_after = static_cast<int>(n_slots - i - 1);
        for (int l = 1; l <= slots[i] - 1 && remaining - l >= left_after; ++l)
            acc += binomial(slots[i], l) * rec(i + 1, remaining - l);
        cell = acc;
        return acc;
    };
    return rec(0, b);
}

/// Number of assignments in the composition set, without materializing them.
inline BigInt count_compositions(const PartitionElement& x, int b) {
    detail::require_min_part_two(x, "count_compositions");
    if (!detail::b_in_range(x, b)) return 0;
    std::vector<BigInt> ways(b + 1, 0);
    ways[0] = 1;
    for (int n : detail::slot_parts(x)) {
        std::vector<BigInt> next(b + 1, 0);
        for (int s = 0; s <= b; ++s) {
            if (ways[s] == 0) continue;
            for (int l = 1; l <= n - 1 && s + l <= b; ++l) next[s + l] += ways[s];
        }
        ways = std::move(next);
    }
    return ways[b];
}

inline Rational c_tilde(const PartitionElement& x) {
    detail::require_min_part_two(x, "c_tilde");
    BigInt den = 1;
    for (const auto& [n, k] : x.support()) {
        BigInt nk;
        mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        den *= factorial(k) * nk;
    }
    const int sign = ((x.weight() + x.norm()) % 2 == 0) ? 1 : -1;
    return Rational(BigInt(sign), den);
}

inline Rational little_c(const PartitionElement& x, int b) {
    BigInt c = big_c(x, b);
    if (c == 0) return Rational(0);
    return Rational(c) * c_tilde(x);
}

inline CoefficientRecord coefficient_record(const PartitionElement& x, int b) {
    CoefficientRecord r{x, b, big_c(x, b), c_tilde(x), Rational(0)};
    r.little_c = Rational(r.big_c) * r.c_tilde;
    return r;
}

}  // namespace lzeta

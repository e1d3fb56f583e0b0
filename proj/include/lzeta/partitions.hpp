/**
 * @file partitions.hpp
 * @brief Restricted integer partitions: parts >= s, exactly t parts, and
 *        odd-only / even-only part sizes.
 *
 * A partition is stored sparsely as part-size -> multiplicity. Enumeration
 * order is lexicographically descending on the non-increasing part list,
 * e.g. for 6 with parts >= 2: [6], [4,2], [3,3], [2,2,2].
 */
#pragma once

#include <lzeta/rational.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lzeta {

enum class Parity { any, odd, even };

struct PartitionFilter {
    int min_part = 1;
    std::optional<int> exact_parts;
    Parity parity = Parity::any;

    bool allows_part(int n) const {
        if (n < min_part) return false;
        if (parity == Parity::odd) return n % 2 == 1;
        if (parity == Parity::even) return n % 2 == 0;
        return true;
    }
};

class PartitionElement {
public:
    PartitionElement() = default;

    explicit PartitionElement(std::map<int, int> parts) : parts_(std::move(parts)) {
        for (const auto& [n, k] : parts_) {
            if (n < 1 || k < 1) throw std::invalid_argument("PartitionElement: parts and multiplicities must be >= 1");
            weight_ += n * k;
        }
    }

    static PartitionElement from_parts(const std::vector<int>& parts) {
        std::map<int, int> m;
        for (int p : parts) ++m[p];
        return PartitionElement(std::move(m));
    }

    int weight() const { return weight_; }
    /// Support: (part size, multiplicity) pairs in ascending part order.
    const std::map<int, int>& support() const { return parts_; }
    int norm() const {
        int s = 0;
        for (const auto& [n, k] : parts_) s += k;
        return s;
    }
    int min_part() const { return parts_.empty() ? 0 : parts_.begin()->first; }
    int multiplicity(int n) const {
        auto it = parts_.find(n);
        return it == parts_.end() ? 0 : it->second;
    }

    std::vector<int> descending_parts() const {
        std::vector<int> out;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) out.insert(out.end(), it->second, it->first);
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int p : descending_parts()) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const PartitionElement&, const PartitionElement&) = default;
    friend auto operator<=>(const PartitionElement& a, const PartitionElement& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    int weight_ = 0;
    std::map<int, int> parts_;
};

inline int norm(const PartitionElement& x) { return x.norm(); }

inline std::vector<PartitionElement> enumerate_partitions(int n, const PartitionFilter& filter) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions: N must be >= 1");
    if (filter.min_part < 1) throw std::invalid_argument("enumerate_partitions: min_part must be >= 1");
    std::vector<PartitionElement> out;
    std::vector<int> current;
    const int min_part = filter.min_part;

    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        const int used = static_cast<int>(current.size());
        if (remaining == 0) {
            if (!filter.exact_parts || *filter.exact_parts == used) out.push_back(PartitionElement::from_parts(current));
            return;
        }
        if (filter.exact_parts) {
            const int left = *filter.exact_parts - used;
            if (left <= 0 || remaining < left * min_part || remaining > left * max_part) return;
        }
        for (int p = std::min(remaining, max_part); p >= min_part; --p) {
            if (!filter.allows_part(p)) continue;
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Same count as enumerate_partitions(n, filter).size(), by knapsack DP over
/// (weight, number of parts).
inline BigInt count_partitions(int n, const PartitionFilter& filter) {
    if (n < 1) throw std::invalid_argument("count_partitions: N must be >= 1");
    if (filter.min_part < 1) throw std::invalid_argument("count_partitions: min_part must be >= 1");
    const int max_t = filter.exact_parts ? *filter.exact_parts : n;
    if (max_t < 0) return 0;
    // dp[w][t]: partitions of w into exactly t allowed parts.
    std::vector<std::vector<BigInt>> dp(n + 1, std::vector<BigInt>(max_t + 1, 0));
    dp[0][0] = 1;
    for (int p = 1; p <= n; ++p) {
        if (!filter.allows_part(p)) continue;
        for (int w = p; w <= n; ++w)
            for (int t = 1; t <= max_t; ++t) dp[w][t] += dp[w - p][t - 1];
    }
    if (filter.exact_parts) return dp[n][max_t];
    BigInt total = 0;
    for (int t = 0; t <= max_t; ++t) total += dp[n][t];
    return total;
}

}  // namespace lzeta

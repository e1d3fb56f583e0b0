/**
 * @file monomial.hpp
 * @brief Zeta monomials prod zeta(n)^k and exact rational combinations of them.
 *
 * Textual monomial grammar:  z<n>[^<k>](*z<n>[^<k>])*   e.g. "z3^2*z5".
 * The unit monomial prints as "1".
 */
#pragma once

#include <lzeta/partitions.hpp>
#include <lzeta/rational.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzeta {

class ZetaMonomial {
public:
    ZetaMonomial() = default;

    explicit ZetaMonomial(std::map<int, int> factors) : factors_(std::move(factors)) {
        for (const auto& [n, k] : factors_)
            if (n < 2 || k < 1) throw std::invalid_argument("ZetaMonomial: need argument >= 2 and exponent >= 1");
    }

    /// The map X -> prod_{(n,k) in Supp X} zeta(n)^k.
    static ZetaMonomial from_partition(const PartitionElement& x) { return ZetaMonomial(x.support()); }

    static ZetaMonomial zeta(int n, int k = 1) { return ZetaMonomial(std::map<int, int>{{n, k}}); }

    static ZetaMonomial parse(std::string_view text);

    const std::map<int, int>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    int weight() const {
        int w = 0;
        for (const auto& [n, k] : factors_) w += n * k;
        return w;
    }

    bool is_odd_only() const {
        return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.first % 2 == 1; });
    }

    ZetaMonomial odd_part() const { return filtered(1); }
    ZetaMonomial even_part() const { return filtered(0); }
    int odd_weight() const { return odd_part().weight(); }

    friend ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
        auto f = a.factors_;
        for (const auto& [n, k] : b.factors_) f[n] += k;
        return ZetaMonomial(std::move(f));
    }

    std::string str() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& [n, k] : factors_) {
            if (!s.empty()) s += "*";
            s += "z" + std::to_string(n);
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    }

    std::string latex() const {
        std::string s;
        for (const auto& [n, k] : factors_) {
            s += "\\zeta(" + std::to_string(n) + ")";
            if (k > 1) s += "^{" + std::to_string(k) + "}";
        }
        return s;
    }

    friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;
    friend auto operator<=>(const ZetaMonomial& a, const ZetaMonomial& b) { return a.factors_ <=> b.factors_; }

private:
    ZetaMonomial filtered(int parity) const {
        std::map<int, int> f;
        for (const auto& [n, k] : factors_)
            if (n % 2 == parity) f.emplace(n, k);
        return ZetaMonomial(std::move(f));
    }

    std::map<int, int> factors_;
};

inline ZetaMonomial ZetaMonomial::parse(std::string_view text) {
    auto fail = [&]() -> ZetaMonomial {
        throw std::invalid_argument("malformed monomial '" + std::string(text) + "' (expected e.g. z3^2*z5)");
    };
    if (text == "1") return {};
    std::map<int, int> f;
    std::size_t i = 0;
    auto read_int = [&](int& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || i - start > 6) return false;
        out = std::stoi(std::string(text.substr(start, i - start)));
        return true;
    };
    while (true) {
        if (i >= text.size() || text[i] != 'z') return fail();
        ++i;
        int n = 0, k = 1;
        if (!read_int(n) || n < 2) return fail();
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (!read_int(k) || k < 1) return fail();
        }
        f[n] += k;
        if (i == text.size()) break;
        if (text[i] != '*') return fail();
        ++i;
    }
    return ZetaMonomial(std::move(f));
}

/// Display order: larger odd-part weight first, then ascending factor list.
struct DisplayOrder {
    bool operator()(const ZetaMonomial& a, const ZetaMonomial& b) const {
        const int wa = a.odd_weight(), wb = b.odd_weight();
        if (wa != wb) return wa > wb;
        return std::lexicographical_compare(a.factors().begin(), a.factors().end(), b.factors().begin(),
                                            b.factors().end());
    }
};

/// Finite sum of rational multiples of zeta monomials, all of one weight.
class ZetaCombination {
public:
    ZetaCombination() = default;

    void add(const ZetaMonomial& m, const Rational& c) {
        if (c.is_zero()) return;
        if (!terms_.empty() && terms_.begin()->first.weight() != m.weight())
            throw std::logic_error("ZetaCombination: mixed weights");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<ZetaMonomial, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const ZetaMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::vector<std::pair<ZetaMonomial, Rational>> display_terms() const {
        std::vector<std::pair<ZetaMonomial, Rational>> v(terms_.begin(), terms_.end());
        std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return DisplayOrder{}(x.first, y.first); });
        return v;
    }

    friend bool operator==(const ZetaCombination&, const ZetaCombination&) = default;

private:
    std::map<ZetaMonomial, Rational> terms_;
};

/// Combination over odd-only monomials with coefficients q * pi^e, every term
/// of total weight `weight` (e + monomial weight == weight).
class PiReducedCombination {
public:
    PiReducedCombination() = default;
    explicit PiReducedCombination(int weight) : weight_(weight) {}

    int weight() const { return weight_; }

    void add(const ZetaMonomial& m, const PiPowerScalar& s) {
        if (s.is_zero()) return;
        if (s.pi_exponent() + m.weight() != weight_)
            throw std::logic_error("PiReducedCombination: term weight " + std::to_string(s.pi_exponent() + m.weight()) +
                                   " differs from " + std::to_string(weight_));
        add_coeff(m, s.coeff());
    }

    /// Adds q * pi^(weight - wt(m)) * m.
    void add_coeff(const ZetaMonomial& m, const Rational& q) {
        if (q.is_zero()) return;
        if (!m.is_odd_only()) throw std::invalid_argument("PiReducedCombination: monomial has even arguments");
        if (m.weight() > weight_) throw std::logic_error("PiReducedCombination: monomial heavier than weight");
        auto [it, inserted] = terms_.try_emplace(m, q);
        if (!inserted) {
            it->second += q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PiPowerScalar scalar(const ZetaMonomial& m) const {
        auto it = terms_.find(m);
        if (it == terms_.end()) return {};
        return {it->second, weight_ - m.weight()};
    }
    Rational coefficient(const ZetaMonomial& m) const { return scalar(m).coeff(); }

    /// Monomial -> rational coefficient; the pi power is implied by the weight.
    const std::map<ZetaMonomial, Rational>& coefficients() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Multiplies every term by q * pi^e (raising the weight by e).
    PiReducedCombination scaled(const PiPowerScalar& s) const {
        PiReducedCombination out(weight_ + s.pi_exponent());
        if (s.is_zero()) return out;
        for (const auto& [m, q] : terms_) out.add_coeff(m, q * s.coeff());
        return out;
    }

    PiReducedCombination& operator+=(const PiReducedCombination& o) {
        if (o.weight_ != weight_ && !o.empty())
            throw std::logic_error("PiReducedCombination: adding combinations of different weight");
        for (const auto& [m, q] : o.terms_) add_coeff(m, q);
        return *this;
    }
    PiReducedCombination& operator-=(const PiReducedCombination& o) { return *this += o.scaled(PiPowerScalar(-1)); }

    std::vector<std::pair<ZetaMonomial, PiPowerScalar>> display_terms() const {
        std::vector<std::pair<ZetaMonomial, PiPowerScalar>> v;
        for (const auto& [m, q] : terms_) v.emplace_back(m, PiPowerScalar(q, weight_ - m.weight()));
        std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return DisplayOrder{}(x.first, y.first); });
        return v;
    }

    friend bool operator==(const PiReducedCombination& a, const PiReducedCombination& b) {
        if (a.empty() && b.empty()) return true;
        return a.weight_ == b.weight_ && a.terms_ == b.terms_;
    }

private:
    int weight_ = 0;
    std::map<ZetaMonomial, Rational> terms_;
};

}  // namespace lzeta

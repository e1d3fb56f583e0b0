/**
 * @file rational.hpp
 * @brief Exact rational numbers and rational multiples of powers of pi.
 *
 * Rational wraps GMP's mpq_class and keeps every value in lowest terms with a
 * positive denominator. PiPowerScalar represents coeff * pi^k, which is the
 * shape every even zeta value takes after reduction.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lzeta {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}

    Rational(const BigInt& v) : value_(v) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    static Rational from_mpq(const mpq_class& q) {
        Rational r;
        r.value_ = q;
        r.value_.canonicalize();
        return r;
    }

    // Accepts "p" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s, 10));
            return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
        }
    }

    const mpq_class& get() const { return value_; }
    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string str() const { return value_.get_str(10); }

    Rational abs() const { return from_mpq(::abs(value_)); }

    Rational pow(unsigned exponent) const {
        Rational result(1);
        Rational base = *this;
        while (exponent) {
            if (exponent & 1U) result *= base;
            base *= base;
            exponent >>= 1U;
        }
        return result;
    }

    Rational operator-() const { return from_mpq(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

// Least common multiple of denominators, used when clearing fractions.
inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// coeff * pi^pi_exponent. Zero is always stored with pi_exponent == 0.
class PiPowerScalar {
public:
    PiPowerScalar() = default;
    PiPowerScalar(Rational coeff, int pi_exponent = 0) : coeff_(std::move(coeff)), pi_exponent_(pi_exponent) {
        if (pi_exponent_ < 0) throw std::invalid_argument("PiPowerScalar: negative pi exponent");
        if (coeff_.is_zero()) pi_exponent_ = 0;
    }

    const Rational& coeff() const { return coeff_; }
    int pi_exponent() const { return pi_exponent_; }
    bool is_zero() const { return coeff_.is_zero(); }

    friend PiPowerScalar operator*(const PiPowerScalar& a, const PiPowerScalar& b) {
        return {a.coeff_ * b.coeff_, a.pi_exponent_ + b.pi_exponent_};
    }
    friend bool operator==(const PiPowerScalar&, const PiPowerScalar&) = default;

private:
    Rational coeff_{0};
    int pi_exponent_ = 0;
};

}  // namespace lzeta

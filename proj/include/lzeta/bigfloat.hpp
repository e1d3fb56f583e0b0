/**
 * @file bigfloat.hpp
 * @brief Thin RAII value type over an MPFR number.
 *
 * Every BigFloat carries its own binary precision. Binary operations produce a
 * result at the larger of the operand precisions, rounded to nearest.
 */
#pragma once

#include <lzeta/rational.hpp>

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace lzeta {

/// Decimal digits requested plus guard digits carried internally.
struct Precision {
    int digits = 30;
    int guard = 10;

    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(std::ceil((digits + guard) * 3.3219280948873623)) + 16;
    }
    int working_digits() const { return digits + guard; }
};

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long value, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
    BigFloat(const Rational& q, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_q(v_, q.get().get_mpq_t(), MPFR_RNDN); }
    BigFloat(const std::string& decimal, mpfr_prec_t bits) : BigFloat(bits) {
        mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat pi(mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat pow10(long exponent, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(std::labs(exponent)), MPFR_RNDN);
        if (exponent < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    /// Scientific notation with `digits` significant digits.
    std::string str(int digits) const {
        if (is_zero()) return "0";
        mpfr_exp_t exp = 0;
        char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
        std::string m(s);
        mpfr_free_str(s);
        std::string sign;
        if (m[0] == '-') {
            sign = "-";
            m.erase(0, 1);
        }
        return sign + m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(static_cast<long>(exp) - 1);
    }

    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { return apply(o, mpfr_add); }
    BigFloat& operator-=(const BigFloat& o) { return apply(o, mpfr_sub); }
    BigFloat& operator*=(const BigFloat& o) { return apply(o, mpfr_mul); }
    BigFloat& operator/=(const BigFloat& o) { return apply(o, mpfr_div); }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

private:
    template <typename Op>
    BigFloat& apply(const BigFloat& o, Op op) {
        const mpfr_prec_t p = std::max(precision(), o.precision());
        if (p != precision()) mpfr_prec_round(v_, p, MPFR_RNDN);
        op(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    mpfr_t v_;
};

inline BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat log(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat log1p(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat exp(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat sinh(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sinh(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat cosh(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cosh(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat pow(const BigFloat& x, long n) {
    BigFloat r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

/// n^(-s) for positive integers n, s.
inline BigFloat inverse_power(unsigned long n, unsigned long s, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_ui_pow_ui(r.raw(), n, s, MPFR_RNDN);
    mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

/// -log10|x|, i.e. the number of matching decimal digits when x is a difference.
inline double agreement_digits(const BigFloat& diff) {
    if (diff.is_zero()) return 1e9;
    BigFloat a = abs(diff);
    return -mpfr_get_d(log(a).raw(), MPFR_RNDN) / 2.302585092994046;
}

}  // namespace lzeta

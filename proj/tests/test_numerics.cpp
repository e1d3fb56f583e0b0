#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lzeta;

namespace {

constexpr Precision kP50{50, 10};

double digits_between(const BigFloat& x, const BigFloat& y) { return agreement_digits(x - y); }

}  // namespace

TEST(ZetaValue, MatchesMpfr) {
    for (int s = 2; s <= 30; ++s) {
        const BigFloat ref(oracle::mpfr_zeta_string(s, 60), kP50.bits());
        EXPECT_GT(digits_between(zeta_value(s, kP50), ref), 55) << "s=" << s;
    }
}

TEST(ZetaValue, KnownDigits) {
    const BigFloat apery("1.2020569031595942853997381615114499907649862923404988817922", kP50.bits());
    EXPECT_GT(digits_between(zeta_value(3, kP50), apery), 55);
    EXPECT_THROW(zeta_value(1, kP50), std::domain_error);
}

TEST(ZetaValue, EvenValuesFromBernoulli) {
    const BigFloat pi = BigFloat::pi(kP50.bits());
    for (unsigned n = 1; n <= 10; ++n) {
        const BigFloat closed = BigFloat(zeta_even_pi_coeff(n), kP50.bits()) * pow(pi, 2 * n);
        EXPECT_GT(digits_between(closed, zeta_value(2 * n, kP50)), 55) << "n=" << n;
    }
}

TEST(STable, ExactMatchesCompositions) {
    const auto t = build_s_table_exact(5, 12);
    for (int k = 1; k <= 5; ++k)
        for (int n = k; n <= 12; ++n) EXPECT_EQ(t[k][n], oracle::s_coefficient_bruteforce(k, n)) << k << "," << n;
    EXPECT_EQ(t[2][3], Rational(1));  // 1/1*1/2 + 1/2*1/1
}

TEST(STable, FloatingMatchesExact) {
    const auto exact = build_s_table_exact(6, 60);
    const auto t = build_s_table(6, 60, kP50.bits());
    for (int k = 1; k <= 6; ++k)
        for (int n = k; n <= 60; ++n)
            EXPECT_GT(digits_between(t.at(k, n), BigFloat(exact[k][n], kP50.bits())), 50) << k << "," << n;
    EXPECT_THROW(build_s_table(0, 5, 128), std::invalid_argument);
}

TEST(Series, MatchesSymbolicUpToWeightEight) {
    ZetaCache zetas(kP50);
    for (int n = 2; n <= 8; ++n)
        for (int b = 1; b < n; ++b) {
            const int a = n - b;
            const BigFloat sym = evaluate(reduced_lz(a, b), zetas);
            EXPECT_GT(digits_between(lz_series(a, b, kP50), sym), 45) << "Lz(" << a << "," << b << ")";
        }
}

TEST(Quadrature, MatchesSymbolicUpToWeightEight) {
    ZetaCache zetas(kP50);
    for (int n = 2; n <= 8; ++n)
        for (int b = 1; b < n; ++b) {
            const int a = n - b;
            const BigFloat sym = evaluate(reduced_lz(a, b), zetas);
            EXPECT_GT(digits_between(lz_quadrature(a, b, kP50), sym), 45) << "Lz(" << a << "," << b << ")";
        }
}

TEST(Series, EulerIdentity) {
    // Lz(1,2) is zeta(2,1) up to sign, which equals zeta(3).
    const BigFloat z3 = zeta_value(3, kP50);
    EXPECT_GT(digits_between(lz_series(1, 2, kP50), z3), 45);
    EXPECT_GT(digits_between(lz_series(2, 1, kP50), z3), 45);
}

TEST(Series, SymmetricInArguments) {
    for (auto [a, b] : {std::pair{1, 3}, {2, 3}, {1, 5}, {2, 4}, {3, 4}})
        EXPECT_GT(digits_between(lz_series(a, b, kP50), lz_series(b, a, kP50)), 45) << a << "," << b;
}

TEST(Series, TermBudgetExhaustion) {
    EXPECT_THROW(lz_series(3, 2, kP50, SeriesOptions{50}), PrecisionUnreachable);
    EXPECT_THROW(lz_series(0, 2, kP50), std::invalid_argument);
}

TEST(Quadrature, RawIntegrals) {
    const BigFloat one(1, kP50.bits());
    // int log^n t dt = (-1)^n n!
    for (int n = 0; n <= 5; ++n) {
        const BigFloat expect(Rational(BigInt(factorial(n) * (n % 2 ? -1 : 1))), kP50.bits());
        EXPECT_GT(digits_between(lz_raw_quadrature(n, 0, kP50), expect), 45) << n;
        EXPECT_GT(digits_between(lz_raw_quadrature(0, n, kP50), expect), 45) << n;
    }
    // int log t log(1-t) dt = 2 - zeta(2)
    const BigFloat v = BigFloat(2, kP50.bits()) - zeta_value(2, kP50);
    EXPECT_GT(digits_between(lz_raw_quadrature(1, 1, kP50), v), 45);
    EXPECT_GT(digits_between(lz_raw_quadrature(2, 3, kP50), lz_raw_quadrature(3, 2, kP50)), 45);
}

TEST(Quadrature, LevelCapReportsFailure) {
    EXPECT_THROW(lz_quadrature(3, 2, kP50, QuadratureOptions{1, 1}), QuadratureFailure);
}

TEST(Evaluate, ZetaCombinationAgreesWithReduced) {
    for (int n = 3; n <= 8; ++n)
        for (int b = 1; b < n; ++b)
            EXPECT_GT(digits_between(evaluate(expand_lz(n - b, b), kP50), evaluate(reduced_lz(n - b, b), kP50)), 50);
}

TEST(Verify, PassesAndReports) {
    const auto r = verify_expansion(3, 2, Precision{30, 10});
    EXPECT_TRUE(r.passed) << r.message;
    EXPECT_EQ(r.threshold_digits, 25);
    EXPECT_TRUE(r.series_value && r.quadrature_value);
    EXPECT_GT(r.max_deviation_digits, 25);
    EXPECT_EQ(r.expansion, "2*z5 - (1/6)*pi^2*z3");
}

TEST(Verify, SingleMethod) {
    const auto r = verify_expansion(4, 4, Precision{20, 10}, VerifyMethod::series);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.series_value);
    EXPECT_FALSE(r.quadrature_value);
}

TEST(Verify, AllPairsThroughWeightEightAtFiftyDigits) {
    ZetaCache zetas(kP50);
    for (int n = 2; n <= 8; ++n)
        for (int b = 1; b < n; ++b) {
            const auto r = verify_expansion(n - b, b, kP50, VerifyMethod::both, &zetas);
            EXPECT_TRUE(r.passed) << n - b << "," << b << ": " << r.message;
        }
}

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lzeta;

TEST(Rational, CanonicalForm) {
    Rational q(BigInt(6), BigInt(-4));
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).str(), "0");
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "7", "-7", "1/3", "-22/7", "123456789012345678901234567890/11"})
        EXPECT_EQ(Rational::parse(s).str(), s);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    auto draw = [&] {
        int den = d(rng);
        return Rational(BigInt(d(rng)), BigInt(den == 0 ? 1 : den));
    };
    for (int i = 0; i < 200; ++i) {
        Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - b) + b, a);
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2)));
    EXPECT_GT(Rational(-1), Rational(-2));
    EXPECT_EQ(Rational(2).pow(10), Rational(1024));
}

TEST(PiPowerScalar, ZeroHasNoPiPower) {
    PiPowerScalar z(Rational(0), 6);
    EXPECT_EQ(z.pi_exponent(), 0);
    EXPECT_THROW(PiPowerScalar(Rational(1), -2), std::invalid_argument);
    auto p = PiPowerScalar(Rational(2), 2) * PiPowerScalar(Rational(BigInt(1), BigInt(4)), 4);
    EXPECT_EQ(p, PiPowerScalar(Rational(BigInt(1), BigInt(2)), 6));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
    const auto ref = oracle::bernoulli_akiyama_tanigawa(40);
    for (unsigned m = 0; m <= 40; ++m) {
        if (m == 1) continue;
        EXPECT_EQ(bernoulli_number(m), ref[m]) << "B_" << m;
    }
    EXPECT_EQ(bernoulli_number(1), Rational(BigInt(-1), BigInt(2)));
}

TEST(Bernoulli, KnownValues) {
    EXPECT_EQ(bernoulli_number(12), Rational(BigInt(-691), BigInt(2730)));
    EXPECT_EQ(bernoulli_number(13), Rational(0));
}

TEST(ZetaEven, RationalFactors) {
    EXPECT_EQ(zeta_even_pi_coeff(1), Rational(BigInt(1), BigInt(6)));
    EXPECT_EQ(zeta_even_pi_coeff(2), Rational(BigInt(1), BigInt(90)));
    EXPECT_EQ(zeta_even_pi_coeff(3), Rational(BigInt(1), BigInt(945)));
    EXPECT_EQ(zeta_even_pi_coeff(4), Rational(BigInt(1), BigInt(9450)));
    EXPECT_THROW(zeta_even_pi_coeff(0), std::domain_error);
}

TEST(ZetaEven, AllPositive) {
    for (unsigned n = 1; n <= 30; ++n) EXPECT_GT(zeta_even_pi_coeff(n), Rational(0));
}

TEST(Matrix, RankOfPlantedProducts) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 3 + trial % 4, cols = 4 + trial % 3, r = 1 + trial % 3;
        RationalMatrix a(rows, r), b(r, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < r; ++j) a(i, j) = Rational(d(rng));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < cols; ++j) b(i, j) = Rational(d(rng));
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                for (std::size_t k = 0; k < r; ++k) m(i, j) += a(i, k) * b(k, j);
        const std::size_t rk = rank(m);
        EXPECT_LE(rk, r);
        EXPECT_EQ(rk, rank(m.transposed()));
    }
}

TEST(Matrix, RankInvariantUnderRowPermutation) {
    RationalMatrix m(4, 3);
    int v[4][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {1, 3, 4}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Rational(v[i][j]);
    EXPECT_EQ(rank(m), 2u);
    std::vector<int> order{0, 1, 2, 3};
    while (std::next_permutation(order.begin(), order.end())) {
        RationalMatrix p(4, 3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) p(i, j) = m(order[i], j);
        EXPECT_EQ(rank(p), 2u);
    }
}

TEST(Matrix, SolveMembershipProducesValidCombination) {
    RationalMatrix m(2, 3);
    m(0, 0) = 1, m(0, 1) = 1, m(0, 2) = 0;
    m(1, 0) = 0, m(1, 1) = 1, m(1, 2) = 1;
    std::vector<Rational> t{Rational(1), Rational(3), Rational(2)};
    auto lambda = solve_membership(m, t);
    ASSERT_TRUE(lambda);
    EXPECT_EQ(combine_rows(m, *lambda), t);

    std::vector<Rational> outside{Rational(1), Rational(0), Rational(0)};
    EXPECT_FALSE(solve_membership(m, outside));
    std::vector<Rational> wrong_size{Rational(1)};
    EXPECT_THROW(solve_membership(m, wrong_size), std::invalid_argument);
}

TEST(Monomial, ParseAndPrint) {
    auto m = ZetaMonomial::parse("z3^2*z5");
    EXPECT_EQ(m.str(), "z3^2*z5");
    EXPECT_EQ(m.weight(), 11);
    EXPECT_TRUE(m.is_odd_only());
    EXPECT_EQ(ZetaMonomial::parse("z5*z3*z3"), m);
    EXPECT_EQ(m.latex(), "\\zeta(3)^{2}\\zeta(5)");
}

TEST(Monomial, RejectsMalformed) {
    for (const char* bad : {"", "z", "z1", "x3", "z3^0", "z3*", "*z3", "z3^", "z3**z5", "z-3"})
        EXPECT_THROW(ZetaMonomial::parse(bad), std::invalid_argument) << bad;
}

TEST(Monomial, OddEvenSplit) {
    auto m = ZetaMonomial::parse("z2^3*z3*z4");
    EXPECT_EQ(m.odd_part().str(), "z3");
    EXPECT_EQ(m.even_part().str(), "z2^3*z4");
    EXPECT_EQ(m.odd_part() * m.even_part(), m);
}

TEST(Combination, MixedWeightsRejected) {
    ZetaCombination c;
    c.add(ZetaMonomial::parse("z5"), Rational(1));
    EXPECT_THROW(c.add(ZetaMonomial::parse("z3"), Rational(1)), std::logic_error);
    c.add(ZetaMonomial::parse("z5"), Rational(-1));
    EXPECT_TRUE(c.empty());
}

TEST(Combination, PiReducedWeightChecks) {
    PiReducedCombination c(8);
    c.add(ZetaMonomial::parse("z3*z5"), PiPowerScalar(Rational(1), 0));
    EXPECT_THROW(c.add(ZetaMonomial::parse("z3"), PiPowerScalar(Rational(1), 2)), std::logic_error);
    EXPECT_THROW(c.add_coeff(ZetaMonomial::parse("z2"), Rational(1)), std::invalid_argument);
    EXPECT_EQ(c.scaled(PiPowerScalar(Rational(2), 2)).weight(), 10);
}

TEST(Format, TextForms) {
    EXPECT_EQ(to_text(expand_lz(3, 2)), "2*z5 - z2*z3");
    EXPECT_EQ(to_text(reduced_lz(2, 2)), "-(1/360)*pi^4");
    EXPECT_EQ(to_text(reduced_lz(4, 2)), "(1/2)*z3^2 - (1/1260)*pi^6");
    EXPECT_EQ(to_latex(reduced_lz(4, 1)), "\\zeta(5)");
    EXPECT_EQ(to_text(ZetaCombination{}), "0");
}

TEST(Format, ParseRoundTrip) {
    for (int n = 2; n <= 10; ++n)
        for (const auto& [ab, c] : expand_weight(n)) {
            EXPECT_EQ(parse_zeta_combination(to_text(c)), c);
            const auto r = reduced_lz(ab.first, ab.second);
            EXPECT_EQ(parse_pi_reduced(to_text(r), n), r);
        }
    EXPECT_THROW(parse_zeta_combination("z3 + "), std::invalid_argument);
    EXPECT_THROW(parse_zeta_combination("pi^2*z3"), std::invalid_argument);
}

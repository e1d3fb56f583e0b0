#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lzeta;

namespace {

PartitionElement px(std::vector<int> parts) { return PartitionElement::from_parts(parts); }

std::vector<PartitionElement> p2(int n) { return enumerate_partitions(n, PartitionFilter{2, std::nullopt, Parity::any}); }

}  // namespace

TEST(Compositions, Examples) {
    auto one = enumerate_compositions(px({4}), 2);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].entries[0].value, 2);

    auto forced = enumerate_compositions(px({2, 2}), 2);
    ASSERT_EQ(forced.size(), 1u);
    EXPECT_EQ(forced[0].entries[0].value, 1);
    EXPECT_EQ(forced[0].entries[1].value, 1);

    auto two = enumerate_compositions(px({3, 3}), 3);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].entries[0].value + two[0].entries[1].value, 3);
    EXPECT_NE(two[0].entries[0].value, two[1].entries[0].value);
}

TEST(Compositions, EntriesRespectBounds) {
    for (int n = 2; n <= 12; ++n)
        for (const auto& x : p2(n))
            for (int b = 0; b <= n; ++b) {
                const auto all = enumerate_compositions(x, b);
                EXPECT_EQ(BigInt(all.size()), count_compositions(x, b));
                for (const auto& a : all) {
                    int sum = 0;
                    EXPECT_EQ(static_cast<int>(a.entries.size()), x.norm());
                    for (const auto& e : a.entries) {
                        EXPECT_GE(e.value, 1);
                        EXPECT_LE(e.value, e.part - 1);
                        sum += e.value;
                    }
                    EXPECT_EQ(sum, b);
                    EXPECT_EQ(a.total, b);
                }
            }
}

TEST(BigC, Examples) {
    EXPECT_EQ(big_c(px({4}), 2), 6);
    EXPECT_EQ(big_c(px({2, 2}), 2), 4);
    EXPECT_EQ(big_c(px({4, 2}), 0), 0);
}

TEST(BigC, MatchesBivariatePolynomialOracle) {
    for (int n = 2; n <= 10; ++n)
        for (const auto& x : p2(n))
            for (int b = 0; b <= n; ++b)
                EXPECT_EQ(big_c(x, b), oracle::big_c_bruteforce(x, b)) << x.str() << " b=" << b;
}

TEST(BigC, RowSumIdentity) {
    for (int n = 2; n <= 12; ++n)
        for (const auto& x : p2(n)) {
            BigInt sum = 0, expected = 1;
            for (int b = 0; b <= n; ++b) sum += big_c(x, b);
            for (const auto& [part, mult] : x.support())
                for (int i = 0; i < mult; ++i) expected *= (BigInt(1) << part) - 2;
            EXPECT_EQ(sum, expected) << x.str();
        }
}

TEST(BigC, SymmetricAndSupportedOnNormWindow) {
    for (int n = 2; n <= 16; ++n)
        for (const auto& x : p2(n))
            for (int b = 0; b <= n; ++b) {
                EXPECT_EQ(big_c(x, b), big_c(x, n - b));
                const bool inside = x.norm() <= b && b <= n - x.norm();
                if (!inside) EXPECT_EQ(big_c(x, b), 0);
                else EXPECT_GT(big_c(x, b), 0);
            }
}

TEST(CTilde, Examples) {
    EXPECT_EQ(c_tilde(px({6})), Rational(BigInt(-1), BigInt(6)));
    EXPECT_EQ(c_tilde(px({3, 3})), Rational(BigInt(1), BigInt(18)));
    EXPECT_EQ(c_tilde(px({2, 2, 2})), Rational(BigInt(-1), BigInt(48)));
}

TEST(LittleC, Examples) {
    EXPECT_EQ(little_c(px({5}), 2), Rational(2));
    EXPECT_EQ(little_c(px({2, 2}), 2), Rational(BigInt(1), BigInt(2)));
    EXPECT_EQ(little_c(px({3, 3}), 3), Rational(1));
}

TEST(LittleC, RecordIsConsistent) {
    for (int n = 2; n <= 12; ++n)
        for (const auto& x : p2(n))
            for (int b = 1; b < n; ++b) {
                const auto r = coefficient_record(x, b);
                EXPECT_EQ(r.little_c, Rational(r.big_c) * r.c_tilde);
                EXPECT_EQ(r.b, b);
            }
}

TEST(Coefficients, RejectPartsBelowTwo) {
    EXPECT_THROW(big_c(px({3, 1}), 1), std::invalid_argument);
    EXPECT_THROW(c_tilde(px({1})), std::invalid_argument);
    EXPECT_THROW(enumerate_compositions(px({2, 1}), 1), std::invalid_argument);
}

#include "shibij/catalan.hpp"
#include "shibij/errors.hpp"

#include <gtest/gtest.h>

using namespace shibij;

TEST(Catalan, ClassicalValues) {
    const std::vector<int> catalan{1, 1, 2, 5, 14, 42, 132, 429};
    for (std::size_t n = 1; n < catalan.size(); ++n) {
        EXPECT_EQ(catalan_A(static_cast<std::int64_t>(n), 1), catalan[n]);
    }
    const std::vector<int> central{1, 2, 6, 20, 70, 252};
    for (std::size_t n = 1; n < central.size(); ++n) {
        EXPECT_EQ(catalan_C(static_cast<std::int64_t>(n), 1), central[n]);
    }
    EXPECT_EQ(catalan_A(4, 3), 140);
    EXPECT_EQ(catalan_C(4, 3), 1820);
}

TEST(Catalan, BinomialForms) {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::int64_t m = 1; m <= 6; ++m) {
            const auto c = binomial((m + 1) * n, n);
            ASSERT_EQ(catalan_C(n, m), c);
            ASSERT_EQ(c % (m * n + 1), 0);
            ASSERT_EQ(catalan_A(n, m), c / (m * n + 1));
            ASSERT_EQ(catalan_C(n, m), catalan_A(n, m) * (m * n + 1));
        }
    }
}

TEST(Catalan, OtherTypes) {
    EXPECT_EQ(catalan_general({1, {1, 3, 3, 5}, 6, 4}), 50);
    EXPECT_EQ(catalan_general({1, {1, 4, 5, 7, 8, 11}, 12, 6}), 833);
    EXPECT_EQ(catalan_general({1, {1, 5}, 6, 2}), 8);
}

TEST(Catalan, LargeValuesAreExact) {
    EXPECT_EQ(catalan_A(40, 5), binomial(240, 40) / 201);
    EXPECT_GT(catalan_C(60, 3), BigInt(1) << 128);
}

TEST(Catalan, RejectsBadParameters) {
    EXPECT_THROW(catalan_general({1, {1}, 3, 1}), DomainError);
    EXPECT_THROW(catalan_general({0, {1}, 2, 1}), DomainError);
    EXPECT_THROW(catalan_general({1, {1, 2}, 3, 1}), DomainError);
    EXPECT_THROW(catalan_A(0, 1), DomainError);
    EXPECT_THROW(catalan_C(2, 0), DomainError);
}

TEST(Binomial, Basics) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(0, 0), 1);
}

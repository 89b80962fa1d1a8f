#include "generators.hpp"

#include "shibij/affine.hpp"
#include "shibij/errors.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace shibij;
using shibij::testing::abacus_of;
using shibij::testing::small_abaci;

TEST(Decode, OneIndexedResidue) {
    EXPECT_EQ(decode(8, 4), (BaseLevel{4, 1}));
    EXPECT_EQ(decode(4, 4), (BaseLevel{4, 0}));
    EXPECT_EQ(decode(0, 4), (BaseLevel{4, -1}));
    EXPECT_EQ(decode(1, 4), (BaseLevel{1, 0}));
    EXPECT_EQ(decode(-7, 4), (BaseLevel{1, -2}));
    EXPECT_EQ(residue(-6, 4), 2);
}

TEST(Decode, RoundTripsOverARange) {
    for (std::int64_t n = 1; n <= 7; ++n) {
        for (std::int64_t v = -60; v <= 60; ++v) {
            const auto e = decode(v, n);
            ASSERT_GE(e.base, 1);
            ASSERT_LE(e.base, n);
            ASSERT_EQ(value_of(e, n), v);
            ASSERT_EQ(e.base + n * e.level, v);
        }
    }
}

TEST(Decode, RejectsBadModulus) {
    EXPECT_THROW(decode(3, 0), DomainError);
}

TEST(Decode, OverflowIsReported) {
    EXPECT_THROW(value_of({2, std::numeric_limits<std::int64_t>::max() / 2}, 4), std::overflow_error);
}

TEST(Abacus, FromValuesValidates) {
    EXPECT_NO_THROW(Abacus::from_values({-3, 2, 3, 8}));
    EXPECT_THROW(Abacus::from_values({1, 5, 6, 8}), InvariantError);   // repeated residue
    EXPECT_THROW(Abacus::from_values({1, 3, 2, 4}), InvariantError);   // unsorted
    EXPECT_THROW(Abacus::from_values({2, 3, 4, 5}), InvariantError);   // levels sum to 1
}

TEST(Abacus, TextRoundTrip) {
    const auto a = Abacus::from_values({-3, 2, 3, 8});
    EXPECT_EQ(to_string(a), "[1^-1,2^0,3^0,4^1]");
    EXPECT_EQ(parse_abacus(to_string(a)), a);
    EXPECT_EQ(to_string(parse_abacus("[5^-2,2^-1,4^0,3^1,1^2]")), "[5^-2,2^-1,4^0,3^1,1^2]");
    EXPECT_THROW(parse_abacus("[1^0,2^"), InvariantError);
    EXPECT_THROW(parse_abacus("[1^0,1^0]"), InvariantError);
}

TEST(Rebase, WorkedExample) {
    // Normalized window of the worked five-element example.
    const std::vector<std::int64_t> normalized{0, 2, 9, 13, 16};
    EXPECT_EQ(rebase_shift(normalized), -5);
    EXPECT_EQ(to_string(rebase(normalized)), "[5^-2,2^-1,4^0,3^1,1^2]");
}

TEST(Rebase, InvariantUnderTranslation) {
    for (const auto& a : small_abaci(4, 2)) {
        auto values = a.values();
        for (std::int64_t c = -9; c <= 9; ++c) {
            std::vector<std::int64_t> moved;
            for (auto v : values) {
                moved.push_back(v + c);
            }
            ASSERT_EQ(rebase_shift(moved), -c);
            ASSERT_EQ(rebase(moved), a);
        }
    }
}

TEST(LevelVector, RoundTrip) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& beta : shibij::testing::zero_sum_vectors(n, 2)) {
            const auto a = abacus_from_level_vector(LevelVector(beta));
            ASSERT_EQ(a, abacus_of(beta));
            ASSERT_EQ(level_vector(a), LevelVector(beta));
        }
    }
    EXPECT_THROW(abacus_from_level_vector(LevelVector({1, 0})), InvariantError);
}

TEST(KShift, AntisymmetricExpansionOfAShift) {
    const auto w = parse_abacus("[3^-1,1^0,2^0,4^1]");
    const auto shifted = k_shift(w, -8);
    EXPECT_EQ(to_string(shifted), "[3^-3,1^-2,2^-2,4^-1]");
    EXPECT_EQ(shifted.level_sum(), -8);
    EXPECT_EQ(shifted.origin_shift(), -8);
    EXPECT_EQ(to_string(antisymmetric_expansion(shifted)), "[3^-3,1^-2,2^-2,4^-1,5^1,7^2,8^2,6^3]");
}

TEST(KShift, LevelSumTracksTheShift) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& a : small_abaci(n, 2)) {
            for (std::int64_t k = -10; k <= 10; ++k) {
                const auto s = k_shift(a, k);
                ASSERT_EQ(s.level_sum(), k);
                std::int64_t sum = 0;
                for (auto v : a.values()) {
                    sum += v;
                }
                std::int64_t shifted = 0;
                for (const auto& e : s.entries()) {
                    shifted += value_of(e, static_cast<std::int64_t>(n));
                }
                ASSERT_EQ(shifted, sum + static_cast<std::int64_t>(n) * k);
            }
        }
    }
}

TEST(Balanced, ExpansionIsAlwaysBalanced) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& a : small_abaci(n, 2)) {
            for (std::int64_t k = -9; k <= 9; ++k) {
                const auto wbar = antisymmetric_expansion(k_shift(a, k));
                ASSERT_EQ(wbar.size(), 2 * n);
                ASSERT_TRUE(is_balanced(wbar)) << to_string(wbar);
                const auto beta = level_vector(wbar);
                for (std::size_t i = 0; i < 2 * n; ++i) {
                    ASSERT_EQ(beta[i], -beta[2 * n - 1 - i]);
                }
            }
        }
    }
}

TEST(Balanced, DetectsAsymmetry) {
    EXPECT_FALSE(is_balanced(parse_abacus("[3^-1,1^0,2^0,4^1]")));
    EXPECT_TRUE(is_balanced(Abacus::identity(6)));
    EXPECT_THROW(is_balanced(Abacus::identity(3)), DomainError);
}

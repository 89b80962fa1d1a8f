#include "generators.hpp"

#include "shibij/catalan.hpp"
#include "shibij/errors.hpp"
#include "shibij/tableau.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace shibij;
using shibij::testing::small_abaci;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

std::int64_t floor_div(std::int64_t a, std::int64_t d) {
    return a / d - ((a % d != 0) && ((a < 0) != (d < 0)));
}

// k(i,j) = floor((v(j+1) - v(i)) / n) on any translate of the sorted window.
Staircase floor_oracle(const std::vector<std::int64_t>& values) {
    const auto n = static_cast<std::int64_t>(values.size());
    Staircase s(values.size() - 1);
    for (std::size_t i = 1; i < values.size(); ++i) {
        for (std::size_t j = i; j < values.size(); ++j) {
            s.set(i, j, floor_div(values[j] - values[i - 1], n));
        }
    }
    return s;
}

// Every staircase of the given rank with entries in [0, top].
std::vector<Staircase> all_staircases(std::size_t rank, std::int64_t top) {
    const auto cells = rank * (rank + 1) / 2;
    std::vector<Staircase> out;
    std::vector<std::int64_t> digits(cells, 0);
    for (;;) {
        Staircase s(rank);
        std::size_t c = 0;
        for (std::size_t i = 1; i <= rank; ++i) {
            for (std::size_t j = i; j <= rank; ++j) {
                s.set(i, j, digits[c++]);
            }
        }
        out.push_back(s);
        std::size_t k = 0;
        while (k < cells && digits[k] == top) {
            digits[k++] = 0;
        }
        if (k == cells) {
            return out;
        }
        ++digits[k];
    }
}

}  // namespace

TEST(Staircase, DisplayLayout) {
    const Rows rows{{3, 2, 1, 0}, {2, 2, 1}, {1, 0}, {0}};
    const auto s = Staircase::from_rows(rows);
    EXPECT_EQ(s.rank(), 4u);
    EXPECT_EQ(s.at(1, 4), 3);
    EXPECT_EQ(s.at(1, 1), 0);
    EXPECT_EQ(s.at(2, 4), 2);
    EXPECT_EQ(s.at(3, 3), 0);
    EXPECT_EQ(s.rows(), rows);
    EXPECT_EQ(s.row_sum(2), 5);
    EXPECT_EQ(s.total(), 12);
    EXPECT_THROW(s.at(3, 2), std::out_of_range);
    EXPECT_THROW(Staircase::from_rows({{1, 0}, {0, 0}}), InvariantError);
}

TEST(Staircase, AsciiRendering) {
    const auto s = Staircase::from_rows({{10, 2}, {1}});
    EXPECT_EQ(render_ascii(s), "10  2\n 1\n");
}

TEST(TableauFromAbacus, WorkedExamples) {
    EXPECT_EQ(tableau_from_abacus(parse_abacus("[5^-2,2^-1,4^0,3^1,1^2]")).rows(),
              (Rows{{3, 2, 1, 0}, {2, 2, 1}, {1, 0}, {0}}));
    EXPECT_EQ(tableau_from_abacus(parse_abacus("[4^-3,1^-1,2^2,3^2]")).rows(),
              (Rows{{4, 4, 1}, {3, 3}, {0}}));
    EXPECT_EQ(tableau_from_abacus(parse_abacus("[3^-1,1^0,2^0,4^1]")).rows(),
              (Rows{{2, 0, 0}, {1, 0}, {1}}));
    EXPECT_EQ(tableau_from_abacus(Abacus::identity(5)), AlcoveTableau::zero(4));
}

TEST(TableauFromAbacus, MatchesFloorOracle) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& a : small_abaci(n, n <= 4 ? 3 : 2)) {
            ASSERT_EQ(tableau_from_abacus(a).cells(), floor_oracle(a.values())) << to_string(a);
        }
    }
}

TEST(TableauFromAbacus, IndependentOfWindowTranslate) {
    for (const auto& a : small_abaci(4, 2)) {
        const auto t = tableau_from_abacus(a);
        for (std::int64_t c = -7; c <= 7; ++c) {
            auto values = a.values();
            for (auto& v : values) {
                v += c;
            }
            ASSERT_EQ(floor_oracle(values), t.cells());
        }
    }
}

TEST(AbacusFromTableau, WorkedExampleTrace) {
    const auto t = AlcoveTableau::from_rows({{3, 2, 1, 0}, {2, 2, 1}, {1, 0}, {0}});
    TableauInversion trace;
    const auto a = abacus_from_tableau(t, trace);
    EXPECT_EQ(trace.b, (std::vector<std::int64_t>{0, 0, 1, 3}));
    EXPECT_EQ(trace.sigma, (std::vector<std::int64_t>{4, 1, 3, 2}));
    EXPECT_EQ(trace.normalized_window, (std::vector<std::int64_t>{0, 2, 9, 13, 16}));
    EXPECT_EQ(trace.shift, -5);
    EXPECT_EQ(to_string(a), "[5^-2,2^-1,4^0,3^1,1^2]");
}

TEST(AbacusFromTableau, InversionTable) {
    EXPECT_EQ(permutation_from_inversion_table({0, 0, 1, 3}), (std::vector<std::int64_t>{4, 1, 3, 2}));
    EXPECT_EQ(permutation_from_inversion_table({0, 1, 2}), (std::vector<std::int64_t>{3, 2, 1}));
    EXPECT_EQ(permutation_from_inversion_table({}), std::vector<std::int64_t>{});
    EXPECT_THROW(permutation_from_inversion_table({1}), InvariantError);
}

TEST(AbacusFromTableau, RoundTripFromAbacus) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& a : small_abaci(n, n <= 4 ? 3 : 2)) {
            ASSERT_EQ(abacus_from_tableau(tableau_from_abacus(a)), a) << to_string(a);
        }
    }
}

TEST(AbacusFromTableau, EveryShiTableauIsRealized) {
    for (std::size_t rank = 1; rank <= 3; ++rank) {
        std::size_t valid = 0;
        for (const auto& s : all_staircases(rank, 4)) {
            if (!check_alcove_shi(s)) {
                continue;
            }
            ++valid;
            const AlcoveTableau t(s);
            ASSERT_EQ(tableau_from_abacus(abacus_from_tableau(t)), t);
        }
        EXPECT_GT(valid, 0u);
    }
}

TEST(AlcoveTableau, RejectsShiViolations) {
    EXPECT_THROW(AlcoveTableau::from_rows({{3, 0}, {1}}), InvariantError);
    EXPECT_THROW(AlcoveTableau::from_rows({{0, -1}, {0}}), InvariantError);
    EXPECT_NO_THROW(AlcoveTableau::from_rows({{2, 1}, {0}}));
}

TEST(Region, WorkedRegionTableau) {
    const auto t = tableau_from_abacus(parse_abacus("[4^-3,1^-1,2^2,3^2]"));
    EXPECT_EQ(region_from_alcove(t, 3).rows(), (Rows{{3, 3, 1}, {3, 3}, {0}}));
    EXPECT_THROW(region_from_alcove(t, 0), DomainError);
}

TEST(Region, RegionConditions) {
    EXPECT_TRUE(check_region_shi(Staircase::from_rows({{2, 1}, {1}}), 2));
    EXPECT_FALSE(check_region_shi(Staircase::from_rows({{1, 1}, {1}}), 2));
    EXPECT_TRUE(check_region_shi(Staircase::from_rows({{2, 1}, {2}}), 2));
    EXPECT_FALSE(check_region_shi(Staircase::from_rows({{3, 1}, {1}}), 2));
}

// Brute force: group a large box of abaci by region and take the coordinatewise
// minimum of each group. The box contains every minimal alcove.
TEST(Region, MinimalAlcoveMatchesBruteForceGrouping) {
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::int64_t m = 1; m <= 2; ++m) {
            const auto bound = (static_cast<std::int64_t>(n) - 1) * m + 1;
            std::map<Staircase, Staircase> minimum;
            for (const auto& a : small_abaci(n, bound)) {
                const auto t = tableau_from_abacus(a);
                const auto r = region_from_alcove(t, m).cells();
                auto [it, fresh] = minimum.try_emplace(r, t.cells());
                if (!fresh) {
                    for (std::size_t i = 1; i < n; ++i) {
                        for (std::size_t j = i; j < n; ++j) {
                            it->second.set(i, j, std::min(it->second.at(i, j), t.at(i, j)));
                        }
                    }
                }
            }
            ASSERT_EQ(BigInt(minimum.size()), catalan_A(static_cast<std::int64_t>(n), m));
            for (const auto& [r, low] : minimum) {
                const RegionTableau region(r, m);
                const auto k = alcove_from_region(region);
                ASSERT_EQ(k.cells(), low);
                ASSERT_EQ(region_from_alcove(k, m), region);
            }
        }
    }
}

TEST(Region, EveryRegionTableauHasAnAlcove) {
    for (std::size_t rank = 1; rank <= 3; ++rank) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            std::size_t count = 0;
            for (const auto& s : all_staircases(rank, m)) {
                if (!check_region_shi(s, m)) {
                    continue;
                }
                ++count;
                const RegionTableau r(s, m);
                ASSERT_EQ(region_from_alcove(alcove_from_region(r), m), r);
            }
            EXPECT_EQ(BigInt(count), catalan_A(static_cast<std::int64_t>(rank) + 1, m));
        }
    }
}

TEST(Conjugation, Involution) {
    for (const auto& a : small_abaci(4, 2)) {
        const auto t = tableau_from_abacus(a);
        ASSERT_EQ(conjugate(conjugate(t)), t);
        for (std::size_t i = 1; i <= 3; ++i) {
            for (std::size_t j = i; j <= 3; ++j) {
                ASSERT_EQ(conjugate(t).at(i, j), t.at(4 - j, 4 - i));
            }
        }
    }
}

TEST(Conjugation, BalancedAbaciGiveSelfConjugateTableaux) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& a : small_abaci(n, 2)) {
            for (std::int64_t k = -6; k <= 6; ++k) {
                const auto wbar = antisymmetric_expansion(k_shift(a, k));
                const auto t = tableau_from_abacus(wbar);
                ASSERT_TRUE(is_self_conjugate(t)) << to_string(wbar);
                ASSERT_NO_THROW(TypeCTableau{t});
            }
        }
    }
}

TEST(Conjugation, TypeCTableauValidates) {
    EXPECT_THROW(TypeCTableau{AlcoveTableau::zero(2)}, InvariantError);
    EXPECT_THROW(TypeCTableau{AlcoveTableau::from_rows({{1, 1, 1}, {0, 0}, {0}})}, InvariantError);
    EXPECT_EQ(TypeCTableau{AlcoveTableau::zero(3)}.n(), 2u);
}

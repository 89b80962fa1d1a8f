#include "shibij/catalan.hpp"
#include "shibij/enumerate.hpp"
#include "shibij/errors.hpp"
#include "shibij/lattice_paths.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace shibij;

namespace {

using Steps = std::vector<std::int64_t>;
using Rows = std::vector<std::vector<std::int64_t>>;

const LatticePath kRectanglePath(5, 3, {1, 4, 11, 12, 14});

// Rotation written out from scratch: cut the word at the t-th north step and
// glue the prefix to the end, one extra east step apart.
Steps rotate_by_hand(const Steps& s, std::int64_t m, std::int64_t t) {
    const auto n = static_cast<std::int64_t>(s.size());
    Steps out;
    for (auto j = t; j < n; ++j) {
        out.push_back(s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(t)]);
    }
    for (std::int64_t j = 0; j < t; ++j) {
        out.push_back(s[static_cast<std::size_t>(j)] + m * n + 1 - s[static_cast<std::size_t>(t)]);
    }
    return out;
}

bool is_dyck_by_hand(const Steps& s, std::int64_t m) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && s[i] < s[i - 1]) {
            return false;
        }
        if (s[i] < 0 || s[i] > m * static_cast<std::int64_t>(i)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(LatticePath, Validates) {
    EXPECT_THROW(LatticePath(2, 1, {1, 0}), InvariantError);
    EXPECT_THROW(LatticePath(2, 1, {0, 3}), InvariantError);
    EXPECT_THROW(LatticePath(2, 1, {0}), InvariantError);
    EXPECT_THROW(LatticePath(2, 0, {0, 0}), InvariantError);
    EXPECT_THROW(DyckPath(2, 1, {0, 2}), InvariantError);
    EXPECT_NO_THROW(DyckPath(5, 3, {0, 1, 3, 6, 9}));
    EXPECT_FALSE(kRectanglePath.is_dyck());
}

TEST(LatticePath, Word) {
    EXPECT_EQ(to_word(kRectanglePath), "ENEEENEEEEEEENENEENE");
    EXPECT_EQ(to_word(LatticePath(2, 1, {0, 0})), "NNEE");
}

TEST(Rotation, WorkedExamples) {
    EXPECT_EQ(rotate(kRectanglePath, 2).steps(), (Steps{0, 1, 3, 6, 9}));
    EXPECT_EQ(rotate(kRectanglePath, 3).steps(), (Steps{0, 2, 5, 8, 15}));
    const LatticePath d(5, 3, {0, 1, 3, 6, 9});
    EXPECT_EQ(rotate(d, 0), d);
    EXPECT_THROW(rotate(kRectanglePath, 5), DomainError);
    EXPECT_THROW(rotate(kRectanglePath, -1), DomainError);
}

TEST(Rotation, CanLeaveTheRectangle) {
    const LatticePath p(2, 1, {2, 2});
    EXPECT_EQ(rotation_steps(p, 1), (Steps{0, 3}));
    EXPECT_THROW(rotate(p, 1), DomainError);
    EXPECT_EQ(rotate(p, 0).steps(), (Steps{0, 0}));
}

TEST(Rotation, FindsTheDyckRotation) {
    EXPECT_EQ(find_dyck_rotation(kRectanglePath), 2);
    EXPECT_EQ(find_dyck_rotation(LatticePath(2, 1, {2, 2})), 0);
    EXPECT_EQ(find_dyck_rotation(LatticePath(5, 3, {0, 1, 3, 6, 9})), 0);
}

TEST(Rotation, ExactlyOneDyckRotationExhaustive) {
    for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            for (const auto& p : enumerate_lattice_paths(n, m)) {
                int hits = 0;
                for (std::int64_t t = 0; t < n; ++t) {
                    const auto raw = rotation_steps(p, t);
                    ASSERT_EQ(raw, rotate_by_hand(p.steps(), m, t));
                    ASSERT_GE(raw.front(), 0);
                    ASSERT_LE(raw.back(), m * n + 1);
                    ASSERT_TRUE(std::is_sorted(raw.begin(), raw.end()));
                    if (is_dyck_by_hand(raw, m)) {
                        ++hits;
                        ASSERT_LE(raw.back(), m * n);
                    }
                }
                ASSERT_EQ(hits, 1);
            }
        }
    }
}

TEST(Bj2, WorkedExamples) {
    const auto image = bj2_forward(kRectanglePath);
    EXPECT_EQ(image.dyck.steps(), (Steps{0, 1, 3, 6, 9}));
    EXPECT_EQ(image.k, 11);
    EXPECT_EQ(bj2_inverse(image.dyck, 11), kRectanglePath);

    const DyckPath d(5, 3, {0, 1, 3, 6, 9});
    EXPECT_EQ(bj2_inverse(d, 0), d.path());
    EXPECT_EQ(bj2_forward(d.path()).dyck, d);
    EXPECT_EQ(bj2_forward(d.path()).k, 0);

    const auto small = bj2_forward(LatticePath(2, 1, {2, 2}));
    EXPECT_EQ(small.dyck.steps(), (Steps{0, 0}));
    EXPECT_EQ(small.k, 2);
    EXPECT_EQ(bj2_inverse(DyckPath(2, 1, {0, 0}), 2).steps(), (Steps{2, 2}));
    EXPECT_THROW(bj2_inverse(d, 16), DomainError);
    EXPECT_THROW(bj2_inverse(d, -1), DomainError);
}

TEST(Bj2, SmallTable) {
    std::map<std::pair<Steps, std::int64_t>, Steps> table;
    for (const auto& p : enumerate_lattice_paths(2, 1)) {
        const auto image = bj2_forward(p);
        table[{image.dyck.steps(), image.k}] = p.steps();
    }
    const std::map<std::pair<Steps, std::int64_t>, Steps> expected{
        {{{0, 0}, 0}, {0, 0}}, {{{0, 0}, 1}, {1, 1}}, {{{0, 0}, 2}, {2, 2}},
        {{{0, 1}, 0}, {0, 1}}, {{{0, 1}, 1}, {1, 2}}, {{{0, 1}, 2}, {0, 2}},
    };
    EXPECT_EQ(table, expected);
}

TEST(Bj2, BijectiveExhaustive) {
    for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            const auto paths = enumerate_lattice_paths(n, m);
            const auto dycks = enumerate_dyck_paths(n, m);
            ASSERT_EQ(paths.size(), static_cast<std::size_t>(m * n + 1) * dycks.size());
            std::set<std::pair<Steps, std::int64_t>> image;
            for (const auto& p : paths) {
                const auto [d, k] = bj2_forward(p);
                ASSERT_GE(k, 0);
                ASSERT_LE(k, m * n);
                ASSERT_TRUE(image.emplace(d.steps(), k).second);
                ASSERT_EQ(bj2_inverse(d, k), p);
            }
            for (const auto& d : dycks) {
                for (std::int64_t k = 0; k <= m * n; ++k) {
                    ASSERT_TRUE(image.count({d.steps(), k}));
                    const auto back = bj2_forward(bj2_inverse(d, k));
                    ASSERT_EQ(back.dyck, d);
                    ASSERT_EQ(back.k, k);
                }
            }
        }
    }
}

TEST(PathCounts, MatchFormulas) {
    EXPECT_EQ(enumerate_lattice_paths(2, 1).size(), 6u);
    EXPECT_EQ(enumerate_dyck_paths(2, 1).size(), 2u);
    for (std::int64_t m = 1; m <= 4; ++m) {
        EXPECT_EQ(enumerate_lattice_paths(1, m).size(), static_cast<std::size_t>(m + 1));
        EXPECT_EQ(enumerate_dyck_paths(1, m).size(), 1u);
    }
    EXPECT_EQ(enumerate_lattice_paths(5, 3).size(), 15504u);
    EXPECT_EQ(enumerate_dyck_paths(5, 3).size(), 969u);
    for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            ASSERT_EQ(BigInt(enumerate_lattice_paths(n, m).size()), catalan_C(n, m));
            ASSERT_EQ(BigInt(enumerate_dyck_paths(n, m).size()), catalan_A(n, m));
        }
    }
}

TEST(PathCounts, ResourceCeiling) {
    EnumerationOptions tight;
    tight.ceiling = 5;
    EXPECT_THROW(enumerate_lattice_paths(2, 1, tight), ResourceLimitError);
    EXPECT_THROW(enumerate_dyck_paths(0, 1), DomainError);
}

TEST(Fkt, RowSums) {
    EXPECT_EQ(fkt_row_sums(DyckPath(5, 3, {0, 1, 3, 6, 9})), (Steps{9, 6, 3, 1}));
    EXPECT_EQ(fkt_row_sums(DyckPath(4, 2, {0, 0, 0, 0})), (Steps{0, 0, 0}));
    EXPECT_EQ(fkt_row_sums(DyckPath(3, 1, {0, 0, 1})), (Steps{1, 0}));
}

TEST(Fkt, Regions) {
    EXPECT_EQ(fkt_region(DyckPath(3, 1, {0, 0, 1})).rows(), (Rows{{1, 0}, {0}}));
    EXPECT_EQ(fkt_region(DyckPath(4, 2, {0, 0, 0, 0})).rows(), (Rows{{0, 0, 0}, {0, 0}, {0}}));
    EXPECT_EQ(fkt_region(DyckPath(5, 3, {0, 1, 3, 6, 9})).rows(), (Rows{{3, 3, 2, 1}, {3, 2, 1}, {2, 1}, {1}}));
    EXPECT_EQ(fkt_region(DyckPath(1, 2, {0})).rank(), 0u);
}

TEST(Fkt, BijectionOntoRegionTableaux) {
    for (std::int64_t n = 1; n <= 5; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            std::set<RegionTableau> all;
            for (const auto& w : enumerate_regions_A(n, m)) {
                all.insert(region_from_alcove(tableau_from_abacus(w), m));
            }
            std::set<RegionTableau> image;
            for (const auto& d : enumerate_dyck_paths(n, m)) {
                const auto found = region_tableaux_with_row_sums(fkt_row_sums(d), m, 3);
                ASSERT_EQ(found.size(), 1u);
                const auto r = fkt_region(d);
                ASSERT_EQ(r, found.front());
                ASSERT_EQ(dyck_from_region(r), d);
                for (std::size_t i = 1; i <= r.rank(); ++i) {
                    ASSERT_EQ(r.cells().row_sum(i), fkt_row_sums(d)[i - 1]);
                }
                ASSERT_TRUE(image.insert(r).second);
            }
            ASSERT_EQ(image, all);
        }
    }
}

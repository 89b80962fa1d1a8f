#pragma once

// North-east lattice paths in an n x mn rectangle, the rotation bijection onto
// m-Dyck paths times {0, ..., mn}, and the row-sum correspondence between
// m-Dyck paths and region tableaux.

#include "shibij/enumerate.hpp"
#include "shibij/tableau.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace shibij {

/// Step sequence 0 <= s_1 <= ... <= s_n <= mn: s_i east steps precede the i-th north step.
class LatticePath {
public:
    /// Throws InvariantError unless the steps are monotone within [0, mn].
    LatticePath(std::int64_t n, std::int64_t m, std::vector<std::int64_t> steps);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t m() const noexcept { return m_; }
    const std::vector<std::int64_t>& steps() const noexcept { return steps_; }
    std::int64_t step(std::int64_t i) const { return steps_.at(static_cast<std::size_t>(i - 1)); }

    /// s_i <= m(i-1) for every i.
    bool is_dyck() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

private:
    std::int64_t n_;
    std::int64_t m_;
    std::vector<std::int64_t> steps_;
};

class DyckPath {
public:
    /// Throws InvariantError unless the path stays weakly above the line of slope 1/m.
    explicit DyckPath(LatticePath path);
    DyckPath(std::int64_t n, std::int64_t m, std::vector<std::int64_t> steps);

    std::int64_t n() const noexcept { return path_.n(); }
    std::int64_t m() const noexcept { return path_.m(); }
    const std::vector<std::int64_t>& steps() const noexcept { return path_.steps(); }
    const LatticePath& path() const noexcept { return path_; }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    LatticePath path_;
};

/// (s_{t+1} - p, ..., s_n - p, s'_1 - p, ..., s'_t - p) with p = s_{t+1} and
/// s'_j = s_j + mn + 1. Entries lie in [0, mn+1]; mn+1 only appears when the
/// rotation is not a Dyck path. Throws DomainError for t outside 0..n-1.
std::vector<std::int64_t> rotation_steps(const LatticePath& p, std::int64_t t);

/// rotation_steps as a path. Throws DomainError when the rotation leaves the rectangle.
LatticePath rotate(const LatticePath& p, std::int64_t t);

/// The unique t with a Dyck rotation. Throws InternalError when none or several exist.
std::int64_t find_dyck_rotation(const LatticePath& p);

struct Bj2Image {
    DyckPath dyck;
    std::int64_t k = 0;
};

/// (rotation at t, s_{t+1}) for t = find_dyck_rotation(p).
Bj2Image bj2_forward(const LatticePath& p);

/// Throws DomainError for k outside 0..mn.
LatticePath bj2_inverse(const DyckPath& d, std::int64_t k);

/// lambda_i = s_{n+1-i} for i = 1..n-1, weakly decreasing.
std::vector<std::int64_t> fkt_row_sums(const DyckPath& d);

/// The region tableau of rank n-1 whose i-th row sums to lambda_i, found by
/// exhaustive search. Throws InternalError unless exactly one tableau matches.
RegionTableau fkt_region(const DyckPath& d);

/// Every region tableau of the given rank whose rows sum to `sums`, up to `limit` of them.
std::vector<RegionTableau> region_tableaux_with_row_sums(const std::vector<std::int64_t>& sums, std::int64_t m,
                                                         std::size_t limit);

/// Dyck path read off the row sums of a region tableau of rank n-1.
DyckPath dyck_from_region(const RegionTableau& r);

/// "E" for each east step and "N" for each north step, ending at (mn, n).
std::string to_word(const LatticePath& p);

using PathVisitor = std::function<bool(const LatticePath&)>;

/// Lexicographic in the step sequence; counts are C((m+1)n, n) and the type A Catalan number.
void for_each_lattice_path(std::int64_t n, std::int64_t m, const PathVisitor& visit,
                           const EnumerationOptions& opts = {});
void for_each_dyck_path(std::int64_t n, std::int64_t m, const PathVisitor& visit,
                        const EnumerationOptions& opts = {});

std::vector<LatticePath> enumerate_lattice_paths(std::int64_t n, std::int64_t m, const EnumerationOptions& opts = {});
std::vector<DyckPath> enumerate_dyck_paths(std::int64_t n, std::int64_t m, const EnumerationOptions& opts = {});

}  // namespace shibij

#pragma once

// Shi tableaux of dominant alcoves and dominant regions in type A, and the
// self-conjugate tableaux of rank 2n-1 that stand in for type C_n.
//
// Cells are addressed (i, j) with 1 <= i <= j <= rank. Entry (i, j) is the
// coordinate of the root alpha_i + ... + alpha_j. The staircase display puts
// row i as k(i,rank), ..., k(i,i) from left to right.

#include "shibij/affine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shibij {

/// Raw staircase of integers with no invariant beyond its shape.
class Staircase {
public:
    Staircase() = default;
    explicit Staircase(std::size_t rank);

    /// Rows in display order: rows[i-1] = (k(i,rank), ..., k(i,i)).
    static Staircase from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rank() const noexcept { return rank_; }
    std::int64_t at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, std::int64_t value);

    std::vector<std::vector<std::int64_t>> rows() const;
    std::int64_t row_sum(std::size_t i) const;
    std::int64_t total() const;

    friend bool operator==(const Staircase&, const Staircase&) = default;
    friend auto operator<=>(const Staircase&, const Staircase&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;
    std::size_t rank_ = 0;
    std::vector<std::int64_t> cells_;
};

/// Nonnegative entries with k(i,j) - k(i,l) - k(l+1,j) in {0,1} for all i <= l < j.
bool check_alcove_shi(const Staircase& s);

/// Entries in [0,m]; for i <= l < j, r(i,j) - r(i,l) - r(l+1,j) in {0,1} when
/// r(i,l) + r(l+1,j) < m, and r(i,j) = m otherwise.
bool check_region_shi(const Staircase& s, std::int64_t m);

/// Shi tableau of a dominant alcove.
class AlcoveTableau {
public:
    /// Throws InvariantError if the alcove Shi conditions fail.
    explicit AlcoveTableau(Staircase cells);
    static AlcoveTableau from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static AlcoveTableau zero(std::size_t rank);

    std::size_t rank() const noexcept { return cells_.rank(); }
    std::int64_t at(std::size_t i, std::size_t j) const { return cells_.at(i, j); }
    const Staircase& cells() const noexcept { return cells_; }
    std::vector<std::vector<std::int64_t>> rows() const { return cells_.rows(); }

    friend bool operator==(const AlcoveTableau&, const AlcoveTableau&) = default;

private:
    Staircase cells_;
};

/// Shi tableau of a dominant region of the m-Shi arrangement.
class RegionTableau {
public:
    /// Throws InvariantError if m < 1 or the region Shi conditions fail.
    RegionTableau(Staircase cells, std::int64_t m);
    static RegionTableau from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t m);

    std::size_t rank() const noexcept { return cells_.rank(); }
    std::int64_t m() const noexcept { return m_; }
    std::int64_t at(std::size_t i, std::size_t j) const { return cells_.at(i, j); }
    const Staircase& cells() const noexcept { return cells_; }
    std::vector<std::vector<std::int64_t>> rows() const { return cells_.rows(); }

    friend bool operator==(const RegionTableau&, const RegionTableau&) = default;
    friend auto operator<=>(const RegionTableau&, const RegionTableau&) = default;

private:
    Staircase cells_;
    std::int64_t m_ = 1;
};

/// Type C_n alcove tableau stored as a self-conjugate tableau of rank 2n-1.
class TypeCTableau {
public:
    /// Throws InvariantError unless the rank is odd and the tableau is self-conjugate.
    explicit TypeCTableau(AlcoveTableau inner);

    std::size_t n() const noexcept { return (inner_.rank() + 1) / 2; }
    const AlcoveTableau& inner() const noexcept { return inner_; }

private:
    AlcoveTableau inner_;
};

/// k(i,j) = l(j+1) - l(i), minus 1 when r(i) > r(j+1), indices into the sorted abacus.
AlcoveTableau tableau_from_abacus(const Abacus& a);

/// Intermediate values of the tableau-to-abacus reconstruction.
struct TableauInversion {
    std::vector<std::int64_t> b;                  ///< b_1..b_N, triples with defect 1
    std::vector<std::int64_t> sigma;              ///< permutation with inversion table b
    std::vector<std::int64_t> normalized_window;  ///< sorted, smallest entry 0
    std::int64_t shift = 0;                       ///< added to reach the base window
};

Abacus abacus_from_tableau(const AlcoveTableau& t);
Abacus abacus_from_tableau(const AlcoveTableau& t, TableauInversion& trace);

/// Permutation of 1..N whose inversion table (entry i counts smaller values to the right of i) is b.
/// Throws InvariantError when b_i >= i.
std::vector<std::int64_t> permutation_from_inversion_table(const std::vector<std::int64_t>& b);

/// Transpose of the staircase: k(i,j) -> k(N+1-j, N+1-i).
AlcoveTableau conjugate(const AlcoveTableau& t);
bool is_self_conjugate(const AlcoveTableau& t);

/// r(i,j) = min(m, k(i,j)).
RegionTableau region_from_alcove(const AlcoveTableau& t, std::int64_t m);

/// Tableau of the m-minimal alcove of the region, built by increasing root height:
/// k(i,i) = r(i,i), k(i,j) = max(r(i,j), max_l k(i,l) + k(l+1,j)).
AlcoveTableau alcove_from_region(const RegionTableau& r);

/// Fixed-width staircase, one row per line.
std::string render_ascii(const Staircase& s);

}  // namespace shibij

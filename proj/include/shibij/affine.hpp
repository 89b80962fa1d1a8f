#pragma once

// Base-level arithmetic for windows of affine type-A permutations.
//
// An integer a is written r^l with a = r + n*l and r in {1, ..., n}. Note the
// one-indexed residue: multiples of n have base n, e.g. 8 = 4^1 for n = 4.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shibij {

struct BaseLevel {
    std::int64_t base = 1;
    std::int64_t level = 0;

    friend bool operator==(const BaseLevel&, const BaseLevel&) = default;
};

/// r + n*l, overflow-checked.
std::int64_t value_of(BaseLevel entry, std::int64_t n);

/// Splits a value into base in 1..n and level. Throws DomainError if n < 1.
BaseLevel decode(std::int64_t value, std::int64_t n);

/// Residue class of a value, one-indexed.
std::int64_t residue(std::int64_t value, std::int64_t n);

/// n consecutive window values of a Z-permutation; residues are pairwise distinct.
class Window {
public:
    explicit Window(std::vector<std::int64_t> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const std::int64_t> values() const noexcept { return values_; }

    friend bool operator==(const Window&, const Window&) = default;

private:
    std::vector<std::int64_t> values_;
};

/// (beta_1, ..., beta_n): beta_i is the level carried by base i.
class LevelVector {
public:
    explicit LevelVector(std::vector<std::int64_t> beta);

    std::size_t size() const noexcept { return beta_.size(); }
    std::int64_t operator[](std::size_t i) const { return beta_.at(i); }
    std::span<const std::int64_t> values() const noexcept { return beta_; }
    std::int64_t sum() const;

    friend bool operator==(const LevelVector&, const LevelVector&) = default;
    friend auto operator<=>(const LevelVector&, const LevelVector&) = default;

private:
    std::vector<std::int64_t> beta_;
};

/// Sorted base window of a minimal-length coset representative, i.e. a
/// dominant alcove. Values strictly increase, bases form a permutation of
/// 1..n and levels sum to zero.
class Abacus {
public:
    /// Validates the three invariants; throws InvariantError naming the first one broken.
    static Abacus from_values(std::vector<std::int64_t> values);
    static Abacus from_entries(std::span<const BaseLevel> entries);
    static Abacus identity(std::size_t n);

    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const BaseLevel> entries() const noexcept { return entries_; }
    const BaseLevel& operator[](std::size_t i) const { return entries_.at(i); }
    std::vector<std::int64_t> values() const;

    friend bool operator==(const Abacus&, const Abacus&) = default;

private:
    explicit Abacus(std::vector<BaseLevel> entries) : entries_(std::move(entries)) {}
    std::vector<BaseLevel> entries_;
};

/// Sorted k-shift of an abacus. Same shape as Abacus but the levels may sum
/// to anything; origin_shift records the k that produced it.
class ShiftedWindow {
public:
    static ShiftedWindow from_values(std::vector<std::int64_t> values, std::int64_t origin_shift);

    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const BaseLevel> entries() const noexcept { return entries_; }
    std::int64_t origin_shift() const noexcept { return origin_shift_; }
    std::int64_t level_sum() const;

    friend bool operator==(const ShiftedWindow&, const ShiftedWindow&) = default;

private:
    ShiftedWindow(std::vector<BaseLevel> entries, std::int64_t shift)
        : entries_(std::move(entries)), origin_shift_(shift) {}
    std::vector<BaseLevel> entries_;
    std::int64_t origin_shift_ = 0;
};

LevelVector level_vector(const Abacus& a);
LevelVector level_vector(const ShiftedWindow& s);

/// Entries {i^beta_i} in increasing order. Throws InvariantError if sum(beta) != 0.
Abacus abacus_from_level_vector(const LevelVector& v);

/// The constant c making sum(values + c) = n(n+1)/2. Residues must be distinct.
std::int64_t rebase_shift(std::span<const std::int64_t> values);

/// Sorted base window obtained by adding rebase_shift(values) to every value.
Abacus rebase(std::span<const std::int64_t> values);
Abacus rebase(const Window& w);

/// Adds k to every window value and re-decodes.
ShiftedWindow k_shift(const Abacus& a, std::int64_t k);

/// Sorted {r^a, (2n+1-r)^(-a)} over the entries of s, as an abacus of length 2n.
Abacus antisymmetric_expansion(const ShiftedWindow& s);

/// True iff base(i) + base(2n+1-i) = 2n+1 and level(i) + level(2n+1-i) = 0 for all i.
/// Throws DomainError on odd length.
bool is_balanced(const Abacus& a);

/// "[5^-2,2^-1,4^0,3^1,1^2]"
std::string to_string(const Abacus& a);
std::string to_string(const ShiftedWindow& s);

/// Parses the notation produced by to_string. n is the number of entries.
Abacus parse_abacus(std::string_view text);

}  // namespace shibij

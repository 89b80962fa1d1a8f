#pragma once

// The bijection between pairs (type A region, index 1..mn+1) and type C_n
// regions of the m-Shi arrangements, carried out on abaci.

#include "shibij/affine.hpp"
#include "shibij/tableau.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace shibij {

/// Antisymmetric expansion of the k-shift of w. Always balanced.
Abacus psi(const Abacus& w, std::int64_t k);

struct PsiPreimage {
    Abacus w;
    std::int64_t k = 0;
};

/// Recovers (w, k) from a balanced abacus of length 2n. Throws DomainError when unbalanced.
PsiPreimage psi_inverse(const Abacus& wbar);

/// The mn+1 shifts k for which psi(w, k) is m-minimal, sorted.
struct AdmissibleSet {
    std::int64_t n = 0;
    std::int64_t m = 0;
    Abacus w = Abacus::identity(1);
    std::vector<std::int64_t> ks;

    /// k_i for i in 1..mn+1; throws DomainError otherwise.
    std::int64_t at(std::int64_t i) const;
    /// One-based sorted position of k, if present.
    std::optional<std::int64_t> index_of(std::int64_t k) const;
};

/// Throws DomainError when w is not m-minimal.
AdmissibleSet admissible_set(const Abacus& w, std::int64_t m);

/// psi(w, k_i). Throws DomainError for a non-minimal w or i outside 1..mn+1.
Abacus bj1_forward(const Abacus& w, std::int64_t i, std::int64_t m);

struct Bj1Preimage {
    Abacus w;
    std::int64_t i = 0;
    std::int64_t k = 0;
};

/// Throws DomainError when wbar is not a balanced m-minimal abacus.
Bj1Preimage bj1_inverse(const Abacus& wbar, std::int64_t m);

/// First component of bj1_inverse.
Abacus phi(const Abacus& wbar, std::int64_t m);

/// The same maps on region tableaux, passing through minimal alcoves.
RegionTableau bj1_forward(const RegionTableau& r, std::int64_t i);

struct Bj1RegionPreimage {
    RegionTableau region;
    std::int64_t i = 0;
};

Bj1RegionPreimage bj1_inverse(const RegionTableau& r);

}  // namespace shibij

#pragma once

#include "shibij/affine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shibij {

struct Violation {
    std::string description;
    std::vector<std::int64_t> indices;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct MinimalityReport {
    bool minimal = true;
    std::vector<Violation> violations;

    explicit operator bool() const noexcept { return minimal; }
};

/// Level-vector test: beta(i+1) - beta(i) <= m for i < n, and beta(1) - beta(n) - 1 <= m.
/// Throws InvariantError when the vector does not sum to zero.
MinimalityReport is_m_minimal_level(const LevelVector& v, std::int64_t m);

/// The same test read off the sorted abacus. For positions i <= j:
/// base(j) = base(i) + 1 requires l(j) - l(i) <= m, and base(i) = n, base(j) = 1
/// requires l(j) - l(i) - 1 <= m.
MinimalityReport is_m_minimal_abacus(const Abacus& a, std::int64_t m);

/// Type C_n version on a balanced abacus of length 2n. Throws DomainError when unbalanced.
MinimalityReport is_m_minimal_typeC(const Abacus& a, std::int64_t m);

}  // namespace shibij

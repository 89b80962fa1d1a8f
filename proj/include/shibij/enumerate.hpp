#pragma once

#include "shibij/affine.hpp"
#include "shibij/catalan.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace shibij {

struct EnumerationOptions {
    /// Refuse to start when the expected count exceeds this.
    std::uint64_t ceiling = 10'000'000;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned jobs = 0;
};

/// Return false to stop the walk early.
using AbacusVisitor = std::function<bool(const Abacus&)>;

/// m-minimal abaci of length n (dominant regions of the m-Shi arrangement of
/// A_{n-1}), lexicographic in the level vector. Sequential.
void for_each_region_A(std::int64_t n, std::int64_t m, const AbacusVisitor& visit,
                       const EnumerationOptions& opts = {});

/// Balanced m-minimal abaci of length 2n (type C_n), lexicographic in the level vector.
void for_each_region_C(std::int64_t n, std::int64_t m, const AbacusVisitor& visit,
                       const EnumerationOptions& opts = {});

/// Same order as the sequential walks; the search is split across workers by
/// the first level and merged back in order.
std::vector<Abacus> enumerate_regions_A(std::int64_t n, std::int64_t m, const EnumerationOptions& opts = {});
std::vector<Abacus> enumerate_regions_C(std::int64_t n, std::int64_t m, const EnumerationOptions& opts = {});

/// Throws ResourceLimitError when `expected` exceeds the ceiling.
void check_resource_ceiling(const char* what, const BigInt& expected, const EnumerationOptions& opts);

}  // namespace shibij

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace shibij {

using BigInt = boost::multiprecision::cpp_int;

/// Root-system data entering the generalized Catalan product.
struct CatalanParams {
    std::int64_t m = 1;
    std::vector<std::int64_t> exponents;
    std::int64_t coxeter_number = 1;
    std::int64_t rank = 0;

    /// A_{n-1}: exponents 1..n-1, h = n.
    static CatalanParams type_A(std::int64_t n, std::int64_t m);
    /// C_n: exponents 1, 3, ..., 2n-1, h = 2n.
    static CatalanParams type_C(std::int64_t n, std::int64_t m);
};

/// prod_i (e_i + m*h + 1) / (e_i + 1), exact. Throws DomainError on malformed
/// parameters or a non-integral product.
BigInt catalan_general(const CatalanParams& p);

/// Dominant regions of the m-Shi arrangement of A_{n-1}; equals C((m+1)n, n) / (mn+1).
BigInt catalan_A(std::int64_t n, std::int64_t m);

/// Dominant regions of the m-Shi arrangement of C_n; equals C((m+1)n, n).
BigInt catalan_C(std::int64_t n, std::int64_t m);

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace shibij

#include "shibij/catalan.hpp"

#include "shibij/errors.hpp"

namespace shibij {

CatalanParams CatalanParams::type_A(std::int64_t n, std::int64_t m) {
    if (n < 1 || m < 1) {
        throw DomainError("type A Catalan numbers need n >= 1 and m >= 1");
    }
    CatalanParams p;
    p.m = m;
    p.rank = n - 1;
    p.coxeter_number = n;
    for (std::int64_t e = 1; e < n; ++e) {
        p.exponents.push_back(e);
    }
    return p;
}

CatalanParams CatalanParams::type_C(std::int64_t n, std::int64_t m) {
    if (n < 1 || m < 1) {
        throw DomainError("type C Catalan numbers need n >= 1 and m >= 1");
    }
    CatalanParams p;
    p.m = m;
    p.rank = n;
    p.coxeter_number = 2 * n;
    for (std::int64_t i = 1; i <= n; ++i) {
        p.exponents.push_back(2 * i - 1);
    }
    return p;
}

BigInt catalan_general(const CatalanParams& p) {
    if (p.m < 1 || p.coxeter_number < 1 || p.rank < 0) {
        throw DomainError("Catalan parameters need m >= 1, h >= 1, rank >= 0");
    }
    if (static_cast<std::int64_t>(p.exponents.size()) != p.rank) {
        throw DomainError("number of exponents must equal the rank");
    }
    BigInt numerator = 1;
    BigInt denominator = 1;
    const BigInt mh = BigInt(p.m) * p.coxeter_number;
    for (auto e : p.exponents) {
        if (e < 0) {
            throw DomainError("exponents must be nonnegative");
        }
        numerator *= BigInt(e) + mh + 1;
        denominator *= BigInt(e) + 1;
    }
    if (numerator % denominator != 0) {
        throw DomainError("Catalan product is not an integer; exponents or Coxeter number are inconsistent");
    }
    return numerator / denominator;
}

BigInt catalan_A(std::int64_t n, std::int64_t m) {
    return catalan_general(CatalanParams::type_A(n, m));
}

BigInt catalan_C(std::int64_t n, std::int64_t m) {
    return catalan_general(CatalanParams::type_C(n, m));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

}  // namespace shibij

#include "shibij/enumerate.hpp"

#include "shibij/errors.hpp"
#include "shibij/minimality.hpp"
#include "shibij/parallel.hpp"

#include <algorithm>

namespace shibij {

namespace {

void require_params(std::int64_t n, std::int64_t m) {
    if (n < 1) {
        throw DomainError("n must be at least 1");
    }
    if (m < 1) {
        throw DomainError("m must be at least 1");
    }
    if (n > 1'000'000 || m > 1'000'000) {
        throw DomainError("n and m are limited to 10^6");
    }
}

// Level vectors with consecutive rises at most m, the wrap condition and zero
// sum. Every coordinate lies in [-B, B] with B = (n-1)m + 1.
class WalkA {
public:
    WalkA(std::int64_t n, std::int64_t m, const AbacusVisitor& visit)
        : n_(n), m_(m), bound_((n - 1) * m + 1), visit_(visit), beta_(static_cast<std::size_t>(n)) {}

    std::int64_t bound() const { return bound_; }

    /// Walks every vector with beta_1 = first. Returns false if the visitor stopped.
    bool run(std::int64_t first) {
        beta_[0] = first;
        return extend(1, first);
    }

private:
    bool extend(std::size_t depth, std::int64_t sum) {
        const auto n = static_cast<std::size_t>(n_);
        const auto last = beta_[depth - 1];
        if (depth == n) {
            if (sum != 0 || beta_[0] - beta_[n - 1] - 1 > m_) {
                return true;
            }
            return visit_(abacus_from_level_vector(LevelVector(beta_)));
        }
        const auto remaining = static_cast<std::int64_t>(n - depth);
        if (remaining == 1) {
            const auto v = -sum;
            if (v < -bound_ || v > std::min(bound_, last + m_)) {
                return true;
            }
            beta_[depth] = v;
            return extend(depth + 1, 0);
        }
        std::int64_t reach = 0;
        for (std::int64_t j = 1; j <= remaining; ++j) {
            reach += std::min(bound_, last + j * m_);
        }
        if (-sum > reach || -sum < -remaining * bound_) {
            return true;
        }
        const auto hi = std::min(bound_, last + m_);
        for (auto v = -bound_; v <= hi; ++v) {
            beta_[depth] = v;
            if (!extend(depth + 1, sum + v)) {
                return false;
            }
        }
        return true;
    }

    std::int64_t n_;
    std::int64_t m_;
    std::int64_t bound_;
    const AbacusVisitor& visit_;
    std::vector<std::int64_t> beta_;
};

// Lower half (beta_1, ..., beta_n) of an antisymmetric level vector of length 2n.
// The full test reduces to rises at most m, 2 beta_1 - 1 <= m and -2 beta_n <= m.
class WalkC {
public:
    WalkC(std::int64_t n, std::int64_t m, const AbacusVisitor& visit)
        : n_(n), m_(m), visit_(visit), beta_(static_cast<std::size_t>(n)) {}

    std::int64_t first_low() const { return low(1); }
    std::int64_t first_high() const { return (m_ + 1) / 2; }

    bool run(std::int64_t first) {
        beta_[0] = first;
        return extend(1);
    }

private:
    // beta_j >= beta_n - (n-j)m >= -floor(m/2) - (n-j)m
    std::int64_t low(std::int64_t j) const { return -(m_ / 2) - (n_ - j) * m_; }

    bool extend(std::size_t depth) {
        const auto n = static_cast<std::size_t>(n_);
        if (depth == n) {
            std::vector<std::int64_t> full(beta_);
            for (std::size_t i = n; i-- > 0;) {
                full.push_back(-beta_[i]);
            }
            LevelVector v(std::move(full));
            if (!is_m_minimal_level(v, m_).minimal) {
                throw InternalError("type C walk produced a non-minimal level vector");
            }
            return visit_(abacus_from_level_vector(v));
        }
        const auto hi = beta_[depth - 1] + m_;
        for (auto v = low(static_cast<std::int64_t>(depth) + 1); v <= hi; ++v) {
            beta_[depth] = v;
            if (!extend(depth + 1)) {
                return false;
            }
        }
        return true;
    }

    std::int64_t n_;
    std::int64_t m_;
    const AbacusVisitor& visit_;
    std::vector<std::int64_t> beta_;
};

template <class Walk>
std::vector<Abacus> collect_by_first(std::int64_t n, std::int64_t m, std::int64_t lo, std::int64_t hi,
                                     const EnumerationOptions& opts) {
    const auto tasks = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<Abacus>> parts(tasks);
    parallel_for(tasks, opts.jobs, [&](std::size_t t) {
        auto& out = parts[t];
        AbacusVisitor visit = [&out](const Abacus& a) {
            out.push_back(a);
            return true;
        };
        Walk walk(n, m, visit);
        walk.run(lo + static_cast<std::int64_t>(t));
    });
    std::vector<Abacus> all;
    for (auto& part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    return all;
}

}  // namespace

void check_resource_ceiling(const char* what, const BigInt& expected, const EnumerationOptions& opts) {
    if (expected > opts.ceiling) {
        throw ResourceLimitError(std::string(what) + ": expected " + expected.str() +
                                 " objects, above the ceiling of " + std::to_string(opts.ceiling));
    }
}

void for_each_region_A(std::int64_t n, std::int64_t m, const AbacusVisitor& visit, const EnumerationOptions& opts) {
    require_params(n, m);
    check_resource_ceiling("type A regions", catalan_A(n, m), opts);
    WalkA walk(n, m, visit);
    for (auto first = -walk.bound(); first <= walk.bound(); ++first) {
        if (!walk.run(first)) {
            return;
        }
    }
}

void for_each_region_C(std::int64_t n, std::int64_t m, const AbacusVisitor& visit, const EnumerationOptions& opts) {
    require_params(n, m);
    check_resource_ceiling("type C regions", catalan_C(n, m), opts);
    WalkC walk(n, m, visit);
    for (auto first = walk.first_low(); first <= walk.first_high(); ++first) {
        if (!walk.run(first)) {
            return;
        }
    }
}

std::vector<Abacus> enumerate_regions_A(std::int64_t n, std::int64_t m, const EnumerationOptions& opts) {
    require_params(n, m);
    check_resource_ceiling("type A regions", catalan_A(n, m), opts);
    const auto bound = (n - 1) * m + 1;
    return collect_by_first<WalkA>(n, m, -bound, bound, opts);
}

std::vector<Abacus> enumerate_regions_C(std::int64_t n, std::int64_t m, const EnumerationOptions& opts) {
    require_params(n, m);
    check_resource_ceiling("type C regions", catalan_C(n, m), opts);
    const auto lo = -(m / 2) - (n - 1) * m;
    const auto hi = (m + 1) / 2;
    return collect_by_first<WalkC>(n, m, lo, hi, opts);
}

}  // namespace shibij

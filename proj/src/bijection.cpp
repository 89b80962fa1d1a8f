#include "shibij/bijection.hpp"

#include "shibij/errors.hpp"
#include "shibij/minimality.hpp"

#include <algorithm>

namespace shibij {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

Abacus psi(const Abacus& w, std::int64_t k) {
    return antisymmetric_expansion(k_shift(w, k));
}

PsiPreimage psi_inverse(const Abacus& wbar) {
    if (wbar.size() % 2 != 0 || !is_balanced(wbar)) {
        throw DomainError("psi inverse needs a balanced abacus of even length");
    }
    const auto n = static_cast<std::int64_t>(wbar.size() / 2);
    const auto full = level_vector(wbar);
    const std::vector<std::int64_t> beta(full.values().begin(), full.values().begin() + n);

    std::int64_t k = 0;
    for (auto b : beta) {
        k = checked_add(k, b);
    }
    const auto r = detail::mod_nonneg(-k, n);
    const auto l = -checked_add(k, r) / n;

    // (beta_{n-r+1}+l+1, ..., beta_n+l+1, beta_1+l, ..., beta_{n-r}+l)
    std::vector<std::int64_t> levels;
    levels.reserve(static_cast<std::size_t>(n));
    for (auto i = n - r; i < n; ++i) {
        levels.push_back(checked_add(beta[static_cast<std::size_t>(i)], l + 1));
    }
    for (std::int64_t i = 0; i < n - r; ++i) {
        levels.push_back(checked_add(beta[static_cast<std::size_t>(i)], l));
    }
    PsiPreimage out{abacus_from_level_vector(LevelVector(std::move(levels))), k};
    if (!(psi(out.w, k) == wbar)) {
        throw InternalError("psi inverse failed to reproduce " + to_string(wbar));
    }
    return out;
}

std::int64_t AdmissibleSet::at(std::int64_t i) const {
    if (i < 1 || i > static_cast<std::int64_t>(ks.size())) {
        throw DomainError("index " + std::to_string(i) + " outside 1.." + std::to_string(ks.size()));
    }
    return ks[static_cast<std::size_t>(i - 1)];
}

std::optional<std::int64_t> AdmissibleSet::index_of(std::int64_t k) const {
    const auto it = std::lower_bound(ks.begin(), ks.end(), k);
    if (it == ks.end() || *it != k) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(it - ks.begin()) + 1;
}

AdmissibleSet admissible_set(const Abacus& w, std::int64_t m) {
    const auto report = is_m_minimal_abacus(w, m);
    if (!report.minimal) {
        throw DomainError(to_string(w) + " is not " + std::to_string(m) + "-minimal: " +
                          report.violations.front().description);
    }
    const auto n = static_cast<std::int64_t>(w.size());
    const auto beta = level_vector(w);
    auto b = [&](std::int64_t i) { return beta[static_cast<std::size_t>(i - 1)]; };

    AdmissibleSet out;
    out.n = n;
    out.m = m;
    out.w = w;
    auto add_range = [&](std::int64_t r, std::int64_t lo, std::int64_t hi) {
        for (auto l = lo; l <= hi; ++l) {
            out.ks.push_back(checked_add(r, checked_mul(n, l)));
        }
    };
    add_range(0, checked_sub(-(m / 2), b(n)), checked_sub((m + 1) / 2, b(1)));
    for (std::int64_t r = 1; r < n; ++r) {
        add_range(r, checked_sub(-b(n - r), m / 2), checked_add(-b(n - r + 1), (m - 1) / 2));
    }
    std::sort(out.ks.begin(), out.ks.end());
    if (static_cast<std::int64_t>(out.ks.size()) != checked_add(checked_mul(m, n), 1)) {
        throw InternalError("admissible set of " + to_string(w) + " has " + std::to_string(out.ks.size()) +
                            " elements, expected mn+1");
    }
    return out;
}

Abacus bj1_forward(const Abacus& w, std::int64_t i, std::int64_t m) {
    return psi(w, admissible_set(w, m).at(i));
}

Bj1Preimage bj1_inverse(const Abacus& wbar, std::int64_t m) {
    if (wbar.size() % 2 != 0) {
        throw DomainError("type C abacus must have even length");
    }
    const auto report = is_m_minimal_typeC(wbar, m);
    if (!report.minimal) {
        throw DomainError(to_string(wbar) + " is not " + std::to_string(m) + "-minimal: " +
                          report.violations.front().description);
    }
    auto [w, k] = psi_inverse(wbar);
    const auto admissible = admissible_set(w, m);
    const auto i = admissible.index_of(k);
    if (!i) {
        throw DomainError("shift " + std::to_string(k) + " is not admissible for " + to_string(w));
    }
    return {std::move(w), *i, k};
}

Abacus phi(const Abacus& wbar, std::int64_t m) {
    return bj1_inverse(wbar, m).w;
}

RegionTableau bj1_forward(const RegionTableau& r, std::int64_t i) {
    const auto w = abacus_from_tableau(alcove_from_region(r));
    return region_from_alcove(tableau_from_abacus(bj1_forward(w, i, r.m())), r.m());
}

Bj1RegionPreimage bj1_inverse(const RegionTableau& r) {
    if (r.rank() % 2 == 0) {
        throw DomainError("type C region tableau must have odd rank");
    }
    const auto alcove = alcove_from_region(r);
    if (!is_self_conjugate(alcove)) {
        throw DomainError("type C region tableau must be self-conjugate");
    }
    const auto pre = bj1_inverse(abacus_from_tableau(alcove), r.m());
    return {region_from_alcove(tableau_from_abacus(pre.w), r.m()), pre.i};
}

}  // namespace shibij

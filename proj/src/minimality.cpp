#include "shibij/minimality.hpp"

#include "shibij/errors.hpp"

namespace shibij {

namespace {

void require_positive_m(std::int64_t m) {
    if (m < 1) {
        throw DomainError("m must be positive");
    }
}

}  // namespace

MinimalityReport is_m_minimal_level(const LevelVector& v, std::int64_t m) {
    require_positive_m(m);
    if (v.sum() != 0) {
        throw InvariantError("level vector must sum to 0");
    }
    MinimalityReport report;
    const auto n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto step = detail::checked_sub(v[i + 1], v[i]);
        if (step > m) {
            report.violations.push_back(
                {"beta(" + std::to_string(i + 2) + ") - beta(" + std::to_string(i + 1) + ") = " +
                     std::to_string(step) + " > m",
                 {static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(i + 2)}});
        }
    }
    const auto wrap = detail::checked_sub(detail::checked_sub(v[0], v[n - 1]), 1);
    if (wrap > m) {
        report.violations.push_back({"beta(1) - beta(n) - 1 = " + std::to_string(wrap) + " > m",
                                     {1, static_cast<std::int64_t>(n)}});
    }
    report.minimal = report.violations.empty();
    return report;
}

MinimalityReport is_m_minimal_abacus(const Abacus& a, std::int64_t m) {
    require_positive_m(m);
    MinimalityReport report;
    const auto n = static_cast<std::int64_t>(a.size());
    std::vector<std::size_t> position(a.size() + 1);
    for (std::size_t p = 0; p < a.size(); ++p) {
        position[static_cast<std::size_t>(a[p].base)] = p;
    }
    for (std::int64_t r = 1; r < n; ++r) {
        const auto i = position[static_cast<std::size_t>(r)];
        const auto j = position[static_cast<std::size_t>(r + 1)];
        if (i > j) {
            continue;
        }
        const auto gap = detail::checked_sub(a[j].level, a[i].level);
        if (gap > m) {
            report.violations.push_back(
                {"bases " + std::to_string(r) + "," + std::to_string(r + 1) + " at positions " +
                     std::to_string(i + 1) + "<=" + std::to_string(j + 1) + ": level gap " +
                     std::to_string(gap) + " > m",
                 {static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1)}});
        }
    }
    const auto i = position[static_cast<std::size_t>(n)];
    const auto j = position[1];
    if (i <= j) {
        const auto gap = detail::checked_sub(detail::checked_sub(a[j].level, a[i].level), 1);
        if (gap > m) {
            report.violations.push_back(
                {"base n at position " + std::to_string(i + 1) + ", base 1 at position " +
                     std::to_string(j + 1) + ": level gap minus one " + std::to_string(gap) + " > m",
                 {static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1)}});
        }
    }
    report.minimal = report.violations.empty();
    return report;
}

MinimalityReport is_m_minimal_typeC(const Abacus& a, std::int64_t m) {
    if (!is_balanced(a)) {
        throw DomainError("type C minimality needs a balanced abacus");
    }
    return is_m_minimal_abacus(a, m);
}

}  // namespace shibij

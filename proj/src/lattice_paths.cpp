#include "shibij/lattice_paths.hpp"

#include "shibij/catalan.hpp"
#include "shibij/errors.hpp"

#include <algorithm>

namespace shibij {

using detail::checked_add;
using detail::checked_mul;

namespace {

void require_params(std::int64_t n, std::int64_t m) {
    if (n < 1) {
        throw DomainError("n must be at least 1");
    }
    if (m < 1) {
        throw DomainError("m must be at least 1");
    }
}

bool dyck_steps(const std::vector<std::int64_t>& s, std::int64_t m) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] > m * static_cast<std::int64_t>(i)) {
            return false;
        }
    }
    return true;
}

}  // namespace

LatticePath::LatticePath(std::int64_t n, std::int64_t m, std::vector<std::int64_t> steps)
    : n_(n), m_(m), steps_(std::move(steps)) {
    if (n_ < 1 || m_ < 1) {
        throw InvariantError("lattice path needs n >= 1 and m >= 1");
    }
    if (static_cast<std::int64_t>(steps_.size()) != n_) {
        throw InvariantError("lattice path needs exactly n = " + std::to_string(n_) + " steps, got " +
                             std::to_string(steps_.size()));
    }
    const auto top = checked_mul(m_, n_);
    std::int64_t previous = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i] < previous) {
            throw InvariantError("lattice path steps must be nonnegative and weakly increasing (step " +
                                 std::to_string(i + 1) + ")");
        }
        if (steps_[i] > top) {
            throw InvariantError("lattice path step " + std::to_string(i + 1) + " exceeds mn = " + std::to_string(top));
        }
        previous = steps_[i];
    }
}

bool LatticePath::is_dyck() const {
    return dyck_steps(steps_, m_);
}

DyckPath::DyckPath(LatticePath path) : path_(std::move(path)) {
    if (!path_.is_dyck()) {
        throw InvariantError("Dyck path needs s_i <= m(i-1) for every i");
    }
}

DyckPath::DyckPath(std::int64_t n, std::int64_t m, std::vector<std::int64_t> steps)
    : DyckPath(LatticePath(n, m, std::move(steps))) {}

std::vector<std::int64_t> rotation_steps(const LatticePath& p, std::int64_t t) {
    const auto n = p.n();
    if (t < 0 || t >= n) {
        throw DomainError("rotation index " + std::to_string(t) + " outside 0.." + std::to_string(n - 1));
    }
    const auto lift = p.m() * n + 1;
    const auto pivot = p.step(t + 1);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n));
    for (auto j = t + 1; j <= n; ++j) {
        out.push_back(p.step(j) - pivot);
    }
    for (std::int64_t j = 1; j <= t; ++j) {
        out.push_back(p.step(j) + lift - pivot);
    }
    return out;
}

LatticePath rotate(const LatticePath& p, std::int64_t t) {
    auto steps = rotation_steps(p, t);
    if (steps.back() > p.m() * p.n()) {
        throw DomainError("rotation " + std::to_string(t) + " leaves the rectangle");
    }
    return LatticePath(p.n(), p.m(), std::move(steps));
}

std::int64_t find_dyck_rotation(const LatticePath& p) {
    std::int64_t found = -1;
    int hits = 0;
    for (std::int64_t t = 0; t < p.n(); ++t) {
        if (dyck_steps(rotation_steps(p, t), p.m())) {
            found = t;
            ++hits;
        }
    }
    if (hits != 1) {
        throw InternalError(std::to_string(hits) + " Dyck rotations found, expected exactly one");
    }
    return found;
}

Bj2Image bj2_forward(const LatticePath& p) {
    const auto t = find_dyck_rotation(p);
    return {DyckPath(rotate(p, t)), p.step(t + 1)};
}

LatticePath bj2_inverse(const DyckPath& d, std::int64_t k) {
    const auto n = d.n();
    const auto top = d.m() * n;
    if (k < 0 || k > top) {
        throw DomainError("shift k = " + std::to_string(k) + " outside 0.." + std::to_string(top));
    }
    const auto& s = d.steps();
    std::int64_t j0 = 0;
    for (std::int64_t j = 1; j <= n; ++j) {
        if (s[static_cast<std::size_t>(j - 1)] + k <= top) {
            j0 = j;
        }
    }
    std::vector<std::int64_t> steps;
    steps.reserve(static_cast<std::size_t>(n));
    for (auto j = j0 + 1; j <= n; ++j) {
        steps.push_back(s[static_cast<std::size_t>(j - 1)] + k - top - 1);
    }
    for (std::int64_t j = 1; j <= j0; ++j) {
        steps.push_back(s[static_cast<std::size_t>(j - 1)] + k);
    }
    LatticePath out(n, d.m(), std::move(steps));
    const auto check = bj2_forward(out);
    if (!(check.dyck == d) || check.k != k) {
        throw InternalError("bj2 inverse does not invert the forward map");
    }
    return out;
}

std::vector<std::int64_t> fkt_row_sums(const DyckPath& d) {
    std::vector<std::int64_t> lambda;
    for (auto i = 1; i < d.n(); ++i) {
        lambda.push_back(d.steps()[static_cast<std::size_t>(d.n() - i)]);
    }
    return lambda;
}

namespace {

// Fills a staircase row by row from the bottom. Within a row, cells go left
// to right in j; entries weakly increase along a row.
class RowSumSearch {
public:
    RowSumSearch(const std::vector<std::int64_t>& sums, std::int64_t m, std::size_t limit)
        : sums_(sums), m_(m), limit_(limit), cells_(sums.size()) {}

    std::vector<RegionTableau> run() {
        if (sums_.empty()) {
            found_.emplace_back(Staircase(0), m_);
            return found_;
        }
        row(sums_.size());
        return found_;
    }

private:
    void row(std::size_t i) {
        if (i == 0) {
            found_.emplace_back(cells_, m_);
            return;
        }
        cell(i, i, 0);
    }

    void cell(std::size_t i, std::size_t j, std::int64_t running) {
        if (found_.size() >= limit_) {
            return;
        }
        const auto rank = sums_.size();
        const auto target = sums_[i - 1];
        if (j > rank) {
            if (running == target) {
                row(i - 1);
            }
            return;
        }
        std::int64_t lo = 0;
        std::int64_t hi = m_;
        for (auto l = i; l < j; ++l) {
            const auto parts = cells_.at(i, l) + cells_.at(l + 1, j);
            if (parts >= m_) {
                lo = std::max(lo, m_);
            } else {
                lo = std::max(lo, parts);
                hi = std::min(hi, parts + 1);
            }
        }
        const auto left = static_cast<std::int64_t>(rank - j);
        for (auto v = lo; v <= hi; ++v) {
            const auto sum = running + v;
            if (sum + left * v > target) {
                break;
            }
            if (sum + left * m_ < target) {
                continue;
            }
            cells_.set(i, j, v);
            cell(i, j + 1, sum);
        }
        cells_.set(i, j, 0);
    }

    const std::vector<std::int64_t>& sums_;
    std::int64_t m_;
    std::size_t limit_;
    Staircase cells_;
    std::vector<RegionTableau> found_;
};

}  // namespace

std::vector<RegionTableau> region_tableaux_with_row_sums(const std::vector<std::int64_t>& sums, std::int64_t m,
                                                         std::size_t limit) {
    if (m < 1) {
        throw DomainError("m must be positive");
    }
    return RowSumSearch(sums, m, limit).run();
}

RegionTableau fkt_region(const DyckPath& d) {
    auto found = region_tableaux_with_row_sums(fkt_row_sums(d), d.m(), 2);
    if (found.size() != 1) {
        throw InternalError(std::to_string(found.size()) + " region tableaux match the row sums, expected one");
    }
    return std::move(found.front());
}

DyckPath dyck_from_region(const RegionTableau& r) {
    const auto n = static_cast<std::int64_t>(r.rank()) + 1;
    std::vector<std::int64_t> steps{0};
    for (auto i = r.rank(); i >= 1; --i) {
        steps.push_back(r.cells().row_sum(i));
    }
    return DyckPath(n, r.m(), std::move(steps));
}

std::string to_word(const LatticePath& p) {
    std::string word;
    std::int64_t x = 0;
    for (auto s : p.steps()) {
        word.append(static_cast<std::size_t>(s - x), 'E');
        word.push_back('N');
        x = s;
    }
    word.append(static_cast<std::size_t>(p.m() * p.n() - x), 'E');
    return word;
}

namespace {

bool walk_paths(std::int64_t n, std::int64_t m, bool dyck, std::vector<std::int64_t>& steps,
                const PathVisitor& visit) {
    const auto i = static_cast<std::int64_t>(steps.size());
    if (i == n) {
        return visit(LatticePath(n, m, steps));
    }
    const auto lo = steps.empty() ? 0 : steps.back();
    const auto hi = dyck ? m * i : m * n;
    for (auto v = lo; v <= hi; ++v) {
        steps.push_back(v);
        const bool go_on = walk_paths(n, m, dyck, steps, visit);
        steps.pop_back();
        if (!go_on) {
            return false;
        }
    }
    return true;
}

}  // namespace

void for_each_lattice_path(std::int64_t n, std::int64_t m, const PathVisitor& visit,
                           const EnumerationOptions& opts) {
    require_params(n, m);
    check_resource_ceiling("lattice paths", catalan_C(n, m), opts);
    std::vector<std::int64_t> steps;
    walk_paths(n, m, false, steps, visit);
}

void for_each_dyck_path(std::int64_t n, std::int64_t m, const PathVisitor& visit, const EnumerationOptions& opts) {
    require_params(n, m);
    check_resource_ceiling("Dyck paths", catalan_A(n, m), opts);
    std::vector<std::int64_t> steps;
    walk_paths(n, m, true, steps, visit);
}

std::vector<LatticePath> enumerate_lattice_paths(std::int64_t n, std::int64_t m, const EnumerationOptions& opts) {
    std::vector<LatticePath> out;
    for_each_lattice_path(n, m, [&](const LatticePath& p) {
        out.push_back(p);
        return true;
    }, opts);
    return out;
}

std::vector<DyckPath> enumerate_dyck_paths(std::int64_t n, std::int64_t m, const EnumerationOptions& opts) {
    std::vector<DyckPath> out;
    for_each_dyck_path(n, m, [&](const LatticePath& p) {
        out.emplace_back(p);
        return true;
    }, opts);
    return out;
}

}  // namespace shibij

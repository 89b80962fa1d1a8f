#include "shibij/tableau.hpp"

#include "shibij/errors.hpp"

#include <algorithm>
#include <sstream>

namespace shibij {

using detail::checked_add;

Staircase::Staircase(std::size_t rank) : rank_(rank), cells_(rank * (rank + 1) / 2, 0) {}

Staircase Staircase::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    Staircase s(rows.size());
    for (std::size_t i = 1; i <= s.rank_; ++i) {
        const auto& row = rows[i - 1];
        if (row.size() != s.rank_ + 1 - i) {
            throw InvariantError("staircase row " + std::to_string(i) + " must have " +
                                 std::to_string(s.rank_ + 1 - i) + " entries");
        }
        // row = (k(i,rank), ..., k(i,i))
        for (std::size_t c = 0; c < row.size(); ++c) {
            s.set(i, s.rank_ - c, row[c]);
        }
    }
    return s;
}

std::size_t Staircase::index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > j || j > rank_) {
        throw std::out_of_range("staircase cell (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside rank " + std::to_string(rank_));
    }
    // rows 1..i-1 hold rank, rank-1, ... cells
    const auto before = (i - 1) * rank_ - (i - 1) * (i - 2) / 2;
    return before + (j - i);
}

std::int64_t Staircase::at(std::size_t i, std::size_t j) const {
    return cells_[index(i, j)];
}

void Staircase::set(std::size_t i, std::size_t j, std::int64_t value) {
    cells_[index(i, j)] = value;
}

std::vector<std::vector<std::int64_t>> Staircase::rows() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(rank_);
    for (std::size_t i = 1; i <= rank_; ++i) {
        std::vector<std::int64_t> row;
        for (std::size_t j = rank_; j >= i; --j) {
            row.push_back(at(i, j));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::int64_t Staircase::row_sum(std::size_t i) const {
    std::int64_t s = 0;
    for (std::size_t j = i; j <= rank_; ++j) {
        s = checked_add(s, at(i, j));
    }
    return s;
}

std::int64_t Staircase::total() const {
    std::int64_t s = 0;
    for (auto v : cells_) {
        s = checked_add(s, v);
    }
    return s;
}

bool check_alcove_shi(const Staircase& s) {
    const auto n = s.rank();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            if (s.at(i, j) < 0) {
                return false;
            }
            for (std::size_t l = i; l < j; ++l) {
                const auto delta = s.at(i, j) - s.at(i, l) - s.at(l + 1, j);
                if (delta != 0 && delta != 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_region_shi(const Staircase& s, std::int64_t m) {
    if (m < 1) {
        return false;
    }
    const auto n = s.rank();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            const auto v = s.at(i, j);
            if (v < 0 || v > m) {
                return false;
            }
            for (std::size_t l = i; l < j; ++l) {
                const auto parts = s.at(i, l) + s.at(l + 1, j);
                if (parts < m) {
                    const auto delta = v - parts;
                    if (delta != 0 && delta != 1) {
                        return false;
                    }
                } else if (v != m) {
                    return false;
                }
            }
        }
    }
    return true;
}

AlcoveTableau::AlcoveTableau(Staircase cells) : cells_(std::move(cells)) {
    if (!check_alcove_shi(cells_)) {
        throw InvariantError("tableau violates the alcove Shi conditions");
    }
}

AlcoveTableau AlcoveTableau::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    return AlcoveTableau(Staircase::from_rows(rows));
}

AlcoveTableau AlcoveTableau::zero(std::size_t rank) {
    return AlcoveTableau(Staircase(rank));
}

RegionTableau::RegionTableau(Staircase cells, std::int64_t m) : cells_(std::move(cells)), m_(m) {
    if (m_ < 1) {
        throw InvariantError("region tableau needs m >= 1");
    }
    if (!check_region_shi(cells_, m_)) {
        throw InvariantError("tableau violates the region Shi conditions for m = " + std::to_string(m_));
    }
}

RegionTableau RegionTableau::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t m) {
    return RegionTableau(Staircase::from_rows(rows), m);
}

TypeCTableau::TypeCTableau(AlcoveTableau inner) : inner_(std::move(inner)) {
    if (inner_.rank() % 2 == 0) {
        throw InvariantError("type C tableau must have odd rank 2n-1");
    }
    if (!is_self_conjugate(inner_)) {
        throw InvariantError("type C tableau must be self-conjugate");
    }
}

AlcoveTableau tableau_from_abacus(const Abacus& a) {
    const auto rank = a.size() - 1;
    Staircase s(rank);
    for (std::size_t i = 1; i <= rank; ++i) {
        const auto& lo = a[i - 1];
        for (std::size_t j = i; j <= rank; ++j) {
            const auto& hi = a[j];
            auto k = hi.level - lo.level;
            if (lo.base > hi.base) {
                --k;
            }
            s.set(i, j, k);
        }
    }
    return AlcoveTableau(std::move(s));
}

std::vector<std::int64_t> permutation_from_inversion_table(const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> sigma;
    sigma.reserve(b.size());
    for (std::size_t idx = 0; idx < b.size(); ++idx) {
        const auto value = static_cast<std::int64_t>(idx + 1);
        const auto right = b[idx];
        if (right < 0 || right > static_cast<std::int64_t>(idx)) {
            throw InvariantError("inversion table entry b_" + std::to_string(idx + 1) + " = " +
                                 std::to_string(right) + " out of range");
        }
        // Every value already placed is smaller than the one being inserted.
        const auto pos = sigma.size() - static_cast<std::size_t>(right);
        sigma.insert(sigma.begin() + static_cast<std::ptrdiff_t>(pos), value);
    }
    return sigma;
}

Abacus abacus_from_tableau(const AlcoveTableau& t) {
    TableauInversion trace;
    return abacus_from_tableau(t, trace);
}

Abacus abacus_from_tableau(const AlcoveTableau& t, TableauInversion& trace) {
    const auto rank = t.rank();
    const auto n = static_cast<std::int64_t>(rank + 1);

    trace.b.assign(rank, 0);
    for (std::size_t j = 1; j <= rank; ++j) {
        std::int64_t count = 0;
        for (std::size_t l = 1; l < j; ++l) {
            if (t.at(1, j) == t.at(1, l) + t.at(l + 1, j) + 1) {
                ++count;
            }
        }
        trace.b[j - 1] = count;
    }
    trace.sigma = permutation_from_inversion_table(trace.b);

    // Base 0 sits at level 0; base i carries level k(1, sigma(i)).
    std::vector<std::int64_t> normalized{0};
    for (std::size_t i = 1; i <= rank; ++i) {
        const auto level = t.at(1, static_cast<std::size_t>(trace.sigma[i - 1]));
        normalized.push_back(checked_add(static_cast<std::int64_t>(i), detail::checked_mul(n, level)));
    }
    std::sort(normalized.begin(), normalized.end());
    trace.normalized_window = normalized;
    trace.shift = rebase_shift(normalized);

    auto abacus = rebase(normalized);
    if (!(tableau_from_abacus(abacus) == t)) {
        throw InternalError("tableau-to-abacus reconstruction does not invert the forward map");
    }
    return abacus;
}

AlcoveTableau conjugate(const AlcoveTableau& t) {
    const auto n = t.rank();
    Staircase s(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            s.set(i, j, t.at(n + 1 - j, n + 1 - i));
        }
    }
    return AlcoveTableau(std::move(s));
}

bool is_self_conjugate(const AlcoveTableau& t) {
    const auto n = t.rank();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            if (t.at(i, j) != t.at(n + 1 - j, n + 1 - i)) {
                return false;
            }
        }
    }
    return true;
}

RegionTableau region_from_alcove(const AlcoveTableau& t, std::int64_t m) {
    if (m < 1) {
        throw DomainError("m must be positive");
    }
    const auto n = t.rank();
    Staircase s(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            s.set(i, j, std::min(m, t.at(i, j)));
        }
    }
    return RegionTableau(std::move(s), m);
}

AlcoveTableau alcove_from_region(const RegionTableau& r) {
    const auto n = r.rank();
    Staircase k(n);
    for (std::size_t height = 0; height < n; ++height) {
        for (std::size_t i = 1; i + height <= n; ++i) {
            const auto j = i + height;
            auto best = r.at(i, j);
            for (std::size_t l = i; l < j; ++l) {
                best = std::max(best, checked_add(k.at(i, l), k.at(l + 1, j)));
            }
            k.set(i, j, best);
        }
    }
    return AlcoveTableau(std::move(k));
}

std::string render_ascii(const Staircase& s) {
    std::size_t width = 1;
    for (const auto& row : s.rows()) {
        for (auto v : row) {
            width = std::max(width, std::to_string(v).size());
        }
    }
    std::ostringstream os;
    for (const auto& row : s.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            auto text = std::to_string(row[c]);
            if (c) {
                os << ' ';
            }
            os << std::string(width - text.size(), ' ') << text;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace shibij

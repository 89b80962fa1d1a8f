#include "shibij/affine.hpp"

#include "shibij/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace shibij {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

std::int64_t as_modulus(std::size_t n) {
    return static_cast<std::int64_t>(n);
}

void require_distinct_residues(std::span<const std::int64_t> values) {
    const auto n = as_modulus(values.size());
    if (n == 0) {
        throw InvariantError("window must be non-empty");
    }
    std::vector<bool> seen(values.size() + 1, false);
    for (auto v : values) {
        auto r = static_cast<std::size_t>(residue(v, n));
        if (seen[r]) {
            throw InvariantError("window residues must be distinct mod n (residue " +
                                 std::to_string(r) + " repeats)");
        }
        seen[r] = true;
    }
}

void require_strictly_increasing(std::span<const std::int64_t> values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i - 1] >= values[i]) {
            throw InvariantError("abacus values must be strictly increasing");
        }
    }
}

std::vector<BaseLevel> decode_all(std::span<const std::int64_t> values) {
    const auto n = as_modulus(values.size());
    std::vector<BaseLevel> out;
    out.reserve(values.size());
    for (auto v : values) {
        out.push_back(decode(v, n));
    }
    return out;
}

std::vector<std::int64_t> encode_all(std::span<const BaseLevel> entries, std::int64_t n) {
    std::vector<std::int64_t> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        out.push_back(value_of(e, n));
    }
    return out;
}

std::string render(std::span<const BaseLevel> entries) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << entries[i].base << '^' << entries[i].level;
    }
    os << ']';
    return os.str();
}

}  // namespace

std::int64_t value_of(BaseLevel entry, std::int64_t n) {
    return checked_add(entry.base, checked_mul(n, entry.level));
}

std::int64_t residue(std::int64_t value, std::int64_t n) {
    if (n < 1) {
        throw DomainError("modulus must be positive");
    }
    return detail::mod_nonneg(checked_sub(value, 1), n) + 1;
}

BaseLevel decode(std::int64_t value, std::int64_t n) {
    const auto r = residue(value, n);
    return {r, checked_sub(value, r) / n};
}

Window::Window(std::vector<std::int64_t> values) : values_(std::move(values)) {
    require_distinct_residues(values_);
}

LevelVector::LevelVector(std::vector<std::int64_t> beta) : beta_(std::move(beta)) {
    if (beta_.empty()) {
        throw InvariantError("level vector must be non-empty");
    }
}

std::int64_t LevelVector::sum() const {
    std::int64_t s = 0;
    for (auto b : beta_) {
        s = checked_add(s, b);
    }
    return s;
}

Abacus Abacus::from_values(std::vector<std::int64_t> values) {
    require_distinct_residues(values);
    require_strictly_increasing(values);
    auto entries = decode_all(values);
    std::int64_t level_sum = 0;
    for (const auto& e : entries) {
        level_sum = checked_add(level_sum, e.level);
    }
    if (level_sum != 0) {
        throw InvariantError("abacus levels must sum to 0 (got " + std::to_string(level_sum) + ")");
    }
    return Abacus(std::move(entries));
}

Abacus Abacus::from_entries(std::span<const BaseLevel> entries) {
    const auto n = as_modulus(entries.size());
    for (const auto& e : entries) {
        if (e.base < 1 || e.base > n) {
            throw InvariantError("abacus base " + std::to_string(e.base) + " outside 1.." +
                                 std::to_string(n));
        }
    }
    return from_values(encode_all(entries, n));
}

Abacus Abacus::identity(std::size_t n) {
    std::vector<std::int64_t> values(n);
    std::iota(values.begin(), values.end(), 1);
    return from_values(std::move(values));
}

std::vector<std::int64_t> Abacus::values() const {
    return encode_all(entries_, as_modulus(entries_.size()));
}

ShiftedWindow ShiftedWindow::from_values(std::vector<std::int64_t> values, std::int64_t origin_shift) {
    require_distinct_residues(values);
    require_strictly_increasing(values);
    return ShiftedWindow(decode_all(values), origin_shift);
}

std::int64_t ShiftedWindow::level_sum() const {
    std::int64_t s = 0;
    for (const auto& e : entries_) {
        s = checked_add(s, e.level);
    }
    return s;
}

namespace {

LevelVector levels_by_base(std::span<const BaseLevel> entries) {
    std::vector<std::int64_t> beta(entries.size(), 0);
    for (const auto& e : entries) {
        beta[static_cast<std::size_t>(e.base - 1)] = e.level;
    }
    return LevelVector(std::move(beta));
}

}  // namespace

LevelVector level_vector(const Abacus& a) {
    return levels_by_base(a.entries());
}

LevelVector level_vector(const ShiftedWindow& s) {
    return levels_by_base(s.entries());
}

Abacus abacus_from_level_vector(const LevelVector& v) {
    if (v.sum() != 0) {
        throw InvariantError("level vector must sum to 0 to describe a coset representative");
    }
    const auto n = as_modulus(v.size());
    std::vector<std::int64_t> values;
    values.reserve(v.size());
    for (std::int64_t i = 0; i < n; ++i) {
        values.push_back(value_of({i + 1, v[static_cast<std::size_t>(i)]}, n));
    }
    std::sort(values.begin(), values.end());
    return Abacus::from_values(std::move(values));
}

std::int64_t rebase_shift(std::span<const std::int64_t> values) {
    require_distinct_residues(values);
    const auto n = as_modulus(values.size());
    std::int64_t total = 0;
    for (auto v : values) {
        total = checked_add(total, v);
    }
    const auto target = checked_mul(n, n + 1) / 2;
    const auto diff = checked_sub(target, total);
    // Distinct residues force total == target (mod n).
    if (diff % n != 0) {
        throw InternalError("rebase: residue sum is not congruent to n(n+1)/2");
    }
    return diff / n;
}

Abacus rebase(std::span<const std::int64_t> values) {
    const auto shift = rebase_shift(values);
    std::vector<std::int64_t> shifted;
    shifted.reserve(values.size());
    for (auto v : values) {
        shifted.push_back(checked_add(v, shift));
    }
    std::sort(shifted.begin(), shifted.end());
    return Abacus::from_values(std::move(shifted));
}

Abacus rebase(const Window& w) {
    return rebase(w.values());
}

ShiftedWindow k_shift(const Abacus& a, std::int64_t k) {
    auto values = a.values();
    for (auto& v : values) {
        v = checked_add(v, k);
    }
    return ShiftedWindow::from_values(std::move(values), k);
}

Abacus antisymmetric_expansion(const ShiftedWindow& s) {
    const auto n = as_modulus(s.size());
    const auto two_n = checked_mul(2, n);
    std::vector<std::int64_t> values;
    values.reserve(2 * s.size());
    for (const auto& e : s.entries()) {
        values.push_back(value_of({e.base, e.level}, two_n));
        values.push_back(value_of({two_n + 1 - e.base, -e.level}, two_n));
    }
    std::sort(values.begin(), values.end());
    return Abacus::from_values(std::move(values));
}

bool is_balanced(const Abacus& a) {
    const auto len = a.size();
    if (len % 2 != 0) {
        throw DomainError("balance is only defined for abacuses of even length");
    }
    const auto target = as_modulus(len) + 1;
    for (std::size_t i = 0; i < len / 2; ++i) {
        const auto& lo = a[i];
        const auto& hi = a[len - 1 - i];
        if (lo.base + hi.base != target || lo.level + hi.level != 0) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Abacus& a) {
    return render(a.entries());
}

std::string to_string(const ShiftedWindow& s) {
    return render(s.entries());
}

Abacus parse_abacus(std::string_view text) {
    auto fail = [&] { return InvariantError("cannot parse abacus notation: " + std::string(text)); };
    std::vector<BaseLevel> entries;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
    };
    auto read_int = [&](std::int64_t& out) {
        skip_ws();
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        if (pos < text.size() && text[pos] == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc{}) {
            throw fail();
        }
        pos = static_cast<std::size_t>(ptr - text.data());
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) {
            throw fail();
        }
        ++pos;
    };
    expect('[');
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        throw fail();
    }
    while (true) {
        BaseLevel e;
        read_int(e.base);
        expect('^');
        read_int(e.level);
        entries.push_back(e);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        expect(']');
        break;
    }
    skip_ws();
    if (pos != text.size()) {
        throw fail();
    }
    return Abacus::from_entries(entries);
}

}  // namespace shibij

#include "shibij/verify.hpp"

#include "shibij/bijection.hpp"
#include "shibij/catalan.hpp"
#include "shibij/enumerate.hpp"
#include "shibij/errors.hpp"
#include "shibij/lattice_paths.hpp"
#include "shibij/minimality.hpp"
#include "shibij/parallel.hpp"
#include "shibij/tableau.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace shibij {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
    }

    void note(std::string text) { result_.note = std::move(text); }
    void informational() { result_.informational = true; }
    PropertyResult& result() { return result_; }

private:
    PropertyResult result_;
};

using Property = std::function<void(Check&)>;

struct NamedProperty {
    std::string name;
    Property body;
};

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ')';
    return os.str();
}

std::string rows_text(const Rows& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += join(r);
    }
    return out;
}

std::string nm(std::int64_t n, std::int64_t m) {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m);
}

// Every zero-sum integer vector of length n with entries in [-bound, bound].
void for_each_zero_sum(std::size_t n, std::int64_t bound, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> v(n, -bound);
    for (;;) {
        if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) == 0) {
            fn(v);
        }
        std::size_t i = 0;
        while (i < n && v[i] == bound) {
            v[i++] = -bound;
        }
        if (i == n) {
            return;
        }
        ++v[i];
    }
}

std::vector<Abacus> box_abaci(std::size_t n, std::int64_t bound) {
    std::vector<Abacus> out;
    for_each_zero_sum(n, bound, [&](const std::vector<std::int64_t>& beta) {
        out.push_back(abacus_from_level_vector(LevelVector(beta)));
    });
    return out;
}

bool minimal_by_definition(std::span<const std::int64_t> beta, std::int64_t m) {
    for (std::size_t i = 0; i + 1 < beta.size(); ++i) {
        if (beta[i + 1] - beta[i] > m) {
            return false;
        }
    }
    return beta.front() - beta.back() - 1 <= m;
}

std::int64_t floor_div(std::int64_t a, std::int64_t d) {
    return a / d - ((a % d != 0) && ((a < 0) != (d < 0)));
}

// ---------------------------------------------------------------- counts

std::vector<NamedProperty> counts_suite() {
    return {
        {"type A enumeration equals the Catalan formula (n<=5, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 5; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     const auto got = enumerate_regions_A(n, m).size();
                     const auto want = catalan_A(n, m);
                     c.expect(BigInt(got) == want, [&] {
                         return nm(n, m) + ": enumerated " + std::to_string(got) + ", formula " + want.str();
                     });
                 }
             }
         }},
        {"type C enumeration equals the Catalan formula (n<=4, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 4; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     const auto got = enumerate_regions_C(n, m).size();
                     const auto want = catalan_C(n, m);
                     c.expect(BigInt(got) == want, [&] {
                         return nm(n, m) + ": enumerated " + std::to_string(got) + ", formula " + want.str();
                     });
                 }
             }
         }},
        {"product formula equals the binomial forms (n<=12, m<=6)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 12; ++n) {
                 for (std::int64_t m = 1; m <= 6; ++m) {
                     const auto b = binomial((m + 1) * n, n);
                     c.expect(catalan_C(n, m) == b && catalan_A(n, m) * (m * n + 1) == b,
                              [&] { return nm(n, m); });
                 }
             }
         }},
        {"path counts equal the Catalan numbers (n<=6, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 6; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     const auto l = enumerate_lattice_paths(n, m).size();
                     const auto d = enumerate_dyck_paths(n, m).size();
                     c.expect(BigInt(l) == catalan_C(n, m) && BigInt(d) == catalan_A(n, m), [&] {
                         return nm(n, m) + ": " + std::to_string(l) + " paths, " + std::to_string(d) + " Dyck";
                     });
                 }
             }
         }},
    };
}

// ---------------------------------------------------------------- affine

std::vector<NamedProperty> affine_suite() {
    return {
        {"decode inverts value_of (n<=7, |v|<=60)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 7; ++n) {
                 for (std::int64_t v = -60; v <= 60; ++v) {
                     const auto e = decode(v, n);
                     c.expect(e.base >= 1 && e.base <= n && e.base + n * e.level == v,
                              [&] { return "v=" + std::to_string(v) + " n=" + std::to_string(n); });
                 }
             }
         }},
        {"level vector and abacus round trip (n<=5, |beta|<=2)",
         [](Check& c) {
             for (std::size_t n = 1; n <= 5; ++n) {
                 for_each_zero_sum(n, 2, [&](const std::vector<std::int64_t>& beta) {
                     const auto a = abacus_from_level_vector(LevelVector(beta));
                     c.expect(level_vector(a) == LevelVector(beta), [&] { return join(beta); });
                 });
             }
         }},
        {"rebase is invariant under translation (n<=4, |beta|<=2, |c|<=9)",
         [](Check& c) {
             for (std::size_t n = 1; n <= 4; ++n) {
                 for (const auto& a : box_abaci(n, 2)) {
                     for (std::int64_t t = -9; t <= 9; ++t) {
                         auto values = a.values();
                         for (auto& v : values) {
                             v += t;
                         }
                         c.expect(rebase(values) == a, [&] { return to_string(a) + " + " + std::to_string(t); });
                     }
                 }
             }
         }},
        {"antisymmetric expansions are balanced (n<=4, |beta|<=2, |k|<=10)",
         [](Check& c) {
             for (std::size_t n = 1; n <= 4; ++n) {
                 for (const auto& a : box_abaci(n, 2)) {
                     for (std::int64_t k = -10; k <= 10; ++k) {
                         c.expect(is_balanced(antisymmetric_expansion(k_shift(a, k))),
                                  [&] { return to_string(a) + " k=" + std::to_string(k); });
                     }
                 }
             }
         }},
        {"balanced iff the tableau is self-conjugate (length 2n<=6, |beta|<=3)",
         [](Check& c) {
             for (std::size_t n = 1; n <= 3; ++n) {
                 for (const auto& a : box_abaci(2 * n, 3)) {
                     c.expect(is_balanced(a) == is_self_conjugate(tableau_from_abacus(a)),
                              [&] { return to_string(a); });
                 }
             }
         }},
    };
}

// ---------------------------------------------------------------- tableaux

std::vector<NamedProperty> tableaux_suite() {
    return {
        {"tableau equals floor((v(j+1)-v(i))/n) (n<=5)",
         [](Check& c) {
             for (std::size_t n = 2; n <= 5; ++n) {
                 for (const auto& a : box_abaci(n, n <= 4 ? 3 : 2)) {
                     const auto t = tableau_from_abacus(a);
                     const auto v = a.values();
                     const auto nn = static_cast<std::int64_t>(n);
                     for (std::size_t i = 1; i < n; ++i) {
                         for (std::size_t j = i; j < n; ++j) {
                             c.expect(t.at(i, j) == floor_div(v[j] - v[i - 1], nn), [&] {
                                 return to_string(a) + " cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
                             });
                         }
                     }
                 }
             }
         }},
        {"abacus to tableau to abacus (n<=5)",
         [](Check& c) {
             for (std::size_t n = 1; n <= 5; ++n) {
                 for (const auto& a : box_abaci(n, n <= 4 ? 3 : 2)) {
                     c.expect(abacus_from_tableau(tableau_from_abacus(a)) == a, [&] { return to_string(a); });
                 }
             }
         }},
        {"tableau to abacus to tableau over all Shi tableaux (rank<=3, entries<=4)",
         [](Check& c) {
             for (std::size_t rank = 1; rank <= 3; ++rank) {
                 const auto cells = rank * (rank + 1) / 2;
                 std::vector<std::int64_t> digits(cells, 0);
                 for (;;) {
                     Staircase s(rank);
                     std::size_t d = 0;
                     for (std::size_t i = 1; i <= rank; ++i) {
                         for (std::size_t j = i; j <= rank; ++j) {
                             s.set(i, j, digits[d++]);
                         }
                     }
                     if (check_alcove_shi(s)) {
                         const AlcoveTableau t(s);
                         c.expect(tableau_from_abacus(abacus_from_tableau(t)) == t,
                                  [&] { return rows_text(t.rows()); });
                     }
                     std::size_t k = 0;
                     while (k < cells && digits[k] == 4) {
                         digits[k++] = 0;
                     }
                     if (k == cells) {
                         break;
                     }
                     ++digits[k];
                 }
             }
         }},
        {"minimal alcove equals the brute-force group minimum (n<=4, m<=3)",
         [](Check& c) {
             for (std::size_t n = 2; n <= 4; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     if (n == 4 && m == 3) {
                         continue;
                     }
                     const auto bound = (static_cast<std::int64_t>(n) - 1) * m + 1;
                     std::map<Staircase, Staircase> low;
                     for (const auto& a : box_abaci(n, bound)) {
                         const auto t = tableau_from_abacus(a);
                         const auto key = region_from_alcove(t, m).cells();
                         auto [it, fresh] = low.try_emplace(key, t.cells());
                         if (!fresh) {
                             for (std::size_t i = 1; i < n; ++i) {
                                 for (std::size_t j = i; j < n; ++j) {
                                     it->second.set(i, j, std::min(it->second.at(i, j), t.at(i, j)));
                                 }
                             }
                         }
                     }
                     c.expect(BigInt(low.size()) == catalan_A(static_cast<std::int64_t>(n), m),
                              [&] { return nm(static_cast<std::int64_t>(n), m) + ": region count"; });
                     for (const auto& [key, minimum] : low) {
                         const RegionTableau r(key, m);
                         const auto k = alcove_from_region(r);
                         c.expect(k.cells() == minimum && region_from_alcove(k, m) == r,
                                  [&] { return nm(static_cast<std::int64_t>(n), m) + " region " + rows_text(r.rows()); });
                     }
                 }
             }
         }},
        {"minimal alcoves are exactly the m-minimal abaci (n<=5, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 2; n <= 5; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     for (const auto& a : enumerate_regions_A(n, m)) {
                         const auto t = tableau_from_abacus(a);
                         c.expect(alcove_from_region(region_from_alcove(t, m)) == t,
                                  [&] { return nm(n, m) + " " + to_string(a); });
                     }
                 }
             }
         }},
    };
}

// ---------------------------------------------------------------- minimality

std::vector<NamedProperty> minimality_suite() {
    return {
        {"level test, abacus test and the definition agree (n<=5, m<=4)",
         [](Check& c) {
             for (std::size_t n = 1; n <= 5; ++n) {
                 for_each_zero_sum(n, n <= 4 ? 4 : 3, [&](const std::vector<std::int64_t>& beta) {
                     const auto a = abacus_from_level_vector(LevelVector(beta));
                     for (std::int64_t m = 1; m <= 4; ++m) {
                         const bool want = minimal_by_definition(beta, m);
                         c.expect(is_m_minimal_level(LevelVector(beta), m).minimal == want &&
                                      is_m_minimal_abacus(a, m).minimal == want,
                                  [&] { return to_string(a) + " m=" + std::to_string(m); });
                     }
                 });
             }
         }},
        {"type C test agrees with the definition on expansions (n<=3, m<=3)",
         [](Check& c) {
             for (std::size_t n = 1; n <= 3; ++n) {
                 for (const auto& a : box_abaci(n, 2)) {
                     for (std::int64_t k = -8; k <= 8; ++k) {
                         const auto wbar = psi(a, k);
                         const auto beta = level_vector(wbar);
                         for (std::int64_t m = 1; m <= 3; ++m) {
                             c.expect(is_m_minimal_typeC(wbar, m).minimal == minimal_by_definition(beta.values(), m),
                                      [&] { return to_string(wbar) + " m=" + std::to_string(m); });
                         }
                     }
                 }
             }
         }},
        {"enumerated regions are m-minimal and distinct (A: n<=5, C: n<=4, m<=3)",
         [](Check& c) {
             for (std::int64_t m = 1; m <= 3; ++m) {
                 for (std::int64_t n = 1; n <= 5; ++n) {
                     std::set<std::vector<std::int64_t>> seen;
                     for (const auto& a : enumerate_regions_A(n, m)) {
                         c.expect(is_m_minimal_abacus(a, m).minimal && seen.insert(a.values()).second,
                                  [&] { return nm(n, m) + " " + to_string(a); });
                     }
                     if (n > 4) {
                         continue;
                     }
                     seen.clear();
                     for (const auto& a : enumerate_regions_C(n, m)) {
                         c.expect(is_m_minimal_typeC(a, m).minimal && seen.insert(a.values()).second,
                                  [&] { return nm(n, m) + " " + to_string(a); });
                     }
                 }
             }
         }},
    };
}

// ---------------------------------------------------------------- bj1

const std::vector<std::pair<std::int64_t, std::int64_t>> kBj1Grid{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}};

std::vector<NamedProperty> bj1_suite() {
    return {
        {"psi inverse undoes psi (n<=5, |beta|<=3, |k|<=3n)",
         [](Check& c) {
             for (std::size_t n = 1; n <= 5; ++n) {
                 const auto range = 3 * static_cast<std::int64_t>(n);
                 for (const auto& w : box_abaci(n, 3)) {
                     for (auto k = -range; k <= range; ++k) {
                         const auto back = psi_inverse(psi(w, k));
                         c.expect(back.w == w && back.k == k,
                                  [&] { return to_string(w) + " k=" + std::to_string(k); });
                     }
                 }
             }
         }},
        {"k admissible iff the expansion is m-minimal (n<=4, m<=3, |k|<=5n)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 4; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     for (const auto& w : enumerate_regions_A(n, m)) {
                         const auto K = admissible_set(w, m);
                         for (auto k = -5 * n; k <= 5 * n; ++k) {
                             const bool member = K.index_of(k).has_value();
                             const auto beta = level_vector(psi(w, k));
                             c.expect(member == minimal_by_definition(beta.values(), m),
                                      [&] { return nm(n, m) + " " + to_string(w) + " k=" + std::to_string(k); });
                         }
                     }
                 }
             }
         }},
        {"admissible sets have mn+1 elements (n<=5, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 5; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     for (const auto& w : enumerate_regions_A(n, m)) {
                         c.expect(static_cast<std::int64_t>(admissible_set(w, m).ks.size()) == m * n + 1,
                                  [&] { return nm(n, m) + " " + to_string(w); });
                     }
                 }
             }
         }},
        {"bj1 maps regions x indices bijectively onto type C regions",
         [](Check& c) {
             for (const auto& [n, m] : kBj1Grid) {
                 std::set<std::vector<std::int64_t>> image;
                 for (const auto& w : enumerate_regions_A(n, m)) {
                     for (std::int64_t i = 1; i <= m * n + 1; ++i) {
                         const auto wbar = bj1_forward(w, i, m);
                         const auto back = bj1_inverse(wbar, m);
                         c.expect(image.insert(wbar.values()).second && back.w == w && back.i == i,
                                  [&] { return nm(n, m) + " " + to_string(w) + " i=" + std::to_string(i); });
                     }
                 }
                 std::set<std::vector<std::int64_t>> all;
                 for (const auto& wbar : enumerate_regions_C(n, m)) {
                     all.insert(wbar.values());
                 }
                 c.expect(image == all, [&] { return nm(n, m) + ": image differs from the type C regions"; });
             }
         }},
        {"every fiber of phi has mn+1 elements",
         [](Check& c) {
             for (const auto& [n, m] : kBj1Grid) {
                 std::map<std::vector<std::int64_t>, std::int64_t> fibers;
                 for (const auto& wbar : enumerate_regions_C(n, m)) {
                     ++fibers[phi(wbar, m).values()];
                 }
                 c.expect(BigInt(fibers.size()) == catalan_A(n, m), [&] { return nm(n, m) + ": fiber count"; });
                 for (const auto& [w, size] : fibers) {
                     c.expect(size == m * n + 1, [&] { return nm(n, m) + ": fiber of size " + std::to_string(size); });
                 }
             }
         }},
        {"the mn+1 region tableaux over one w are distinct (n<=4, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 4; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     for (const auto& w : enumerate_regions_A(n, m)) {
                         std::set<RegionTableau> seen;
                         for (std::int64_t i = 1; i <= m * n + 1; ++i) {
                             seen.insert(region_from_alcove(tableau_from_abacus(bj1_forward(w, i, m)), m));
                         }
                         c.expect(static_cast<std::int64_t>(seen.size()) == m * n + 1,
                                  [&] { return nm(n, m) + " " + to_string(w); });
                     }
                 }
             }
         }},
    };
}

// ---------------------------------------------------------------- bj2

std::vector<NamedProperty> bj2_suite() {
    return {
        {"exactly one rotation is a Dyck path (n<=6, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 6; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     for (const auto& p : enumerate_lattice_paths(n, m)) {
                         int hits = 0;
                         for (std::int64_t t = 0; t < n; ++t) {
                             const auto s = rotation_steps(p, t);
                             bool dyck = true;
                             for (std::size_t i = 0; i < s.size(); ++i) {
                                 dyck = dyck && s[i] <= m * static_cast<std::int64_t>(i);
                             }
                             hits += dyck;
                         }
                         c.expect(hits == 1, [&] { return nm(n, m) + " " + join(p.steps()); });
                     }
                 }
             }
         }},
        {"rotations are monotone in [0,mn+1], Dyck rotations in [0,mn] (n<=6, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 6; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     for (const auto& p : enumerate_lattice_paths(n, m)) {
                         for (std::int64_t t = 0; t < n; ++t) {
                             const auto s = rotation_steps(p, t);
                             const bool ok = s.front() == 0 && std::is_sorted(s.begin(), s.end()) && s.back() <= m * n + 1;
                             c.expect(ok, [&] { return nm(n, m) + " " + join(p.steps()) + " t=" + std::to_string(t); });
                         }
                         const auto t = find_dyck_rotation(p);
                         c.expect(rotation_steps(p, t).back() <= m * n,
                                  [&] { return nm(n, m) + " " + join(p.steps()); });
                     }
                 }
             }
         }},
        {"bj2 is a bijection onto Dyck paths x {0..mn} (n<=6, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 6; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> image;
                     for (const auto& p : enumerate_lattice_paths(n, m)) {
                         const auto [d, k] = bj2_forward(p);
                         c.expect(image.emplace(d.steps(), k).second && bj2_inverse(d, k) == p,
                                  [&] { return nm(n, m) + " " + join(p.steps()); });
                     }
                     for (const auto& d : enumerate_dyck_paths(n, m)) {
                         for (std::int64_t k = 0; k <= m * n; ++k) {
                             const auto back = bj2_forward(bj2_inverse(d, k));
                             c.expect(image.count({d.steps(), k}) && back.dyck == d && back.k == k,
                                      [&] { return nm(n, m) + " " + join(d.steps()) + " k=" + std::to_string(k); });
                         }
                     }
                 }
             }
         }},
        {"|L| = (mn+1)|D| (n<=6, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 6; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     const auto l = enumerate_lattice_paths(n, m).size();
                     const auto d = enumerate_dyck_paths(n, m).size();
                     c.expect(l == static_cast<std::size_t>(m * n + 1) * d, [&] { return nm(n, m); });
                 }
             }
         }},
    };
}

// ---------------------------------------------------------------- fkt

std::vector<NamedProperty> fkt_suite() {
    return {
        {"row-sum search finds exactly one region tableau (n<=5, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 5; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     for (const auto& d : enumerate_dyck_paths(n, m)) {
                         const auto found = region_tableaux_with_row_sums(fkt_row_sums(d), m, 3);
                         c.expect(found.size() == 1, [&] {
                             return nm(n, m) + " " + join(d.steps()) + ": " + std::to_string(found.size()) + " matches";
                         });
                     }
                 }
             }
         }},
        {"fkt is a bijection onto region tableaux (n<=5, m<=3)",
         [](Check& c) {
             for (std::int64_t n = 1; n <= 5; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     std::set<RegionTableau> all;
                     for (const auto& w : enumerate_regions_A(n, m)) {
                         all.insert(region_from_alcove(tableau_from_abacus(w), m));
                     }
                     std::set<RegionTableau> image;
                     for (const auto& d : enumerate_dyck_paths(n, m)) {
                         const auto r = fkt_region(d);
                         c.expect(image.insert(r).second && dyck_from_region(r) == d,
                                  [&] { return nm(n, m) + " " + join(d.steps()); });
                     }
                     c.expect(image == all, [&] { return nm(n, m) + ": image differs from the region tableaux"; });
                 }
             }
         }},
    };
}

// ---------------------------------------------------------------- appendix-b

// T_1..T_9 as printed. Row 2 of T_9 is misprinted and breaks the Shi conditions.
const std::vector<Rows> kPrintedAppendix{
    {{6, 5, 5, 4, 2, 0, 0}, {5, 4, 4, 3, 1, 0}, {5, 4, 4, 3, 1}, {4, 3, 3, 2}, {2, 1, 1}, {0, 0}, {0}},
    {{4, 3, 3, 2, 2, 0, 0}, {3, 2, 2, 1, 1, 0}, {3, 2, 2, 1, 1}, {2, 1, 1, 0}, {2, 1, 1}, {0, 0}, {0}},
    {{2, 2, 2, 2, 0, 0, 0}, {2, 2, 2, 1, 0, 0}, {2, 2, 2, 1, 0}, {2, 1, 1, 1}, {0, 0, 0}, {0, 0}, {0}},
    {{2, 2, 2, 1, 0, 0, 0}, {2, 2, 1, 1, 0, 0}, {2, 1, 1, 1, 0}, {1, 1, 1, 0}, {0, 0, 0}, {0, 0}, {0}},
    {{2, 2, 1, 1, 0, 0, 0}, {2, 1, 1, 1, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 0}, {0, 0}, {0}},
    {{3, 2, 1, 1, 1, 1, 1}, {2, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0}, {1, 0}, {1}},
    {{3, 2, 2, 1, 1, 1, 1}, {2, 1, 0, 0, 0, 0}, {2, 0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0}, {1, 0}, {1}},
    {{3, 2, 2, 2, 1, 1, 1}, {2, 1, 1, 0, 0, 0}, {2, 1, 1, 0, 0}, {2, 0, 0, 0}, {1, 0, 0}, {1, 0}, {1}},
    {{5, 3, 3, 3, 2, 1, 1}, {1, 1, 1, 1, 0, 0}, {3, 1, 1, 1, 0}, {3, 1, 1, 1}, {2, 0, 0}, {1, 0}, {1}},
};

std::vector<NamedProperty> appendix_suite() {
    static const auto w = parse_abacus("[3^-1,1^0,2^0,4^1]");
    return {
        {"K_2(w) = {-8,-4,-2,-1,0,2,3,4,6}",
         [](Check& c) {
             const auto ks = admissible_set(w, 2).ks;
             c.expect(ks == std::vector<std::int64_t>{-8, -4, -2, -1, 0, 2, 3, 4, 6}, [&] { return join(ks); });
         }},
        {"T_1..T_9 match the printed figure entry for entry",
         [](Check& c) {
             for (std::int64_t i = 1; i <= 9; ++i) {
                 const auto rows = tableau_from_abacus(bj1_forward(w, i, 2)).rows();
                 const auto& printed = kPrintedAppendix[static_cast<std::size_t>(i - 1)];
                 for (std::size_t r = 0; r < rows.size(); ++r) {
                     for (std::size_t col = 0; col < rows[r].size(); ++col) {
                         c.expect(rows[r][col] == printed[r][col], [&] {
                             return "T_" + std::to_string(i) + " row " + std::to_string(r + 1) + " column " +
                                    std::to_string(col + 1) + ": computed " + std::to_string(rows[r][col]) +
                                    ", printed " + std::to_string(printed[r][col]) + "; computed row " + join(rows[r]) +
                                    ", printed row " + join(printed[r]);
                         });
                     }
                 }
             }
         }},
        {"T_1..T_9 are 2-minimal",
         [](Check& c) {
             for (std::int64_t i = 1; i <= 9; ++i) {
                 c.expect(is_m_minimal_typeC(bj1_forward(w, i, 2), 2).minimal,
                          [&] { return "T_" + std::to_string(i); });
             }
         }},
        {"the truncated region tableaux of T_1..T_9 are distinct",
         [](Check& c) {
             std::set<RegionTableau> seen;
             for (std::int64_t i = 1; i <= 9; ++i) {
                 const auto r = region_from_alcove(tableau_from_abacus(bj1_forward(w, i, 2)), 2);
                 c.expect(seen.insert(r).second, [&] { return "T_" + std::to_string(i) + " repeats"; });
             }
         }},
        {"printed tableaux that break the Shi conditions",
         [](Check& c) {
             c.informational();
             std::string broken;
             for (std::size_t i = 0; i < kPrintedAppendix.size(); ++i) {
                 const auto s = Staircase::from_rows(kPrintedAppendix[i]);
                 const bool shi = check_alcove_shi(s);
                 c.expect(shi, [&] { return "printed T_" + std::to_string(i + 1); });
                 if (!shi) {
                     broken += (broken.empty() ? "" : ", ") + ("T_" + std::to_string(i + 1));
                 }
             }
             c.note(broken.empty() ? "none" : broken);
         }},
    };
}

// ---------------------------------------------------------------- diagram

// The two routes from Dyck paths x {0..mn} to type C data: bj2 inverse lands on
// rectangle paths, bj1 after fkt lands on type C regions. Reported only.
std::vector<NamedProperty> diagram_suite() {
    return {
        {"rectangle paths and type C regions correspond through both routes (n<=4, m<=3)",
         [](Check& c) {
             c.informational();
             std::uint64_t pairs = 0;
             for (std::int64_t n = 1; n <= 4; ++n) {
                 for (std::int64_t m = 1; m <= 3; ++m) {
                     std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> path_to_region;
                     std::set<std::vector<std::int64_t>> regions;
                     for (const auto& d : enumerate_dyck_paths(n, m)) {
                         const auto w = abacus_from_tableau(alcove_from_region(fkt_region(d)));
                         for (std::int64_t k = 0; k <= m * n; ++k) {
                             const auto path = bj2_inverse(d, k);
                             const auto wbar = bj1_forward(w, k + 1, m);
                             path_to_region[path.steps()] = wbar.values();
                             regions.insert(wbar.values());
                             ++pairs;
                         }
                     }
                     c.expect(path_to_region.size() == regions.size() && BigInt(regions.size()) == catalan_C(n, m),
                              [&] { return nm(n, m) + ": composite is not a bijection"; });
                 }
             }
             c.note(std::to_string(pairs) + " pairs (d, k); type C region -> rectangle path through the two routes is " +
                    (c.result().passed ? "a bijection" : "not a bijection"));
         }},
    };
}

std::vector<NamedProperty> properties_of(std::string_view name) {
    if (name == "counts") return counts_suite();
    if (name == "affine") return affine_suite();
    if (name == "tableaux") return tableaux_suite();
    if (name == "minimality") return minimality_suite();
    if (name == "bj1") return bj1_suite();
    if (name == "bj2") return bj2_suite();
    if (name == "fkt") return fkt_suite();
    if (name == "appendix-b") return appendix_suite();
    if (name == "diagram") return diagram_suite();
    throw DomainError("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.passed || p.informational; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"counts", "affine",     "tableaux",  "minimality", "bj1",
                                                "bj2",    "fkt",        "appendix-b", "diagram"};
    return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opts) {
    auto properties = properties_of(name);
    SuiteReport report;
    report.suite = std::string(name);
    report.properties.resize(properties.size());
    parallel_for(properties.size(), opts.jobs, [&](std::size_t i) {
        Check check(properties[i].name);
        const auto start = std::chrono::steady_clock::now();
        try {
            properties[i].body(check);
        } catch (const std::exception& e) {
            check.expect(false, [&] { return std::string("exception: ") + e.what(); });
        }
        check.result().seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.properties[i] = std::move(check.result());
    });
    return report;
}

std::string format_report(const SuiteReport& report) {
    std::ostringstream os;
    for (const auto& p : report.properties) {
        const char* tag = p.informational ? "INFO" : (p.passed ? "PASS" : "FAIL");
        os << tag << ' ' << report.suite << '/' << p.name << " (" << p.cases << " cases)";
        if (!p.passed) {
            os << ": " << p.counterexample;
        }
        if (!p.note.empty()) {
            os << " [" << p.note << ']';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace shibij

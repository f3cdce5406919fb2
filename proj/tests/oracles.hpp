#pragma once

// Test-only oracles, independent of the library's computation paths:
//  - brute-force +/- cohomology via relation closure (no union-find reuse),
//  - classical alternating-sum cohomology for complexes of abelian groups,
//  - random ring-based complexes split into differential pairs.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "semicech/pm_complex.hpp"

namespace oracles {

using namespace semicech;

/// Brute-force H^n: find the rho relation by looping every witness pair,
/// close it transitively with a dense pass, and count classes.
struct BruteCohomology {
    std::vector<int> cocycles;
    std::vector<int> class_of;  // parallel to cocycles
    int num_classes;
};

inline BruteCohomology brute_pm_cohomology(const FinitePMComplex& c, int n) {
    std::vector<int> Z;
    for (int x = 0; x < c.space(n).size(); ++x) {
        bool cocycle = n == c.top_degree() || c.d_plus(n)(x) == c.d_minus(n)(x);
        if (cocycle) Z.push_back(x);
    }
    int k = static_cast<int>(Z.size());
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (n == 0) {
                rel[i][j] = i == j;
                continue;
            }
            const auto& X = c.space(n);
            const auto& dp = c.d_plus(n - 1);
            const auto& dm = c.d_minus(n - 1);
            for (int u = 0; u < c.space(n - 1).size() && !rel[i][j]; ++u)
                for (int v = 0; v < c.space(n - 1).size() && !rel[i][j]; ++v)
                    rel[i][j] = X.add(Z[i], X.add(dp(u), dm(v))) ==
                                X.add(Z[j], X.add(dp(v), dm(u)));
        }
    // Transitive closure (Warshall), in case the raw relation were not
    // already transitive.
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (rel[i][m] && rel[m][j]) rel[i][j] = true;
    std::vector<int> cls(k, -1);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next;
        for (int j = i + 1; j < k; ++j)
            if (rel[i][j]) cls[j] = next;
        ++next;
    }
    return {Z, cls, next};
}

/// Additive inverse table of a group-valued module.
inline std::vector<int> negation_table(const FiniteSemimodule& m) {
    std::vector<int> neg(m.size(), -1);
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            if (m.add(a, b) == m.zero()) {
                neg[a] = b;
                break;
            }
    for (int v : neg)
        if (v < 0) throw std::runtime_error("module is not a group");
    return neg;
}

/// Classical cohomology ker(d_n)/im(d_{n-1}) of the single-differential
/// complex d = d+ - d-, as a quotient module (only valid when all spaces are
/// groups).
inline FiniteSemimodule classical_group_cohomology(const FinitePMComplex& c, int n) {
    auto differential = [&](int deg, int x) {
        const auto& Y = c.space(deg + 1);
        auto neg = negation_table(Y);
        return Y.add(c.d_plus(deg)(x), neg[c.d_minus(deg)(x)]);
    };
    std::vector<int> ker;
    for (int x = 0; x < c.space(n).size(); ++x) {
        bool in_ker = n == c.top_degree() ||
                      differential(n, x) == c.space(n + 1).zero();
        if (in_ker) ker.push_back(x);
    }
    std::set<int> image;
    if (n == 0) {
        image.insert(c.space(0).zero());
    } else {
        for (int w = 0; w < c.space(n - 1).size(); ++w)
            image.insert(differential(n - 1, w));
    }
    // Cosets of the image inside the kernel.
    const auto& X = c.space(n);
    std::map<int, int> coset_of;  // kernel element -> class id
    std::vector<int> reps;
    for (int x : ker) {
        if (coset_of.count(x)) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int w : image) coset_of[X.add(x, w)] = id;
    }
    int k = static_cast<int>(reps.size());
    int rs = X.ring().table().size();
    std::vector<std::vector<int>> add(k, std::vector<int>(k));
    std::vector<std::vector<int>> act(rs, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) add[i][j] = coset_of.at(X.add(reps[i], reps[j]));
        for (int r = 0; r < rs; ++r) act[r][i] = coset_of.at(X.act(r, reps[i]));
    }
    return FiniteSemimodule(X.ring(), k, coset_of.at(X.zero()), add, act);
}

/// Pointwise sum of two parallel homs (a hom again over a commutative
/// semiring).
inline SemimoduleHom hom_add(const SemimoduleHom& f, const SemimoduleHom& g) {
    std::vector<int> t(f.domain().size());
    for (int a = 0; a < f.domain().size(); ++a)
        t[a] = f.codomain().add(f(a), g(a));
    return SemimoduleHom(f.domain(), f.codomain(), std::move(t));
}

/// A random hom (Z/p)^gens -> N determined by generator images drawn from
/// the given pool (every choice of generator images extends to a hom).
inline SemimoduleHom random_free_hom(std::mt19937_64& rng, const FiniteSemimodule& dom,
                                     int p, int gens, const FiniteSemimodule& cod,
                                     const std::vector<int>& pool) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<int> gen_img(gens);
    for (int& v : gen_img) v = pool[pick(rng)];
    std::vector<int> table(dom.size());
    for (int x = 0; x < dom.size(); ++x) {
        // Decode base-p digits of x, slowest coordinate first.
        int t = x, acc = cod.zero();
        std::vector<int> digits(gens);
        for (int i = gens - 1; i >= 0; --i) {
            digits[i] = t % p;
            t /= p;
        }
        for (int i = 0; i < gens; ++i) acc = cod.add(acc, cod.act(digits[i], gen_img[i]));
        table[x] = acc;
    }
    return SemimoduleHom(dom, cod, std::move(table));
}

inline SemimoduleHom random_free_hom(std::mt19937_64& rng, const FiniteSemimodule& dom,
                                     int p, int gens, const FiniteSemimodule& cod) {
    std::vector<int> all(cod.size());
    std::iota(all.begin(), all.end(), 0);
    return random_free_hom(rng, dom, p, gens, cod, all);
}

/// A random three-term ring-based complex A -> B -> C with the classical
/// relation d1 o d0 = 0, split into differential pairs d+ = d + r, d- = r.
/// The outgoing map g is drawn first; f's generator images are then drawn
/// from ker(g), so g o f = 0 holds by construction.
inline FinitePMComplex random_group_complex(std::mt19937_64& rng, int p, int ga, int gb,
                                            int gc) {
    auto ring = Semiring::table([&] {
        std::vector<std::vector<int>> add(p, std::vector<int>(p));
        std::vector<std::vector<int>> mul(p, std::vector<int>(p));
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                add[a][b] = (a + b) % p;
                mul[a][b] = (a * b) % p;
            }
        return SemiringTable(p, 0, 1, add, mul);
    }());
    auto reg = FiniteSemimodule::regular(ring);
    auto power = [&](int g) {
        return FiniteSemimodule::product(std::vector<FiniteSemimodule>(g, reg), ring);
    };
    auto A = power(ga), B = power(gb), C = power(gc);

    auto g = random_free_hom(rng, B, p, gb, C);
    std::vector<int> ker;
    for (int x = 0; x < B.size(); ++x)
        if (g(x) == C.zero()) ker.push_back(x);
    auto f = random_free_hom(rng, A, p, ga, B, ker);

    auto r0 = random_free_hom(rng, A, p, ga, B);
    auto r1 = random_free_hom(rng, B, p, gb, C);
    std::vector<SemimoduleHom> dp{hom_add(f, r0), hom_add(g, r1)};
    std::vector<SemimoduleHom> dm{r0, r1};
    return FinitePMComplex({A, B, C}, dp, dm);
}

}  // namespace oracles

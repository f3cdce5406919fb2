#pragma once

// Finite semimodules over finite semiring tables, their homomorphisms,
// congruences via union-find saturation, quotients, Hom-semimodules, and the
// two tensor products (cancellation quotient and free-modulo-bilinearity).

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicech/semiring.hpp"

namespace semicech {

/// A finite semimodule given by an addition table and a scalar-action table
/// over a finite semiring.  The commutative-monoid and semimodule axioms are
/// validated exhaustively at construction.  Values are immutable and share
/// their tables.
class FiniteSemimodule {
public:
    FiniteSemimodule(Semiring ring, int size, int zero,
                     std::vector<std::vector<int>> add,
                     std::vector<std::vector<int>> act)
        : d_(std::make_shared<const Data>(
              Data{std::move(ring), size, zero, std::move(add), std::move(act)})) {
        validate();
    }

    /// Construction path for modules assembled from already-validated parts
    /// (products, quotients by verified congruences).  The exhaustive axiom
    /// check is cubic and becomes prohibitive for the large free modules the
    /// tensor construction passes through; validity there is inherited from
    /// the factors.
    struct Trusted {};
    FiniteSemimodule(Trusted, Semiring ring, int size, int zero,
                     std::vector<std::vector<int>> add,
                     std::vector<std::vector<int>> act)
        : d_(std::make_shared<const Data>(
              Data{std::move(ring), size, zero, std::move(add), std::move(act)})) {}

    const Semiring& ring() const { return d_->ring; }
    int size() const { return d_->size; }
    int zero() const { return d_->zero; }
    int add(int a, int b) const { return d_->add[a][b]; }
    int act(int r, int t) const { return d_->act[r][t]; }

    bool same_tables(const FiniteSemimodule& o) const {
        return d_ == o.d_ || (d_->size == o.d_->size && d_->zero == o.d_->zero &&
                              d_->add == o.d_->add && d_->act == o.d_->act &&
                              d_->ring.same_as(o.d_->ring));
    }

    /// The zero-or-one-element semimodule over the given ring.
    static FiniteSemimodule zero_module(const Semiring& ring) {
        int n = ring.table().size();
        return FiniteSemimodule(ring, 1, 0, {{0}},
                                std::vector<std::vector<int>>(n, std::vector<int>{0}));
    }

    /// The semiring as a module over itself.
    static FiniteSemimodule regular(const Semiring& ring) {
        const auto& t = ring.table();
        int n = t.size();
        std::vector<std::vector<int>> add(n, std::vector<int>(n));
        std::vector<std::vector<int>> act(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                add[a][b] = t.add(a, b);
                act[a][b] = t.mul(a, b);
            }
        return FiniteSemimodule(ring, n, t.zero(), add, act);
    }

    /// Direct product; coordinates are mixed-radix encoded, slowest first.
    static FiniteSemimodule product(const std::vector<FiniteSemimodule>& factors,
                                    const Semiring& ring, long size_guard = 1 << 20) {
        long n = 1;
        for (const auto& f : factors) {
            if (!f.ring().same_as(ring))
                throw IncompatibleOperands("product factors over different semirings");
            n *= f.size();
            if (n > size_guard) throw SizeGuardError("product module too large");
        }
        if (factors.empty()) return zero_module(ring);
        int nn = static_cast<int>(n);
        int rs = ring.table().size();
        std::vector<std::vector<int>> add(nn, std::vector<int>(nn));
        std::vector<std::vector<int>> act(rs, std::vector<int>(nn));
        auto decode = [&](int x) {
            std::vector<int> c(factors.size());
            for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
                c[i] = x % factors[i].size();
                x /= factors[i].size();
            }
            return c;
        };
        auto encode = [&](const std::vector<int>& c) {
            int x = 0;
            for (std::size_t i = 0; i < factors.size(); ++i)
                x = x * factors[i].size() + c[i];
            return x;
        };
        for (int a = 0; a < nn; ++a) {
            auto ca = decode(a);
            for (int b = 0; b < nn; ++b) {
                auto cb = decode(b);
                std::vector<int> cc(factors.size());
                for (std::size_t i = 0; i < factors.size(); ++i)
                    cc[i] = factors[i].add(ca[i], cb[i]);
                add[a][b] = encode(cc);
            }
            for (int r = 0; r < rs; ++r) {
                std::vector<int> cc(factors.size());
                for (std::size_t i = 0; i < factors.size(); ++i)
                    cc[i] = factors[i].act(r, ca[i]);
                act[r][a] = encode(cc);
            }
        }
        std::vector<int> zc(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) zc[i] = factors[i].zero();
        return FiniteSemimodule(Trusted{}, ring, nn, encode(zc), add, act);
    }

    /// The free module R^k: functions {0..k-1} -> R, mixed-radix encoded.
    static FiniteSemimodule free_module(const Semiring& ring, int generators,
                                        long size_guard) {
        return product(std::vector<FiniteSemimodule>(generators, regular(ring)), ring,
                       size_guard);
    }

    /// Is (elements, add) an abelian group, i.e. does every element have an
    /// additive inverse?
    bool is_group() const {
        for (int a = 0; a < size(); ++a) {
            bool inv = false;
            for (int b = 0; b < size() && !inv; ++b) inv = add(a, b) == zero();
            if (!inv) return false;
        }
        return true;
    }

private:
    struct Data {
        Semiring ring;
        int size, zero;
        std::vector<std::vector<int>> add;
        std::vector<std::vector<int>> act;
    };

    void validate() const {
        const auto& D = *d_;
        if (!D.ring.is_table())
            throw ValidationError("finite semimodules need a finite scalar semiring");
        const auto& R = D.ring.table();
        if (D.size < 1) throw ValidationError("empty semimodule");
        if (D.zero < 0 || D.zero >= D.size) throw ValidationError("zero out of range");
        if (static_cast<int>(D.add.size()) != D.size)
            throw ValidationError("addition table has wrong size");
        for (const auto& row : D.add) {
            if (static_cast<int>(row.size()) != D.size)
                throw ValidationError("addition table has wrong size");
            for (int v : row)
                if (v < 0 || v >= D.size) throw ValidationError("addition entry out of range");
        }
        if (static_cast<int>(D.act.size()) != R.size())
            throw ValidationError("scalar table has wrong size");
        for (const auto& row : D.act) {
            if (static_cast<int>(row.size()) != D.size)
                throw ValidationError("scalar table has wrong size");
            for (int v : row)
                if (v < 0 || v >= D.size) throw ValidationError("scalar entry out of range");
        }
        for (int a = 0; a < D.size; ++a) {
            if (D.add[D.zero][a] != a) throw ValidationError("0 is not an additive identity");
            for (int b = 0; b < D.size; ++b) {
                if (D.add[a][b] != D.add[b][a]) throw ValidationError("addition not commutative");
                for (int c = 0; c < D.size; ++c)
                    if (D.add[D.add[a][b]][c] != D.add[a][D.add[b][c]])
                        throw ValidationError("addition not associative");
            }
        }
        // Semimodule axioms: 1t = t; 0_R t = 0 = r 0; both distributivities;
        // (rs)t = r(st).
        for (int t = 0; t < D.size; ++t) {
            if (D.act[R.one()][t] != t) throw ValidationError("1 does not act as identity");
            if (D.act[R.zero()][t] != D.zero) throw ValidationError("0_R t != 0");
        }
        for (int r = 0; r < R.size(); ++r) {
            if (D.act[r][D.zero] != D.zero) throw ValidationError("r 0 != 0");
            for (int s = 0; s < R.size(); ++s)
                for (int t = 0; t < D.size; ++t) {
                    if (D.act[R.add(r, s)][t] != D.add[D.act[r][t]][D.act[s][t]])
                        throw ValidationError("(r+s)t != rt+st");
                    if (D.act[R.mul(r, s)][t] != D.act[r][D.act[s][t]])
                        throw ValidationError("(rs)t != r(st)");
                }
            for (int t1 = 0; t1 < D.size; ++t1)
                for (int t2 = 0; t2 < D.size; ++t2)
                    if (D.act[r][D.add[t1][t2]] != D.add[D.act[r][t1]][D.act[r][t2]])
                        throw ValidationError("r(t1+t2) != rt1+rt2");
        }
    }

    std::shared_ptr<const Data> d_;
};

/// A homomorphism between two finite semimodules over the same semiring,
/// given elementwise and validated exhaustively.
class SemimoduleHom {
public:
    SemimoduleHom(FiniteSemimodule dom, FiniteSemimodule cod, std::vector<int> map)
        : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
        if (!dom_.ring().same_as(cod_.ring()))
            throw IncompatibleOperands("hom between modules over different semirings");
        if (static_cast<int>(map_.size()) != dom_.size())
            throw ValidationError("hom table has wrong size");
        for (int v : map_)
            if (v < 0 || v >= cod_.size()) throw ValidationError("hom image out of range");
        if (map_[dom_.zero()] != cod_.zero()) throw ValidationError("hom does not preserve 0");
        for (int a = 0; a < dom_.size(); ++a)
            for (int b = 0; b < dom_.size(); ++b)
                if (map_[dom_.add(a, b)] != cod_.add(map_[a], map_[b]))
                    throw ValidationError("hom does not preserve addition");
        int rs = dom_.ring().table().size();
        for (int r = 0; r < rs; ++r)
            for (int a = 0; a < dom_.size(); ++a)
                if (map_[dom_.act(r, a)] != cod_.act(r, map_[a]))
                    throw ValidationError("hom does not preserve scalar action");
    }

    static SemimoduleHom identity(const FiniteSemimodule& m) {
        std::vector<int> id(m.size());
        std::iota(id.begin(), id.end(), 0);
        return SemimoduleHom(m, m, std::move(id));
    }

    static SemimoduleHom zero_hom(const FiniteSemimodule& dom, const FiniteSemimodule& cod) {
        return SemimoduleHom(dom, cod, std::vector<int>(dom.size(), cod.zero()));
    }

    const FiniteSemimodule& domain() const { return dom_; }
    const FiniteSemimodule& codomain() const { return cod_; }
    int operator()(int a) const { return map_[a]; }
    const std::vector<int>& table() const { return map_; }

    SemimoduleHom compose_after(const SemimoduleHom& first) const {
        // this o first
        if (!first.cod_.same_tables(dom_))
            throw IncompatibleOperands("composition domain mismatch");
        std::vector<int> m(first.dom_.size());
        for (int a = 0; a < first.dom_.size(); ++a) m[a] = map_[first.map_[a]];
        return SemimoduleHom(first.dom_, cod_, std::move(m));
    }

    bool is_bijective() const {
        if (dom_.size() != cod_.size()) return false;
        std::vector<bool> hit(cod_.size(), false);
        for (int v : map_) {
            if (hit[v]) return false;
            hit[v] = true;
        }
        return true;
    }

    bool operator==(const SemimoduleHom& o) const { return map_ == o.map_; }

private:
    FiniteSemimodule dom_, cod_;
    std::vector<int> map_;
};

/// An equivalence relation on module elements closed under addition and
/// scalar action, stored as a partition with least-index representatives.
class Congruence {
public:
    explicit Congruence(std::vector<int> rep) : rep_(std::move(rep)) { canonicalize(); }

    static Congruence discrete(int size) {
        std::vector<int> rep(size);
        std::iota(rep.begin(), rep.end(), 0);
        return Congruence(std::move(rep));
    }

    int size() const { return static_cast<int>(rep_.size()); }
    int rep(int a) const { return rep_[a]; }
    bool related(int a, int b) const { return rep_[a] == rep_[b]; }

    int num_classes() const {
        int n = 0;
        for (int a = 0; a < size(); ++a)
            if (rep_[a] == a) ++n;
        return n;
    }

    std::vector<std::vector<int>> classes() const {
        std::map<int, std::vector<int>> by_rep;
        for (int a = 0; a < size(); ++a) by_rep[rep_[a]].push_back(a);
        std::vector<std::vector<int>> out;
        for (auto& [r, cls] : by_rep) out.push_back(std::move(cls));
        return out;
    }

    bool operator==(const Congruence& o) const { return rep_ == o.rep_; }

    /// Checks closure under the module operations.
    bool is_congruence_on(const FiniteSemimodule& m) const {
        if (size() != m.size()) return false;
        int rs = m.ring().table().size();
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) {
                if (!related(a, b)) continue;
                for (int c = 0; c < size(); ++c)
                    if (!related(m.add(a, c), m.add(b, c))) return false;
                for (int r = 0; r < rs; ++r)
                    if (!related(m.act(r, a), m.act(r, b))) return false;
            }
        return true;
    }

private:
    void canonicalize() {
        // representative of each class := least element index
        std::map<int, int> least;
        for (int a = 0; a < size(); ++a) {
            auto it = least.find(rep_[a]);
            if (it == least.end()) least[rep_[a]] = a;
        }
        for (int a = 0; a < size(); ++a) rep_[a] = least[rep_[a]];
    }

    std::vector<int> rep_;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep least index as root
        parent_[b] = a;
        return true;
    }
    std::vector<int> reps() {
        std::vector<int> r(parent_.size());
        for (std::size_t a = 0; a < parent_.size(); ++a) r[a] = find(static_cast<int>(a));
        return r;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

/// The least congruence on M containing the given pairs: union-find with
/// saturation under a + c ~ b + c and ra ~ rb.  Derived pairs compose
/// transitively inside the union-find, so propagating per union suffices.
inline Congruence congruence_closure(const FiniteSemimodule& m,
                                     const std::vector<std::pair<int, int>>& pairs) {
    detail::UnionFind uf(m.size());
    std::deque<std::pair<int, int>> work(pairs.begin(), pairs.end());
    int rs = m.ring().table().size();
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        if (a < 0 || a >= m.size() || b < 0 || b >= m.size())
            throw IncompatibleOperands("congruence pair out of range");
        if (!uf.unite(a, b)) continue;
        for (int c = 0; c < m.size(); ++c) work.emplace_back(m.add(a, c), m.add(b, c));
        for (int r = 0; r < rs; ++r) work.emplace_back(m.act(r, a), m.act(r, b));
    }
    return Congruence(uf.reps());
}

/// Quotient module together with the projection hom.
struct QuotientResult {
    FiniteSemimodule module;
    SemimoduleHom projection;
    std::vector<int> class_reps;  // class index -> least element of the class
};

enum class VerifyCongruence { Yes, No };

inline QuotientResult quotient(const FiniteSemimodule& m, const Congruence& c,
                               VerifyCongruence verify = VerifyCongruence::Yes) {
    if (c.size() != m.size()) throw IncompatibleOperands("congruence on a different module");
    if (verify == VerifyCongruence::Yes && !c.is_congruence_on(m))
        throw ValidationError("relation is not a congruence on this module");
    std::vector<int> reps;
    std::vector<int> class_of(m.size());
    for (int a = 0; a < m.size(); ++a)
        if (c.rep(a) == a) {
            class_of[a] = static_cast<int>(reps.size());
            reps.push_back(a);
        }
    for (int a = 0; a < m.size(); ++a) class_of[a] = class_of[c.rep(a)];
    int n = static_cast<int>(reps.size());
    int rs = m.ring().table().size();
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> act(rs, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) add[i][j] = class_of[m.add(reps[i], reps[j])];
        for (int r = 0; r < rs; ++r) act[r][i] = class_of[m.act(r, reps[i])];
    }
    FiniteSemimodule q(FiniteSemimodule::Trusted{}, m.ring(), n, class_of[m.zero()], add, act);
    SemimoduleHom proj(m, q, class_of);
    return {std::move(q), std::move(proj), std::move(reps)};
}

/// Golan-tensor cancellation collapse: M modulo a ~ b iff a + c = b + c for
/// some c, found by exhaustive witness search (the relation is transitive:
/// witnesses add).
struct GolanCollapse {
    Congruence congruence;
    FiniteSemimodule quotient_module;
    std::vector<std::pair<int, int>> witnessed_pairs;  // (a, b) with a ~ b, a < b
};

inline GolanCollapse golan_tensor_collapse(const FiniteSemimodule& m) {
    detail::UnionFind uf(m.size());
    std::vector<std::pair<int, int>> merged;
    for (int a = 0; a < m.size(); ++a)
        for (int b = a + 1; b < m.size(); ++b)
            for (int c = 0; c < m.size(); ++c)
                if (m.add(a, c) == m.add(b, c)) {
                    uf.unite(a, b);
                    merged.emplace_back(a, b);
                    break;
                }
    Congruence cong(uf.reps());
    auto q = quotient(m, cong);
    return {std::move(cong), std::move(q.module), std::move(merged)};
}

/// Symbolic cancellation-collapse rule for the builtin semirings, viewed as
/// semimodules over themselves.
struct GolanSymbolic {
    bool collapses_to_zero;
    std::string rule;
};

inline GolanSymbolic golan_collapse_symbolic(const Semiring& s) {
    switch (s.kind()) {
        case SemiringKind::Boolean:
            return {true, "a + 1 = 1 = b + 1: top element is a universal witness"};
        case SemiringKind::QMax:
        case SemiringKind::ZMax:
            return {true, "c = max(a,b) + 1 gives a + c = c = b + c"};
        case SemiringKind::Naturals:
            return {false, "naturals are additively cancellative: a + c = b + c forces a = b"};
        case SemiringKind::Table: {
            auto reg = FiniteSemimodule::regular(s);
            return {golan_tensor_collapse(reg).quotient_module.size() == 1,
                    "exhaustive witness search on the table"};
        }
    }
    return {false, ""};
}

/// Enumerates every semimodule hom M -> N (candidate maps filtered through
/// the validating constructor).  Guarded by |N|^|M| <= bound.
inline std::vector<SemimoduleHom> all_homs(const FiniteSemimodule& m,
                                           const FiniteSemimodule& n,
                                           long bound = 1 << 20) {
    double log_count = m.size() * std::log2(static_cast<double>(n.size()));
    if (log_count > std::log2(static_cast<double>(bound)))
        throw SizeGuardError("hom enumeration too large");
    std::vector<SemimoduleHom> out;
    std::vector<int> map(m.size(), 0);
    // Mixed-radix counter over candidate maps; zero must go to zero, so we
    // pin that coordinate and let validation do the rest.
    while (true) {
        map[m.zero()] = n.zero();
        bool ok = map[m.zero()] == n.zero();
        if (ok) {
            try {
                out.emplace_back(m, n, map);
            } catch (const ValidationError&) {
            }
        }
        int pos = 0;
        while (pos < m.size()) {
            if (pos == m.zero()) {
                ++pos;
                continue;
            }
            if (++map[pos] < n.size()) break;
            map[pos] = 0;
            ++pos;
        }
        if (pos >= m.size()) break;
    }
    return out;
}

/// Hom(M, N) as a finite semimodule under pointwise addition and scalar
/// action.
struct HomModule {
    FiniteSemimodule module;
    std::vector<SemimoduleHom> homs;  // element index -> hom

    int index_of(const SemimoduleHom& h) const {
        for (std::size_t i = 0; i < homs.size(); ++i)
            if (homs[i] == h) return static_cast<int>(i);
        return -1;
    }
};

inline HomModule hom_semimodule(const FiniteSemimodule& m, const FiniteSemimodule& n,
                                long bound = 1 << 20) {
    auto homs = all_homs(m, n, bound);
    // Deterministic order: all_homs enumerates maps in mixed-radix order.
    int k = static_cast<int>(homs.size());
    auto find = [&](const std::vector<int>& tbl) {
        for (int i = 0; i < k; ++i)
            if (homs[i].table() == tbl) return i;
        throw ValidationError("pointwise combination is not a hom");
    };
    int rs = m.ring().table().size();
    std::vector<std::vector<int>> add(k, std::vector<int>(k));
    std::vector<std::vector<int>> act(rs, std::vector<int>(k));
    int zero_idx = find(std::vector<int>(m.size(), n.zero()));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            std::vector<int> sum(m.size());
            for (int a = 0; a < m.size(); ++a) sum[a] = n.add(homs[i](a), homs[j](a));
            add[i][j] = find(sum);
        }
        for (int r = 0; r < rs; ++r) {
            std::vector<int> sc(m.size());
            for (int a = 0; a < m.size(); ++a) sc[a] = n.act(r, homs[i](a));
            act[r][i] = find(sc);
        }
    }
    FiniteSemimodule mod(m.ring(), k, zero_idx, add, act);
    return {std::move(mod), std::move(homs)};
}

/// Pareigis-Rohrl tensor product: the free module on M x N modulo the
/// congruence generated by the bilinearity relations, all computed through
/// congruence_closure.
struct TensorResult {
    FiniteSemimodule module;
    std::vector<std::vector<int>> pure;  // pure[m][n] = element index of m (x) n
};

inline TensorResult pr_tensor(const FiniteSemimodule& m, const FiniteSemimodule& n,
                              long size_guard = 4096) {
    if (!m.ring().same_as(n.ring()))
        throw IncompatibleOperands("tensor factors over different semirings");
    const Semiring& ring = m.ring();
    const auto& R = ring.table();
    int gens = m.size() * n.size();
    double log_size = gens * std::log2(static_cast<double>(R.size()));
    if (log_size > std::log2(static_cast<double>(size_guard)))
        throw SizeGuardError("free module |R|^(|M||N|) exceeds the size guard");
    auto free = FiniteSemimodule::free_module(ring, gens, size_guard);

    // Index of the generator e_(a,b), and of r * e_(a,b), inside R^gens.
    auto gen_index = [&](int a, int b) { return a * n.size() + b; };
    auto scaled_generator = [&](int g, int r) {
        // Mixed-radix: coordinate g has stride |R|^(gens-1-g).
        long idx = 0;
        for (int i = 0; i < gens; ++i) idx = idx * R.size() + (i == g ? r : R.zero());
        return static_cast<int>(idx);
    };

    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < n.size(); ++b) {
            int e_ab = scaled_generator(gen_index(a, b), R.one());
            // (0, b) ~ 0 and (a, 0) ~ 0.
            if (a == m.zero() || b == n.zero()) rels.emplace_back(e_ab, free.zero());
            for (int a2 = 0; a2 < m.size(); ++a2) {
                int lhs = scaled_generator(gen_index(m.add(a, a2), b), R.one());
                int rhs = free.add(e_ab, scaled_generator(gen_index(a2, b), R.one()));
                rels.emplace_back(lhs, rhs);
            }
            for (int b2 = 0; b2 < n.size(); ++b2) {
                int lhs = scaled_generator(gen_index(a, n.add(b, b2)), R.one());
                int rhs = free.add(e_ab, scaled_generator(gen_index(a, b2), R.one()));
                rels.emplace_back(lhs, rhs);
            }
            for (int r = 0; r < R.size(); ++r) {
                int r_e = scaled_generator(gen_index(a, b), r);
                rels.emplace_back(scaled_generator(gen_index(m.act(r, a), b), R.one()), r_e);
                rels.emplace_back(scaled_generator(gen_index(a, n.act(r, b)), R.one()), r_e);
            }
        }
    auto cong = congruence_closure(free, rels);
    // Closure output is a congruence by construction; skip the quadratic
    // re-check, which dominates on the big free module.
    auto q = quotient(free, cong, VerifyCongruence::No);
    std::vector<std::vector<int>> pure(m.size(), std::vector<int>(n.size()));
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < n.size(); ++b)
            pure[a][b] = q.projection(scaled_generator(gen_index(a, b), R.one()));
    return {std::move(q.module), std::move(pure)};
}

/// Backtracking isomorphism search between two finite semimodules over the
/// same semiring.  Returns an element bijection if one exists.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteSemimodule& a,
                                                        const FiniteSemimodule& b) {
    if (!a.ring().same_as(b.ring()) || a.size() != b.size()) return std::nullopt;
    int n = a.size();
    int rs = a.ring().table().size();
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    map[a.zero()] = b.zero();
    used[b.zero()] = true;

    auto consistent = [&](int x) {
        // Check every defined pair involving x.
        for (int y = 0; y < n; ++y) {
            if (map[y] < 0) continue;
            int s = a.add(x, y);
            if (map[s] >= 0 && map[s] != b.add(map[x], map[y])) return false;
            s = a.add(y, x);
            if (map[s] >= 0 && map[s] != b.add(map[y], map[x])) return false;
        }
        for (int r = 0; r < rs; ++r) {
            int s = a.act(r, x);
            if (map[s] >= 0 && map[s] != b.act(r, map[x])) return false;
        }
        return true;
    };

    std::vector<int> order;
    for (int x = 0; x < n; ++x)
        if (x != a.zero()) order.push_back(x);

    std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
        if (pos == order.size()) {
            // Full check for safety.
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y)
                    if (map[a.add(x, y)] != b.add(map[x], map[y])) return false;
                for (int r = 0; r < rs; ++r)
                    if (map[a.act(r, x)] != b.act(r, map[x])) return false;
            }
            return true;
        }
        int x = order[pos];
        if (map[x] >= 0) return consistent(x) && go(pos + 1);
        for (int y = 0; y < n; ++y) {
            if (used[y]) continue;
            map[x] = y;
            used[y] = true;
            if (consistent(x) && go(pos + 1)) return true;
            map[x] = -1;
            used[y] = false;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return map;
}

}  // namespace semicech

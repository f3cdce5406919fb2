#pragma once

// Cochain complexes of finite semimodules with paired differentials
// (d+, d-), their cocycles Z^n = {x : d+x = d-x}, the cohomology congruence
// rho^n discovered by exhaustive witness search, quotient cohomology, and
// +/- morphisms with induced maps on classes.

#include <optional>
#include <utility>
#include <vector>

#include "semicech/semimodule.hpp"

namespace semicech {

/// A finite +/- cochain complex concentrated in degrees 0..top_degree().
/// Degrees outside the range are zero modules; in particular rho^0 is
/// equality (no witnesses below degree 0) and every element of the top
/// space is a cocycle.
class FinitePMComplex {
public:
    FinitePMComplex(std::vector<FiniteSemimodule> spaces,
                    std::vector<SemimoduleHom> d_plus,
                    std::vector<SemimoduleHom> d_minus)
        : spaces_(std::move(spaces)), dp_(std::move(d_plus)), dm_(std::move(d_minus)) {
        if (spaces_.empty()) throw ValidationError("complex needs at least one space");
        if (dp_.size() != spaces_.size() - 1 || dm_.size() != spaces_.size() - 1)
            throw ValidationError("need one differential pair per adjacent degree");
        for (std::size_t n = 0; n + 1 < spaces_.size(); ++n) {
            if (!dp_[n].domain().same_tables(spaces_[n]) ||
                !dp_[n].codomain().same_tables(spaces_[n + 1]) ||
                !dm_[n].domain().same_tables(spaces_[n]) ||
                !dm_[n].codomain().same_tables(spaces_[n + 1]))
                throw ValidationError("differential endpoints do not match the spaces");
        }
    }

    int top_degree() const { return static_cast<int>(spaces_.size()) - 1; }
    const FiniteSemimodule& space(int n) const { return spaces_.at(n); }
    const SemimoduleHom& d_plus(int n) const { return dp_.at(n); }
    const SemimoduleHom& d_minus(int n) const { return dm_.at(n); }

    /// Checks d+_{n+1} d+_n + d-_{n+1} d-_n = d-_{n+1} d+_n + d+_{n+1} d-_n
    /// on every element of degree n; returns a counterexample element on
    /// failure.
    std::optional<int> chain_identity_counterexample(int n) const {
        if (n < 0 || n + 2 > top_degree()) return std::nullopt;  // a zero map is involved
        const auto& X2 = spaces_[n + 2];
        for (int x = 0; x < spaces_[n].size(); ++x) {
            int pp = dp_[n + 1](dp_[n](x));
            int mm = dm_[n + 1](dm_[n](x));
            int mp = dm_[n + 1](dp_[n](x));
            int pm = dp_[n + 1](dm_[n](x));
            if (X2.add(pp, mm) != X2.add(mp, pm)) return x;
        }
        return std::nullopt;
    }

    bool check_chain_identity(int n) const { return !chain_identity_counterexample(n); }

    bool check_all_chain_identities() const {
        for (int n = 0; n + 2 <= top_degree(); ++n)
            if (!check_chain_identity(n)) return false;
        return true;
    }

    /// Z^n = {x : d+_n(x) = d-_n(x)}; the whole space at the top degree.
    std::vector<int> cocycles(int n) const {
        std::vector<int> out;
        for (int x = 0; x < spaces_.at(n).size(); ++x)
            if (is_cocycle(n, x)) out.push_back(x);
        return out;
    }

    bool is_cocycle(int n, int x) const {
        if (n == top_degree()) return true;
        return dp_[n](x) == dm_[n](x);
    }

    /// Verifies the witness pair (u, v) for x rho^n y:
    /// x + d+(u) + d-(v) = y + d+(v) + d-(u).
    bool rho_related(int n, int x, int y, int u, int v) const {
        if (!is_cocycle(n, x) || !is_cocycle(n, y))
            throw IncompatibleOperands("rho is a relation on cocycles");
        if (n == 0) {
            if (u != 0 || v != 0)
                throw IncompatibleOperands("degree -1 is the zero module");
            return x == y;
        }
        const auto& X = spaces_[n];
        const auto& dp = dp_[n - 1];
        const auto& dm = dm_[n - 1];
        int lhs = X.add(x, X.add(dp(u), dm(v)));
        int rhs = X.add(y, X.add(dp(v), dm(u)));
        return lhs == rhs;
    }

    /// First witness pair in lexicographic order, if any.
    std::optional<std::pair<int, int>> rho_witness(int n, int x, int y) const {
        if (n == 0) {
            if (x == y) return std::make_pair(0, 0);
            return std::nullopt;
        }
        int below = spaces_[n - 1].size();
        for (int u = 0; u < below; ++u)
            for (int v = 0; v < below; ++v)
                if (rho_related(n, x, y, u, v)) return std::make_pair(u, v);
        return std::nullopt;
    }

    struct Cohomology {
        FiniteSemimodule z_module;       // Z^n with its induced operations
        std::vector<int> cocycle_list;   // z-index -> element of C^n
        Congruence rho;                  // on z-indices, rebuilt from witness search
        FiniteSemimodule module;         // H^n = Z^n / rho^n
        std::vector<int> class_of;       // z-index -> element of H^n

        int class_of_element(int x) const {
            for (std::size_t i = 0; i < cocycle_list.size(); ++i)
                if (cocycle_list[i] == x) return class_of[i];
            throw IncompatibleOperands("element is not a cocycle");
        }
    };

    /// H^n by exhaustive witness search.  The discovered relation is
    /// re-verified to be a congruence on Z^n before quotienting; a failure
    /// there indicates a representation bug and aborts.
    Cohomology cohomology(int n) const {
        auto Z = cocycles(n);
        auto z_mod = submodule(n, Z);
        int k = static_cast<int>(Z.size());
        detail::UnionFind uf(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (rho_witness(n, Z[i], Z[j])) uf.unite(i, j);
        Congruence rho(uf.reps());
        // rho is reflexive and symmetric by construction of the search;
        // transitivity and operation-compatibility are what we re-verify.
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                bool related = rho_witness(n, Z[i], Z[j]).has_value();
                if (related != rho.related(i, j))
                    throw ValidationError("rho is not transitive on this instance");
            }
        if (!rho.is_congruence_on(z_mod))
            throw ValidationError("rho is not a congruence on Z^n");
        auto q = quotient(z_mod, rho);
        std::vector<int> class_of(k);
        for (int i = 0; i < k; ++i) class_of[i] = q.projection(i);
        return {std::move(z_mod), std::move(Z), std::move(rho), std::move(q.module),
                std::move(class_of)};
    }

private:
    /// Z^n as a semimodule in its own right (it is closed under + and
    /// scalars since the differentials are homs).
    FiniteSemimodule submodule(int n, const std::vector<int>& elems) const {
        const auto& X = spaces_[n];
        std::vector<int> pos(X.size(), -1);
        for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
        int k = static_cast<int>(elems.size());
        int rs = X.ring().table().size();
        std::vector<std::vector<int>> add(k, std::vector<int>(k));
        std::vector<std::vector<int>> act(rs, std::vector<int>(k));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                int s = X.add(elems[i], elems[j]);
                if (pos[s] < 0) throw ValidationError("Z^n is not closed under addition");
                add[i][j] = pos[s];
            }
            for (int r = 0; r < rs; ++r) {
                int s = X.act(r, elems[i]);
                if (pos[s] < 0) throw ValidationError("Z^n is not closed under scalars");
                act[r][i] = pos[s];
            }
        }
        if (pos[X.zero()] < 0) throw ValidationError("Z^n does not contain 0");
        return FiniteSemimodule(FiniteSemimodule::Trusted{}, X.ring(), k, pos[X.zero()],
                                std::move(add), std::move(act));
    }

    std::vector<FiniteSemimodule> spaces_;
    std::vector<SemimoduleHom> dp_, dm_;
};

/// A +/- morphism between two finite complexes: degreewise homs commuting
/// with both differentials (validated exhaustively).
class FinitePMMorphism {
public:
    FinitePMMorphism(const FinitePMComplex& from, const FinitePMComplex& to,
                     std::vector<SemimoduleHom> maps)
        : from_(&from), to_(&to), maps_(std::move(maps)) {
        if (static_cast<int>(maps_.size()) != from.top_degree() + 1 ||
            from.top_degree() != to.top_degree())
            throw ValidationError("morphism needs one map per degree");
        for (int n = 0; n <= from.top_degree(); ++n) {
            if (!maps_[n].domain().same_tables(from.space(n)) ||
                !maps_[n].codomain().same_tables(to.space(n)))
                throw ValidationError("morphism map endpoints mismatch");
        }
        for (int n = 0; n < from.top_degree(); ++n) {
            for (int x = 0; x < from.space(n).size(); ++x) {
                if (maps_[n + 1](from.d_plus(n)(x)) != to.d_plus(n)(maps_[n](x)) ||
                    maps_[n + 1](from.d_minus(n)(x)) != to.d_minus(n)(maps_[n](x)))
                    throw ValidationError("maps do not commute with the differentials");
            }
        }
    }

    const SemimoduleHom& map(int n) const { return maps_.at(n); }

    static FinitePMMorphism identity(const FinitePMComplex& c) {
        std::vector<SemimoduleHom> maps;
        for (int n = 0; n <= c.top_degree(); ++n)
            maps.push_back(SemimoduleHom::identity(c.space(n)));
        return FinitePMMorphism(c, c, std::move(maps));
    }

    FinitePMMorphism compose_after(const FinitePMMorphism& first) const {
        std::vector<SemimoduleHom> maps;
        for (std::size_t n = 0; n < maps_.size(); ++n)
            maps.push_back(maps_[n].compose_after(first.maps_[n]));
        return FinitePMMorphism(*first.from_, *to_, std::move(maps));
    }

    /// The induced map H^n(from) -> H^n(to), [x] |-> [f(x)].  Well-definedness
    /// is re-verified: every member of a source class must land in one target
    /// class.
    std::vector<int> induced(int n, const FinitePMComplex::Cohomology& hx,
                             const FinitePMComplex::Cohomology& hy) const {
        std::vector<int> out(hx.module.size(), -1);
        for (std::size_t i = 0; i < hx.cocycle_list.size(); ++i) {
            int img = maps_[n](hx.cocycle_list[i]);
            int target = hy.class_of_element(img);
            int& slot = out[hx.class_of[i]];
            if (slot >= 0 && slot != target)
                throw ValidationError("induced map is not well defined on classes");
            slot = target;
        }
        return out;
    }

private:
    const FinitePMComplex* from_;
    const FinitePMComplex* to_;
    std::vector<SemimoduleHom> maps_;
};

}  // namespace semicech

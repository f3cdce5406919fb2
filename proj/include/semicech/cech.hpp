#pragma once

// Cech +/- complexes of a finite cover with finite sheaf data: the ordered
// (strictly increasing tuple) builder feeding FinitePMComplex, the H^0
// gluing statement, the cover-size vanishing bound, and refinement
// +/- morphisms.  Collapsing refinements live on the unordered (all tuples,
// repeats allowed) model, where the refinement formula commutes with the
// differentials on the nose; the ordered model keeps the paper's default
// cochain convention.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "semicech/pm_complex.hpp"

namespace semicech {

using Tuple = std::vector<int>;

inline std::vector<Tuple> increasing_tuples(int num_charts, int size) {
    std::vector<Tuple> out;
    if (size <= 0 || size > num_charts) return out;
    Tuple t(size);
    std::function<void(int, int)> go = [&](int pos, int start) {
        if (pos == size) {
            out.push_back(t);
            return;
        }
        for (int v = start; v < num_charts; ++v) {
            t[pos] = v;
            go(pos + 1, v + 1);
        }
    };
    go(0, 0);
    return out;
}

inline Tuple omit(const Tuple& t, int k) {
    Tuple out;
    out.reserve(t.size() - 1);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (static_cast<int>(i) != k) out.push_back(t[i]);
    return out;
}

inline Tuple sorted_support(const Tuple& t) {
    std::set<int> s(t.begin(), t.end());
    return Tuple(s.begin(), s.end());
}

/// Finite sheaf data on the cover {U_0, ..., U_{N-1}}: a section module per
/// nonempty increasing tuple and a restriction hom per codimension-1
/// inclusion.  Longer restrictions are composites; path independence
/// (functoriality) is validated on all codimension-2 diamonds.
class FiniteSheafOnCover {
public:
    FiniteSheafOnCover(Semiring ring, int num_charts,
                       std::map<Tuple, FiniteSemimodule> sections,
                       std::map<std::pair<Tuple, Tuple>, SemimoduleHom> restrictions)
        : ring_(std::move(ring)), num_charts_(num_charts),
          sections_(std::move(sections)), restr_(std::move(restrictions)) {
        validate();
    }

    static FiniteSheafOnCover constant(const Semiring& ring, int num_charts,
                                       const FiniteSemimodule& m) {
        std::map<Tuple, FiniteSemimodule> sections;
        std::map<std::pair<Tuple, Tuple>, SemimoduleHom> restr;
        for (int size = 1; size <= num_charts; ++size)
            for (const auto& t : increasing_tuples(num_charts, size)) {
                sections.emplace(t, m);
                if (size >= 2)
                    for (int k = 0; k < size; ++k)
                        restr.emplace(std::make_pair(omit(t, k), t), SemimoduleHom::identity(m));
            }
        return FiniteSheafOnCover(ring, num_charts, std::move(sections), std::move(restr));
    }

    const Semiring& ring() const { return ring_; }
    int num_charts() const { return num_charts_; }

    const FiniteSemimodule& section(const Tuple& t) const {
        auto it = sections_.find(t);
        if (it == sections_.end()) throw IncompatibleOperands("no section module for tuple");
        return it->second;
    }

    /// Restriction along from <= to, composed from codimension-1 steps by
    /// inserting the missing indices in increasing order.
    SemimoduleHom restriction(const Tuple& from, const Tuple& to) const {
        if (from == to) return SemimoduleHom::identity(section(from));
        Tuple missing;
        for (int v : to)
            if (!std::binary_search(from.begin(), from.end(), v)) missing.push_back(v);
        if (missing.size() + from.size() != to.size())
            throw IncompatibleOperands("restriction wants nested tuples");
        Tuple cur = from;
        std::optional<SemimoduleHom> acc;
        for (int v : missing) {
            Tuple next = cur;
            next.insert(std::upper_bound(next.begin(), next.end(), v), v);
            const auto& step = step_restriction(cur, next);
            acc = acc ? step.compose_after(*acc) : step;
            cur = std::move(next);
        }
        return *acc;
    }

private:
    const SemimoduleHom& step_restriction(const Tuple& from, const Tuple& to) const {
        auto it = restr_.find({from, to});
        if (it == restr_.end())
            throw IncompatibleOperands("missing codimension-1 restriction");
        return it->second;
    }

    void validate() const {
        if (num_charts_ < 1) throw ValidationError("cover needs at least one chart");
        for (int size = 1; size <= num_charts_; ++size)
            for (const auto& t : increasing_tuples(num_charts_, size)) {
                if (!sections_.count(t))
                    throw ValidationError("missing section module for a cover tuple");
                if (!sections_.at(t).ring().same_as(ring_))
                    throw ValidationError("section module over the wrong semiring");
            }
        for (const auto& [key, hom] : restr_) {
            const auto& [from, to] = key;
            if (!hom.domain().same_tables(section(from)) ||
                !hom.codomain().same_tables(section(to)))
                throw ValidationError("restriction endpoints mismatch");
        }
        for (int size = 1; size + 2 <= num_charts_ + 1; ++size)
            for (const auto& t : increasing_tuples(num_charts_, size))
                check_diamonds(t);
    }

    /// Functoriality on codimension-2 diamonds: inserting {a, b} into t in
    /// either order gives the same composite.
    void check_diamonds(const Tuple& t) const {
        std::vector<int> outside;
        for (int v = 0; v < num_charts_; ++v)
            if (!std::binary_search(t.begin(), t.end(), v)) outside.push_back(v);
        for (std::size_t i = 0; i < outside.size(); ++i)
            for (std::size_t j = i + 1; j < outside.size(); ++j) {
                int a = outside[i], b = outside[j];
                auto insert = [](Tuple u, int v) {
                    u.insert(std::upper_bound(u.begin(), u.end(), v), v);
                    return u;
                };
                Tuple ta = insert(t, a), tb = insert(t, b), tab = insert(ta, b);
                auto via_a = step_restriction(ta, tab).compose_after(step_restriction(t, ta));
                auto via_b = step_restriction(tb, tab).compose_after(step_restriction(t, tb));
                if (!(via_a == via_b))
                    throw ValidationError("restrictions are not functorial (diamond failure)");
            }
    }

    Semiring ring_;
    int num_charts_;
    std::map<Tuple, FiniteSemimodule> sections_;
    std::map<std::pair<Tuple, Tuple>, SemimoduleHom> restr_;
};

/// The ordered Cech complex together with its tuple bookkeeping: degree n is
/// the product over strictly increasing (n+1)-tuples, and the differentials
/// sum restrictions over even (d+) and odd (d-) omitted positions.
class OrderedCechComplex {
public:
    OrderedCechComplex(const FiniteSheafOnCover& sheaf, int max_degree)
        : sheaf_(&sheaf) {
        const Semiring& ring = sheaf.ring();
        for (int n = 0; n <= max_degree; ++n) {
            tuples_.push_back(increasing_tuples(sheaf.num_charts(), n + 1));
            std::vector<FiniteSemimodule> factors;
            for (const auto& t : tuples_.back()) factors.push_back(sheaf.section(t));
            spaces_.push_back(FiniteSemimodule::product(factors, ring));
            std::vector<int> sizes;
            for (const auto& f : factors) sizes.push_back(f.size());
            factor_sizes_.push_back(std::move(sizes));
        }
        std::vector<SemimoduleHom> dp, dm;
        for (int n = 0; n < max_degree; ++n) {
            auto [p, m] = differential_tables(n);
            dp.emplace_back(spaces_[n], spaces_[n + 1], std::move(p));
            dm.emplace_back(spaces_[n], spaces_[n + 1], std::move(m));
        }
        complex_.emplace(spaces_, std::move(dp), std::move(dm));
    }

    const FinitePMComplex& complex() const { return *complex_; }
    const std::vector<Tuple>& tuples(int degree) const { return tuples_.at(degree); }
    const FiniteSheafOnCover& sheaf() const { return *sheaf_; }

    std::vector<int> components(int degree, int element) const {
        const auto& sizes = factor_sizes_.at(degree);
        std::vector<int> c(sizes.size());
        for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
            c[i] = element % sizes[i];
            element /= sizes[i];
        }
        return c;
    }

    int element_of(int degree, const std::vector<int>& comps) const {
        const auto& sizes = factor_sizes_.at(degree);
        int x = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i) x = x * sizes[i] + comps[i];
        return x;
    }

private:
    std::pair<std::vector<int>, std::vector<int>> differential_tables(int n) const {
        const auto& from = tuples_[n];
        const auto& to = tuples_[n + 1];
        std::map<Tuple, int> index_of;
        for (std::size_t i = 0; i < from.size(); ++i) index_of[from[i]] = static_cast<int>(i);

        // Per target tuple, the list of (source index, restriction, parity).
        struct Face {
            int source;
            SemimoduleHom restrict;
            bool even;
        };
        std::vector<std::vector<Face>> faces(to.size());
        for (std::size_t s = 0; s < to.size(); ++s)
            for (int k = 0; k <= n + 1; ++k) {
                Tuple sub = omit(to[s], k);
                faces[s].push_back(
                    {index_of.at(sub), sheaf_->restriction(sub, to[s]), k % 2 == 0});
            }

        std::vector<int> plus(spaces_[n].size()), minus(spaces_[n].size());
        for (int x = 0; x < spaces_[n].size(); ++x) {
            auto comps = components(n, x);
            std::vector<int> pc(to.size()), mc(to.size());
            for (std::size_t s = 0; s < to.size(); ++s) {
                const auto& sec = sheaf_->section(to[s]);
                int acc_p = sec.zero(), acc_m = sec.zero();
                for (const auto& f : faces[s]) {
                    int v = f.restrict(comps[f.source]);
                    if (f.even)
                        acc_p = sec.add(acc_p, v);
                    else
                        acc_m = sec.add(acc_m, v);
                }
                pc[s] = acc_p;
                mc[s] = acc_m;
            }
            plus[x] = element_of(n + 1, pc);
            minus[x] = element_of(n + 1, mc);
        }
        return {std::move(plus), std::move(minus)};
    }

    const FiniteSheafOnCover* sheaf_;
    std::vector<std::vector<Tuple>> tuples_;
    std::vector<FiniteSemimodule> spaces_;
    std::vector<std::vector<int>> factor_sizes_;
    std::optional<FinitePMComplex> complex_;
};

/// Optional global-sections handle for the H^0 statement: the module F(X)
/// and its per-chart restriction homs.
struct GlobalSections {
    FiniteSemimodule module;
    std::vector<SemimoduleHom> to_chart;  // one per chart, F(X) -> F(U_i)
};

/// H^0(U, F) = F(X): computes the matching families Z^0, asserts rho^0 is
/// equality, and (when a global handle is given) verifies that restriction
/// is a bijection onto Z^0, returning the mutually inverse maps r and s.
struct H0Result {
    std::vector<int> z0;                        // matching families, as C^0 elements
    std::optional<FiniteSemimodule> z0_module;  // Z^0 with its induced operations
    bool rho0_is_equality = false;
    bool glues = false;                     // global handle present and bijective
    std::vector<int> r;                     // F(X) element -> C^0 element
    std::vector<int> s;                     // z0 position -> F(X) element
    std::optional<int> offending_family;    // Z^0 element with no/ambiguous gluing
};

inline H0Result h0_global(const OrderedCechComplex& cech,
                          const std::optional<GlobalSections>& global = std::nullopt) {
    const auto& cx = cech.complex();
    auto h0 = cx.cohomology(0);
    H0Result out;
    out.z0 = h0.cocycle_list;
    out.z0_module = h0.z_module;
    out.rho0_is_equality = h0.module.size() == static_cast<int>(out.z0.size());
    if (!out.rho0_is_equality) return out;
    if (!global) return out;

    const auto& g = *global;
    if (static_cast<int>(g.to_chart.size()) != cech.sheaf().num_charts())
        throw IncompatibleOperands("need one chart restriction per chart");
    std::map<int, int> hit;  // C^0 element -> global element
    out.r.resize(g.module.size());
    for (int a = 0; a < g.module.size(); ++a) {
        std::vector<int> comps;
        for (const auto& hom : g.to_chart) comps.push_back(hom(a));
        int x = cech.element_of(0, comps);
        out.r[a] = x;
        if (!cx.is_cocycle(0, x)) {
            // Restrictions of a global section must match on overlaps.
            out.offending_family = x;
            return out;
        }
        if (hit.count(x)) {
            out.offending_family = x;  // two globals with the same family
            return out;
        }
        hit[x] = a;
    }
    out.s.assign(out.z0.size(), -1);
    for (std::size_t i = 0; i < out.z0.size(); ++i) {
        auto it = hit.find(out.z0[i]);
        if (it == hit.end()) {
            out.offending_family = out.z0[i];  // matching family with no gluing
            return out;
        }
        out.s[i] = it->second;
    }
    out.glues = true;
    return out;
}

/// Degree-m spaces vanish once m reaches the cover size (empty products).
inline bool vanishing_bound(const FiniteSheafOnCover& sheaf, int m) {
    if (m < sheaf.num_charts()) return false;
    OrderedCechComplex cech(sheaf, m);
    return cech.complex().space(m).size() == 1;
}

/// Refinement +/- morphism on ordered complexes for strictly monotone sigma
/// (no collapsing): sigma^n(x)_{t} = x_{sigma(t)} followed by the cross
/// restriction from the coarse tuple's sections into the fine tuple's.
/// Validation of the +/- morphism conditions happens in the
/// FinitePMMorphism constructor.
inline FinitePMMorphism ordered_refinement(
    const OrderedCechComplex& coarse, const OrderedCechComplex& fine,
    const std::vector<int>& sigma,
    const std::function<SemimoduleHom(const Tuple& coarse_t, const Tuple& fine_t)>&
        cross_restriction) {
    for (std::size_t j = 1; j < sigma.size(); ++j)
        if (sigma[j - 1] >= sigma[j])
            throw IncompatibleOperands("ordered refinement needs strictly monotone sigma");
    int top = coarse.complex().top_degree();
    std::vector<SemimoduleHom> maps;
    for (int n = 0; n <= top; ++n) {
        const auto& fine_tuples = fine.tuples(n);
        const auto& coarse_tuples = coarse.tuples(n);
        std::map<Tuple, int> coarse_index;
        for (std::size_t i = 0; i < coarse_tuples.size(); ++i)
            coarse_index[coarse_tuples[i]] = static_cast<int>(i);
        std::vector<int> table(coarse.complex().space(n).size());
        for (int x = 0; x < coarse.complex().space(n).size(); ++x) {
            auto comps = coarse.components(n, x);
            std::vector<int> out(fine_tuples.size());
            for (std::size_t s = 0; s < fine_tuples.size(); ++s) {
                Tuple pre(fine_tuples[s].size());
                for (std::size_t k = 0; k < pre.size(); ++k) pre[k] = sigma[fine_tuples[s][k]];
                auto hom = cross_restriction(pre, fine_tuples[s]);
                out[s] = hom(comps[coarse_index.at(pre)]);
            }
            table[x] = fine.element_of(n, out);
        }
        maps.emplace_back(coarse.complex().space(n), fine.complex().space(n), std::move(table));
    }
    return FinitePMMorphism(coarse.complex(), fine.complex(), std::move(maps));
}

/// The unordered cochain model: degree n is indexed by ALL tuples in
/// I^{n+1}, repeats allowed, with values in the sections of the tuple's
/// support.  Cochains are kept as component vectors (the product spaces are
/// never materialized), which keeps collapsing refinements and their
/// exhaustive +/- validation tractable.
class UnorderedCechModel {
public:
    using Cochain = std::vector<int>;

    UnorderedCechModel(const FiniteSheafOnCover& sheaf, int max_degree)
        : sheaf_(&sheaf) {
        for (int n = 0; n <= max_degree; ++n) {
            std::vector<Tuple> ts;
            Tuple t(n + 1, 0);
            all_tuples(0, t, ts);
            tuples_.push_back(std::move(ts));
        }
    }

    const std::vector<Tuple>& tuples(int n) const { return tuples_.at(n); }
    const FiniteSheafOnCover& sheaf() const { return *sheaf_; }

    const FiniteSemimodule& tuple_section(const Tuple& t) const {
        return sheaf_->section(sorted_support(t));
    }

    Cochain zero_cochain(int n) const {
        const auto& ts = tuples_.at(n);
        Cochain x(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) x[i] = tuple_section(ts[i]).zero();
        return x;
    }

    Cochain add(int n, const Cochain& a, const Cochain& b) const {
        const auto& ts = tuples_.at(n);
        Cochain out(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i)
            out[i] = tuple_section(ts[i]).add(a[i], b[i]);
        return out;
    }

    Cochain d_plus(int n, const Cochain& x) const { return differential(n, x, true); }
    Cochain d_minus(int n, const Cochain& x) const { return differential(n, x, false); }

    bool is_cocycle(int n, const Cochain& x) const {
        return d_plus(n, x) == d_minus(n, x);
    }

    /// Verifies Eq. (rho): x + d+(u) + d-(v) = y + d+(v) + d-(u) in degree n.
    bool rho_verify(int n, const Cochain& x, const Cochain& y, const Cochain& u,
                    const Cochain& v) const {
        if (n == 0) return x == y;  // C^{-1} = 0
        auto lhs = add(n, x, add(n, d_plus(n - 1, u), d_minus(n - 1, v)));
        auto rhs = add(n, y, add(n, d_plus(n - 1, v), d_minus(n - 1, u)));
        return lhs == rhs;
    }

    /// All cochains of degree n (mixed-radix enumeration), guarded.
    std::vector<Cochain> enumerate_cochains(int n, long guard = 1 << 16) const {
        const auto& ts = tuples_.at(n);
        long count = 1;
        for (const auto& t : ts) {
            count *= tuple_section(t).size();
            if (count > guard) throw SizeGuardError("unordered cochain space too large");
        }
        std::vector<Cochain> out;
        std::vector<int> digits(ts.size(), 0);
        while (true) {
            out.push_back(digits);
            int pos = static_cast<int>(ts.size()) - 1;
            while (pos >= 0) {
                if (++digits[pos] < tuple_section(ts[pos]).size()) break;
                digits[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        return out;
    }

    /// The refinement map of Eq. (pm): sigma^n(x)_{j0...jn} =
    /// x_{sigma(j0)...sigma(jn)} restricted to the fine tuple.  Any sigma
    /// works here; repeats on the source side are honest unordered tuples.
    Cochain refine_from(const UnorderedCechModel& coarse, const std::vector<int>& sigma,
                        int n, const Cochain& x,
                        const std::function<SemimoduleHom(const Tuple&, const Tuple&)>&
                            cross_restriction) const {
        const auto& fine_ts = tuples_.at(n);
        const auto& coarse_ts = coarse.tuples_.at(n);
        std::map<Tuple, int> coarse_index;
        for (std::size_t i = 0; i < coarse_ts.size(); ++i)
            coarse_index[coarse_ts[i]] = static_cast<int>(i);
        Cochain out(fine_ts.size());
        for (std::size_t s = 0; s < fine_ts.size(); ++s) {
            Tuple pre(fine_ts[s].size());
            for (std::size_t k = 0; k < pre.size(); ++k) pre[k] = sigma[fine_ts[s][k]];
            auto hom = cross_restriction(sorted_support(pre), sorted_support(fine_ts[s]));
            out[s] = hom(x[coarse_index.at(pre)]);
        }
        return out;
    }

private:
    void all_tuples(std::size_t pos, Tuple& t, std::vector<Tuple>& out) const {
        if (pos == t.size()) {
            out.push_back(t);
            return;
        }
        for (int v = 0; v < sheaf_->num_charts(); ++v) {
            t[pos] = v;
            all_tuples(pos + 1, t, out);
        }
    }

    Cochain differential(int n, const Cochain& x, bool even) const {
        const auto& from = tuples_.at(n);
        const auto& to = tuples_.at(n + 1);
        std::map<Tuple, int> index_of;
        for (std::size_t i = 0; i < from.size(); ++i) index_of[from[i]] = static_cast<int>(i);
        Cochain out(to.size());
        for (std::size_t s = 0; s < to.size(); ++s) {
            const auto& sec = tuple_section(to[s]);
            int acc = sec.zero();
            for (int k = 0; k <= n + 1; ++k) {
                if ((k % 2 == 0) != even) continue;
                Tuple sub = omit(to[s], k);
                auto hom = sheaf_->restriction(sorted_support(sub), sorted_support(to[s]));
                acc = sec.add(acc, hom(x[index_of.at(sub)]));
            }
            out[s] = acc;
        }
        return out;
    }

    const FiniteSheafOnCover* sheaf_;
    std::vector<std::vector<Tuple>> tuples_;
};

}  // namespace semicech

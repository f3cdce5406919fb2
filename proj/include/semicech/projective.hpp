#pragma once

// The standard-cover models of O_X, O_X(m) and O*_X on P^n over an exact
// semifield: symbolic Cech cochains of Laurent sections, the idempotency
// vanishing witness, unit-cocycle classification, and the Picard group.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semicech/cech.hpp"
#include "semicech/laurent.hpp"

namespace semicech {

/// P^n over a semifield M, with the standard cover D(x_0), ..., D(x_n).
struct ProjectiveSpace {
    int n;
    Semiring M;

    ProjectiveSpace(int dim, Semiring coeff) : n(dim), M(std::move(coeff)) {
        if (n < 1) throw IncompatibleOperands("projective space needs n >= 1");
        if (!M.is_semifield())
            throw IncompatibleOperands("coefficients must form a semifield");
    }

    int vars() const { return n + 1; }

    SectionSpace sections(const Tuple& tuple, int twist = 0) const {
        return SectionSpace(vars(), tuple, twist);
    }

    UnitSectionSpace unit_section_space(const Tuple& tuple) const {
        return UnitSectionSpace(M, vars(), tuple);
    }
};

/// The Cech complex of O_X(twist) on the standard cover, with cochains kept
/// symbolically as Laurent polynomials per strictly increasing tuple.
/// Restriction between charts is the identity embedding.
class ProjectiveCech {
public:
    using Cochain = std::vector<LaurentPoly>;  // parallel to tuples(degree)

    explicit ProjectiveCech(ProjectiveSpace X, int twist = 0)
        : X_(std::move(X)), twist_(twist) {
        for (int deg = 0; deg <= X_.n; ++deg)
            tuples_.push_back(increasing_tuples(X_.n + 1, deg + 1));
    }

    const ProjectiveSpace& space() const { return X_; }
    int twist() const { return twist_; }
    int top_degree() const { return X_.n; }

    const std::vector<Tuple>& tuples(int degree) const {
        static const std::vector<Tuple> empty;
        if (degree < 0 || degree > X_.n) return empty;
        return tuples_[degree];
    }

    Cochain zero_cochain(int degree) const {
        return Cochain(tuples(degree).size(), LaurentPoly::zero(X_.M, X_.vars()));
    }

    bool member(int degree, const Cochain& x) const {
        const auto& ts = tuples(degree);
        if (x.size() != ts.size()) return false;
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (!x[i].is_zero() && !X_.sections(ts[i], twist_).contains(x[i])) return false;
        return true;
    }

    Cochain add(const Cochain& a, const Cochain& b) const {
        Cochain out(a.size(), LaurentPoly::zero(X_.M, X_.vars()));
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    }

    Cochain d_plus(int degree, const Cochain& x) const { return differential(degree, x, true); }
    Cochain d_minus(int degree, const Cochain& x) const { return differential(degree, x, false); }

    bool is_cocycle(int degree, const Cochain& x) const {
        if (!member(degree, x)) return false;
        if (degree >= top_degree()) return true;
        return d_plus(degree, x) == d_minus(degree, x);
    }

    /// Eq. alexcochain evaluated on one element:
    /// d+d+(x) + d-d-(x) = d-d+(x) + d+d-(x).
    bool chain_identity_on(int degree, const Cochain& x) const {
        auto dp = d_plus(degree, x), dm = d_minus(degree, x);
        auto lhs = add(d_plus(degree + 1, dp), d_minus(degree + 1, dm));
        auto rhs = add(d_minus(degree + 1, dp), d_plus(degree + 1, dm));
        return lhs == rhs;
    }

    /// Exact verification of the rho witness equation
    /// x + d+(u) + d-(v) = y + d+(v) + d-(u) at the given degree.
    bool rho_verified(int degree, const Cochain& x, const Cochain& y, const Cochain& u,
                      const Cochain& v) const {
        if (degree == 0) return x == y;
        auto lhs = add(x, add(d_plus(degree - 1, u), d_minus(degree - 1, v)));
        auto rhs = add(y, add(d_plus(degree - 1, v), d_minus(degree - 1, u)));
        return lhs == rhs;
    }

    /// H^0 of O_X on P^n: matching families are single polynomials with all
    /// exponents nonnegative and total degree `twist`; for twist = 0 these
    /// are exactly the constants M.  The maps r (constant -> diagonal
    /// family) and s (family -> its constant) are mutually inverse.
    struct H0 {
        bool constants_only;  // true iff twist == 0
        std::function<Cochain(const SemiringElement&)> embed;
        std::function<std::optional<SemiringElement>(const Cochain&)> extract;
    };

    H0 h0() const {
        if (twist_ != 0)
            throw IncompatibleOperands("the H^0 = M statement is for the structure sheaf");
        H0 out;
        out.constants_only = twist_ == 0;
        out.embed = [this](const SemiringElement& a) {
            Cochain y = zero_cochain(0);
            for (auto& comp : y) comp = LaurentPoly::constant(X_.M, X_.vars(), a);
            return y;
        };
        out.extract = [this](const Cochain& y) -> std::optional<SemiringElement> {
            if (!is_cocycle(0, y)) return std::nullopt;
            // All components agree (identity restrictions); the common value
            // must be a constant: exponents >= 0 everywhere and sum 0.
            const auto& p = y[0];
            for (const auto& comp : y)
                if (!(comp == p)) return std::nullopt;
            if (p.is_zero()) return SemiringElement::zero(X_.M);
            if (!p.is_monomial()) return std::nullopt;
            const auto& [e, c] = *p.terms().begin();
            for (int v : e)
                if (v != 0) return std::nullopt;
            return c;
        };
        return out;
    }

    /// Z^0 membership forces equal components whose monomials are admissible
    /// on every chart; for the structure sheaf that pins them to constants.
    bool z0_is_constant_diagonal(const Cochain& y) const {
        auto c = h0().extract(y);
        return c.has_value();
    }

    struct VanishingWitness {
        Cochain u;       // = v, per the idempotency argument
        bool verified;   // t + d+(u) + d-(u) = d+(u) + d-(u), checked exactly
    };

    /// The proof-of-vanishing witness for a degree-p cocycle (p >= 1): each
    /// monomial of t_l is pushed down to the first omit-position whose chart
    /// variable has a nonnegative exponent; u = v assembled from the pieces.
    VanishingWitness vanishing_witness(int p, const Cochain& t) const {
        if (p < 1 || p > top_degree())
            throw IncompatibleOperands("vanishing witness needs 1 <= p <= n");
        if (!X_.M.is_idempotent())
            throw IncompatibleOperands("the vanishing argument needs idempotent M");
        if (!is_cocycle(p, t)) throw ValidationError("input is not a cocycle");
        const auto& ts = tuples(p);
        const auto& below = tuples(p - 1);
        std::map<Tuple, int> below_index;
        for (std::size_t i = 0; i < below.size(); ++i)
            below_index[below[i]] = static_cast<int>(i);
        Cochain u = zero_cochain(p - 1);
        for (std::size_t li = 0; li < ts.size(); ++li) {
            const Tuple& l = ts[li];
            for (const auto& [e, c] : t[li].terms()) {
                int pos = -1;
                for (std::size_t k = 0; k < l.size(); ++k)
                    if (e[l[k]] >= 0) {
                        pos = static_cast<int>(k);
                        break;
                    }
                if (pos < 0)
                    throw ValidationError(
                        "decomposition failure: a monomial fits no lower tuple");
                u[below_index.at(omit(l, pos))].add_term(e, c);
            }
        }
        bool ok = rho_verified(p, t, zero_cochain(p), u, u);
        return {std::move(u), ok};
    }

    /// Seeds a random degree-p cocycle: per random exponent vector, solve the
    /// even/odd max-balance constraints on the admissible tuple coefficients
    /// (dead-entry closure, then upward repair), and superpose the monomial
    /// layers.  Every per-exponent layer satisfies the cocycle condition, so
    /// the sum does too.
    Cochain random_cocycle(int p, std::mt19937_64& rng, int exp_bound = 3,
                           int monomials = 3) const {
        const auto& ts = tuples(p);
        std::map<Tuple, int> index_of;
        for (std::size_t i = 0; i < ts.size(); ++i) index_of[ts[i]] = static_cast<int>(i);
        Cochain t = zero_cochain(p);
        std::uniform_int_distribution<int> entry(-exp_bound, exp_bound);
        for (int made = 0; made < monomials; ++made) {
            // Random exponent vector of total degree `twist`.
            Exponents e(X_.vars());
            int attempts = 0;
            do {
                int sum = 0;
                for (int i = 0; i + 1 < X_.vars(); ++i) {
                    e[i] = entry(rng);
                    sum += e[i];
                }
                e[X_.vars() - 1] = twist_ - sum;
            } while (std::abs(e[X_.vars() - 1]) > exp_bound && ++attempts < 64);
            if (std::abs(e[X_.vars() - 1]) > exp_bound) continue;

            auto layer = solve_layer(p, e, rng);
            for (std::size_t i = 0; i < ts.size(); ++i)
                if (layer[i]) t[i].add_term(e, *layer[i]);
        }
        return t;
    }

private:
    Cochain differential(int degree, const Cochain& x, bool even) const {
        const auto& from = tuples(degree);
        const auto& to = tuples(degree + 1);
        if (x.size() != from.size()) throw IncompatibleOperands("cochain of wrong degree");
        std::map<Tuple, int> index_of;
        for (std::size_t i = 0; i < from.size(); ++i) index_of[from[i]] = static_cast<int>(i);
        Cochain out(to.size(), LaurentPoly::zero(X_.M, X_.vars()));
        for (std::size_t s = 0; s < to.size(); ++s)
            for (int k = 0; k < static_cast<int>(to[s].size()); ++k) {
                if ((k % 2 == 0) != even) continue;
                out[s] = out[s] + x[index_of.at(omit(to[s], k))];
            }
        return out;
    }

    /// One monomial layer: coefficients c_J over the admissible (p+1)-tuples
    /// J >= N(e) satisfying, at every (p+2)-tuple l >= N(e),
    ///   max over even omit-positions of c_{l \ k} = max over odd positions.
    std::vector<std::optional<SemiringElement>> solve_layer(int p, const Exponents& e,
                                                            std::mt19937_64& rng) const {
        const auto& ts = tuples(p);
        std::vector<std::optional<SemiringElement>> c(ts.size());
        Tuple neg;
        for (int i = 0; i < X_.vars(); ++i)
            if (e[i] < 0) neg.push_back(i);
        if (static_cast<int>(neg.size()) > p + 1) return c;

        auto admissible = [&](const Tuple& J) {
            return std::includes(J.begin(), J.end(), neg.begin(), neg.end());
        };
        std::map<Tuple, int> index_of;
        std::vector<bool> alive(ts.size(), false);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            index_of[ts[i]] = static_cast<int>(i);
            alive[i] = admissible(ts[i]);
        }

        // Constraints: per (p+2)-tuple containing the negative support, the
        // admissible omit-positions split by parity.
        struct Constraint {
            std::vector<int> evens, odds;  // indices into ts
        };
        std::vector<Constraint> constraints;
        for (const auto& l : tuples(p + 1)) {
            if (!std::includes(l.begin(), l.end(), neg.begin(), neg.end())) continue;
            Constraint con;
            for (int k = 0; k < static_cast<int>(l.size()); ++k) {
                Tuple J = omit(l, k);
                if (!admissible(J)) continue;
                (k % 2 == 0 ? con.evens : con.odds).push_back(index_of.at(J));
            }
            constraints.push_back(std::move(con));
        }

        // Dead closure: a side with no live entries forces the other side
        // to zero.
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& con : constraints) {
                auto any_alive = [&](const std::vector<int>& side) {
                    for (int j : side)
                        if (alive[j]) return true;
                    return false;
                };
                bool ae = any_alive(con.evens), ao = any_alive(con.odds);
                if (ae && !ao) {
                    for (int j : con.evens) alive[j] = false;
                    changed = true;
                } else if (ao && !ae) {
                    for (int j : con.odds) alive[j] = false;
                    changed = true;
                }
            }
        }
        bool any = false;
        for (std::size_t i = 0; i < ts.size(); ++i) any |= alive[i];
        if (!any) return c;

        // Random coefficients on the live entries.
        std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (!alive[i]) continue;
            if (X_.M.kind() == SemiringKind::QMax)
                c[i] = SemiringElement::number(X_.M, Rational(num(rng), den(rng)));
            else
                c[i] = SemiringElement::one(X_.M);
        }

        // Upward repair: raise the smaller side's first live entry to the
        // larger maximum.  Every raise strictly increases one entry toward
        // the global maximum, so the loop terminates well inside the cap;
        // an unbalanced layer after the cap is dropped.
        auto side_max = [&](const std::vector<int>& side) {
            std::optional<SemiringElement> m;
            for (int j : side) {
                if (!alive[j]) continue;
                m = m ? (*m + *c[j]) : *c[j];
            }
            return m;
        };
        int cap = static_cast<int>(ts.size() * constraints.size()) * 4 + 16;
        bool balanced = false;
        for (int pass = 0; pass < cap && !balanced; ++pass) {
            balanced = true;
            for (const auto& con : constraints) {
                auto me = side_max(con.evens), mo = side_max(con.odds);
                if (!me && !mo) continue;
                if (me && mo && *me == *mo) continue;
                balanced = false;
                bool raise_evens = canonical_leq(*me, *mo);
                const auto& side = raise_evens ? con.evens : con.odds;
                const auto target = raise_evens ? *mo : *me;
                for (int j : side)
                    if (alive[j]) {
                        c[j] = target;
                        break;
                    }
            }
        }
        if (!balanced) return std::vector<std::optional<SemiringElement>>(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (!alive[i]) c[i].reset();
        return c;
    }

    ProjectiveSpace X_;
    int twist_;
    std::vector<std::vector<Tuple>> tuples_;
};

/// An antisymmetric family of invertible monomial sections f_ij (i < j) on
/// the pairwise intersections of the standard cover; the cocycle law
/// f_ik = f_ij * f_jk is validated on every triple.
struct UnitCocycle {
    int n;
    std::map<std::pair<int, int>, UnitMonomial> f;  // keys i < j

    const UnitMonomial& at(int i, int j) const {
        auto it = f.find({i, j});
        if (it == f.end()) throw IncompatibleOperands("missing cocycle entry");
        return it->second;
    }
};

inline void validate_unit_cocycle(const ProjectiveSpace& X, const UnitCocycle& c) {
    if (c.n != X.n) throw IncompatibleOperands("cocycle on a different P^n");
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j) {
            const auto& m = c.at(i, j);
            if (!X.unit_section_space({i, j}).contains(m.poly()))
                throw ValidationError("entry " + std::to_string(i) + "," + std::to_string(j) +
                                      " is not a unit section on its intersection");
        }
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j)
            for (int k = j + 1; k <= X.n; ++k)
                if (c.at(i, k) != c.at(i, j) * c.at(j, k))
                    throw ValidationError("cocycle law fails on triple " + std::to_string(i) +
                                          "," + std::to_string(j) + "," + std::to_string(k));
}

/// The twisting cocycle of O_X(m): f_ij = x_i^m x_j^{-m}.
inline UnitCocycle twisting_cocycle(const ProjectiveSpace& X, int m) {
    UnitCocycle out;
    out.n = X.n;
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j) {
            Exponents e(X.vars(), 0);
            e[i] = m;
            e[j] = -m;
            out.f.emplace(std::make_pair(i, j),
                          UnitMonomial(SemiringElement::one(X.M), std::move(e)));
        }
    validate_unit_cocycle(X, out);
    return out;
}

/// Classification data of a unit cocycle: the common twist degree (the
/// exponent of x_i in f_ij, so that the twisting cocycle of O(m) classifies
/// to m) and the unit family q_ij with its multiplicativity verified.
struct CocycleClass {
    int degree;
    std::map<std::pair<int, int>, SemiringElement> q;
    std::map<std::pair<int, int>, SemiringElement> normalized_q;  // after dividing by
                                                                  // the q_{0j} coboundary
};

inline CocycleClass classify_cocycle(const ProjectiveSpace& X, const UnitCocycle& c) {
    if (!X.M.is_totally_ordered_idempotent() || !X.M.is_semifield())
        throw IncompatibleOperands(
            "classification is stated over totally ordered idempotent semifields");
    validate_unit_cocycle(X, c);
    CocycleClass out;
    std::optional<int> common;
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j) {
            const auto& m = c.at(i, j);
            int d = m.exp[i];
            if (m.exp[j] != -d)
                throw ValidationError("entry is not of the shape q x_i^m x_j^{-m}");
            if (common && *common != d)
                throw ValidationError("inconsistent twist exponents across pairs");
            common = d;
            out.q.emplace(std::make_pair(i, j), m.coef);
        }
    out.degree = *common;
    // q-multiplicativity (Eq. H1condition) on every triple.
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j)
            for (int k = j + 1; k <= X.n; ++k)
                if (out.q.at({i, k}) != out.q.at({i, j}) * out.q.at({j, k}))
                    throw ValidationError("q family is not multiplicative");
    // Normalize by the degree-0 coboundary built from q_{0j}: the result is
    // the all-ones family, making class equality a pure data comparison.
    auto q0 = [&](int j) {
        return j == 0 ? SemiringElement::one(X.M) : out.q.at({0, j});
    };
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j)
            out.normalized_q.emplace(std::make_pair(i, j),
                                     out.q.at({i, j}) * q0(i) * *q0(j).mul_inverse());
    return out;
}

/// Pointwise product of unit cocycles (the tensor of the line bundles).
inline UnitCocycle tensor_cocycles(const UnitCocycle& a, const UnitCocycle& b) {
    if (a.n != b.n) throw IncompatibleOperands("cocycles on different spaces");
    UnitCocycle out;
    out.n = a.n;
    for (const auto& [key, m] : a.f) out.f.emplace(key, m * b.f.at(key));
    return out;
}

/// Multiplicative verification of the degree-1 coboundary equation
/// f * d0+(u) * d0-(v) = f' * d0+(v) * d0-(u), entrywise:
/// f_ij u_j v_i = f'_ij v_j u_i.
inline bool unit_rho_verified(const ProjectiveSpace& X, const UnitCocycle& f,
                              const UnitCocycle& g, const std::vector<UnitMonomial>& u,
                              const std::vector<UnitMonomial>& v) {
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j)
            if (f.at(i, j) * u[j] * v[i] != g.at(i, j) * v[j] * u[i]) return false;
    return true;
}

/// Either a verified witness pair for [f] = [f'] or a proof of distinctness
/// (the twist degrees differ, and constant chart units cannot change the
/// exponents in Eq. solve).
struct CoboundaryWitness {
    std::vector<UnitMonomial> u, v;  // per chart; constants
    bool verified;
};
struct Distinctness {
    int degree_f, degree_g;
    std::pair<int, int> offending_pair;
};
using CoboundaryResult = std::variant<CoboundaryWitness, Distinctness>;

inline CoboundaryResult coboundary_witness(const ProjectiveSpace& X, const UnitCocycle& f,
                                           const UnitCocycle& g) {
    auto cf = classify_cocycle(X, f);
    auto cg = classify_cocycle(X, g);
    if (cf.degree != cg.degree) {
        // Chart units are constants, so Eq. solve needs equal exponents
        // entrywise; with different degrees every pair offends.
        return Distinctness{cf.degree, cg.degree, {0, 1}};
    }
    // Reduce to q' = 1: u_0 = v_0 = 1, then u_j = q'_{0j} / q_{0j} solves
    // q_ij u_j v_i = q'_ij v_j u_i chart by chart.
    std::vector<UnitMonomial> u, v;
    auto one = UnitMonomial::one(X.M, X.vars());
    u.push_back(one);
    v.assign(X.n + 1, one);
    for (int j = 1; j <= X.n; ++j) {
        auto qf = cf.q.at({0, j});
        auto qg = cg.q.at({0, j});
        u.push_back(UnitMonomial(qg * *qf.mul_inverse(), Exponents(X.vars(), 0)));
    }
    bool ok = unit_rho_verified(X, f, g, u, v);
    return CoboundaryWitness{std::move(u), std::move(v), ok};
}

/// Per-chart trivialization of O(m)-shaped data: e_i = q_i x_i^m with q_i a
/// unit.  The invertibility of e_i over its chart forces exactly this shape
/// (chart units are the constants M*).
struct Trivialization {
    int degree;
    std::vector<SemiringElement> q;  // one unit per chart

    Trivialization(int m, std::vector<SemiringElement> units) : degree(m), q(std::move(units)) {
        for (const auto& c : q)
            if (!c.is_unit()) throw IncompatibleOperands("basis section is not invertible");
    }
};

inline UnitCocycle cocycle_from_trivialization(const ProjectiveSpace& X,
                                               const Trivialization& t) {
    if (static_cast<int>(t.q.size()) != X.n + 1)
        throw IncompatibleOperands("one basis section per chart");
    UnitCocycle out;
    out.n = X.n;
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j) {
            Exponents e(X.vars(), 0);
            e[i] = t.degree;
            e[j] = -t.degree;
            out.f.emplace(std::make_pair(i, j),
                          UnitMonomial(t.q[i] * *t.q[j].mul_inverse(), std::move(e)));
        }
    validate_unit_cocycle(X, out);
    return out;
}

/// The rescaling-independence witness: with e'_i = g_i e_i the two cocycles
/// satisfy f * d0-(g) = f' * d0+(g), entrywise f_ij g_i = f'_ij g_j.
inline bool rescaling_witness_verified(const ProjectiveSpace& X, const UnitCocycle& f,
                                       const UnitCocycle& f_rescaled,
                                       const std::vector<SemiringElement>& g) {
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j) {
            auto lhs = f.at(i, j).coef * g[i];
            auto rhs = f_rescaled.at(i, j).coef * g[j];
            if (lhs != rhs || f.at(i, j).exp != f_rescaled.at(i, j).exp) return false;
        }
    return true;
}

/// A random classified cocycle of the given degree: q_{0j} free in M*, the
/// rest derived so the multiplicativity condition holds by construction.
inline UnitCocycle random_unit_cocycle(const ProjectiveSpace& X, int degree,
                                       std::mt19937_64& rng) {
    std::vector<SemiringElement> q0;
    q0.push_back(SemiringElement::one(X.M));
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (int j = 1; j <= X.n; ++j) {
        if (X.M.kind() == SemiringKind::QMax)
            q0.push_back(SemiringElement::number(X.M, Rational(num(rng), den(rng))));
        else if (X.M.kind() == SemiringKind::ZMax)
            q0.push_back(SemiringElement::number(X.M, num(rng)));
        else
            q0.push_back(SemiringElement::one(X.M));
    }
    UnitCocycle out;
    out.n = X.n;
    for (int i = 0; i <= X.n; ++i)
        for (int j = i + 1; j <= X.n; ++j) {
            Exponents e(X.vars(), 0);
            e[i] = degree;
            e[j] = -degree;
            out.f.emplace(std::make_pair(i, j),
                          UnitMonomial(q0[j] * *q0[i].mul_inverse(), std::move(e)));
        }
    validate_unit_cocycle(X, out);
    return out;
}

/// Pic(P^n) = Z: classes are twist degrees, the group law is the tensor
/// product, and the canonical representative of m is the twisting cocycle.
struct PicardGroup {
    ProjectiveSpace X;

    explicit PicardGroup(ProjectiveSpace space) : X(std::move(space)) {
        if (!X.M.is_totally_ordered_idempotent() || !X.M.is_semifield())
            throw IncompatibleOperands(
                "Pic classification is gated on totally ordered idempotent semifields");
    }

    int class_of(const UnitCocycle& f) const { return classify_cocycle(X, f).degree; }
    UnitCocycle representative(int m) const { return twisting_cocycle(X, m); }
    UnitCocycle law(const UnitCocycle& a, const UnitCocycle& b) const {
        return tensor_cocycles(a, b);
    }
};

}  // namespace semicech

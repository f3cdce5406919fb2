#pragma once

// The affine side: prime ideals of finite semiring tables, monomial
// localizations, the tropical partition-of-unity unit detection, and the
// unordered-cochain contraction that kills H^n(U, O*) on covers with a full
// chart.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "semicech/cech.hpp"
#include "semicech/laurent.hpp"

namespace semicech {

/// All prime ideals of a finite semiring table by exhaustive subset search:
/// ideals first (0 in I, closed under +, absorbing), then primality
/// (xy in I implies x in I or y in I), properness throughout.
inline std::vector<std::vector<int>> prime_ideals(const SemiringTable& s,
                                                  int size_guard = 16) {
    if (s.size() > size_guard) throw SizeGuardError("prime enumeration guarded at 16");
    std::vector<std::vector<int>> out;
    int n = s.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto in = [&](int x) { return (mask >> x) & 1u; };
        if (!in(s.zero()) || in(s.one())) continue;
        bool ideal = true;
        for (int a = 0; a < n && ideal; ++a) {
            if (!in(a)) continue;
            for (int b = 0; b < n && ideal; ++b) {
                if (in(b) && !in(s.add(a, b))) ideal = false;
                if (!in(s.mul(a, b))) ideal = false;  // absorbing
            }
        }
        if (!ideal) continue;
        bool prime = true;
        for (int a = 0; a < n && prime; ++a)
            for (int b = 0; b < n && prime; ++b)
                if (in(s.mul(a, b)) && !in(a) && !in(b)) prime = false;
        if (!prime) continue;
        std::vector<int> ideal_elems;
        for (int x = 0; x < n; ++x)
            if (in(x)) ideal_elems.push_back(x);
        out.push_back(std::move(ideal_elems));
    }
    return out;
}

/// A = M[x_0, ..., x_r]_g for a monomial g: Laurent polynomials whose
/// negative exponents sit inside supp(g).
struct MonomialLocalization {
    Semiring M;
    int vars;
    Exponents g;

    MonomialLocalization(Semiring coeff, int nvars, Exponents gexp)
        : M(std::move(coeff)), vars(nvars), g(std::move(gexp)) {
        if (static_cast<int>(g.size()) != vars)
            throw IncompatibleOperands("monomial has the wrong variable count");
        for (int e : g)
            if (e < 0) throw IncompatibleOperands("localize at an honest monomial");
    }

    bool in_g_support(int var) const { return g[var] > 0; }

    bool element_valid(const LaurentPoly& p) const {
        if (p.vars() != vars || !p.ring().same_as(M)) return false;
        for (const auto& [e, c] : p.terms())
            for (int i = 0; i < vars; ++i)
                if (e[i] < 0 && !in_g_support(i)) return false;
        return true;
    }

    /// x^e is a unit of A iff its support sits inside supp(g).
    bool unit_exponent(const Exponents& e) const {
        for (int i = 0; i < vars; ++i)
            if (e[i] != 0 && !in_g_support(i)) return false;
        return true;
    }
};

/// Outcome of the Nullstellensatz-certificate search.  On the supported
/// shape (semifield coefficients, monomial g) the monomial scan decides
/// exactly: a witness with constant term exactly 1, or a definite no.
/// Unsupported inputs are reported as such rather than guessed at.
struct CoverCertificate {
    enum class Status { Witness, NoWitness, Unsupported };
    Status status = Status::Unsupported;
    std::string note;
    std::vector<LaurentPoly> h;    // witness multipliers (all but one zero)
    int unit_index = -1;
    bool constant_term_is_one = false;   // sum h_i f_i has constant coefficient 1
    bool dominates_one = false;          // 1 + sum = sum in the canonical order
};

inline CoverCertificate cover_witness(const MonomialLocalization& A,
                                      const std::vector<LaurentPoly>& fs) {
    CoverCertificate out;
    if (!A.M.is_totally_ordered_idempotent() || !A.M.is_semifield()) {
        out.note = "coefficients are not a totally ordered idempotent semifield";
        return out;
    }
    if (fs.empty()) {
        out.note = "empty cover";
        return out;
    }
    for (const auto& f : fs)
        if (!A.element_valid(f)) {
            out.note = "cover element is not in the localization";
            return out;
        }
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (const auto& [e, c] : fs[i].terms()) {
            if (!A.unit_exponent(e)) continue;
            // Unit monomial found: h_i = its inverse, everything else 0.
            out.status = CoverCertificate::Status::Witness;
            out.unit_index = static_cast<int>(i);
            out.h.assign(fs.size(), LaurentPoly::zero(A.M, A.vars));
            out.h[i] = LaurentPoly::monomial(A.M, exp_neg(e), *c.mul_inverse());
            LaurentPoly sum = LaurentPoly::zero(A.M, A.vars);
            for (std::size_t k = 0; k < fs.size(); ++k) sum = sum + out.h[k] * fs[k];
            auto it = sum.terms().find(Exponents(A.vars, 0));
            out.constant_term_is_one =
                it != sum.terms().end() && it->second == SemiringElement::one(A.M);
            out.dominates_one = sum + LaurentPoly::one(A.M, A.vars) == sum;
            return out;
        }
    out.status = CoverCertificate::Status::NoWitness;
    out.note = "no cover element contains a unit monomial";
    return out;
}

/// The certified unit inside a covering family: the first f_i containing a
/// unit monomial, with the inverse exhibited and the product re-verified.
struct UnitDetection {
    int index;
    UnitMonomial monomial;
    UnitMonomial inverse;
    bool exact_unit;      // f_i equals the monomial (else the unit sits in a sum)
    bool product_is_one;  // monomial * inverse == 1, checked exactly
};

inline std::optional<UnitDetection> detect_unit(const MonomialLocalization& A,
                                                const std::vector<LaurentPoly>& fs) {
    auto cert = cover_witness(A, fs);
    if (cert.status != CoverCertificate::Status::Witness) return std::nullopt;
    const auto& f = fs[cert.unit_index];
    for (const auto& [e, c] : f.terms()) {
        if (!A.unit_exponent(e)) continue;
        UnitMonomial m(c, e);
        auto inv = m.inverse();
        bool ok = (m * inv) == UnitMonomial::one(A.M, A.vars);
        return UnitDetection{cert.unit_index, m, inv, f.is_monomial(), ok};
    }
    return std::nullopt;
}

/// A principal-open cover of Spec A by monomial charts f_i = q_i x^{e_i}.
/// The unit group over a tuple of charts is {q x^e : supp(e) inside
/// supp(g) + the charts' supports}; these are the unordered O* cochain
/// values.
struct AffineCover {
    MonomialLocalization A;
    std::vector<UnitMonomial> charts;

    AffineCover(MonomialLocalization loc, std::vector<UnitMonomial> fs)
        : A(std::move(loc)), charts(std::move(fs)) {
        if (charts.empty()) throw IncompatibleOperands("empty cover");
        for (const auto& c : charts)
            if (!A.element_valid(c.poly()))
                throw IncompatibleOperands("chart monomial is not in the localization");
    }

    int num_charts() const { return static_cast<int>(charts.size()); }

    bool allowed_var(const Tuple& tuple, int var) const {
        if (A.in_g_support(var)) return true;
        for (int i : tuple)
            if (charts[i].exp[var] != 0) return true;
        return false;
    }

    bool value_valid(const Tuple& tuple, const UnitMonomial& m) const {
        for (int v = 0; v < A.vars; ++v)
            if (m.exp[v] != 0 && !allowed_var(tuple, v)) return false;
        return true;
    }

    /// The full-chart condition: f_i a unit of A itself, so that
    /// O*(D(f_i) cap V) = O*(V) on the nose.
    bool chart_is_full(int i) const { return A.unit_exponent(charts[i].exp); }
};

/// Unordered multiplicative cochains of O* on an affine cover: degree n is
/// indexed by all tuples in I^{n+1} (repeats allowed).
class AffineUnitModel {
public:
    using Cochain = std::vector<UnitMonomial>;  // parallel to tuples(degree)

    AffineUnitModel(AffineCover cover, int max_degree) : cover_(std::move(cover)) {
        for (int n = 0; n <= max_degree + 1; ++n) {
            std::vector<Tuple> ts;
            Tuple t(n + 1, 0);
            build(0, t, ts);
            tuples_.push_back(std::move(ts));
            index_.emplace_back();
            for (std::size_t i = 0; i < tuples_[n].size(); ++i)
                index_[n][tuples_[n][i]] = static_cast<int>(i);
        }
    }

    const AffineCover& cover() const { return cover_; }
    const std::vector<Tuple>& tuples(int n) const { return tuples_.at(n); }

    Cochain ones(int n) const {
        return Cochain(tuples_.at(n).size(),
                       UnitMonomial::one(cover_.A.M, cover_.A.vars));
    }

    bool member(int n, const Cochain& x) const {
        const auto& ts = tuples_.at(n);
        if (x.size() != ts.size()) return false;
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (!cover_.value_valid(ts[i], x[i])) return false;
        return true;
    }

    /// Classical multiplicative coboundary:
    /// (dx)_{i0...i_{n+1}} = prod_k (x_{omit k})^{(-1)^k}.
    Cochain coboundary(int n, const Cochain& x) const {
        const auto& to = tuples_.at(n + 1);
        Cochain out;
        out.reserve(to.size());
        for (const auto& t : to) {
            UnitMonomial acc = UnitMonomial::one(cover_.A.M, cover_.A.vars);
            for (int k = 0; k < static_cast<int>(t.size()); ++k) {
                const auto& val = x[index_.at(n).at(omit(t, k))];
                acc = acc * (k % 2 == 0 ? val : val.inverse());
            }
            out.push_back(acc);
        }
        return out;
    }

    /// The +/- reading of the same differential: products over even/odd
    /// omissions, no inverses.
    Cochain d_plus(int n, const Cochain& x) const { return half_differential(n, x, true); }
    Cochain d_minus(int n, const Cochain& x) const { return half_differential(n, x, false); }

    bool is_cocycle(int n, const Cochain& y) const {
        return coboundary(n, y) == ones(n + 1);
    }

    /// Contraction along a full chart i: x_{i0...i_{n-1}} = y_{i,i0,...,i_{n-1}}.
    struct Contraction {
        Cochain x;
        bool valid_member;   // x lands in the right unit groups
        bool reproduces_y;   // d(x) = y, checked exactly
    };

    Contraction contract_unit_cocycle(int full_chart, int n, const Cochain& y) const {
        if (!cover_.chart_is_full(full_chart))
            throw IncompatibleOperands("distinguished chart is not all of Spec A");
        if (n < 1) throw IncompatibleOperands("contraction needs degree >= 1");
        if (!member(n, y) || !is_cocycle(n, y))
            throw ValidationError("input is not an unordered O* cocycle");
        const auto& below = tuples_.at(n - 1);
        Cochain x;
        x.reserve(below.size());
        for (const auto& J : below) {
            Tuple iJ;
            iJ.push_back(full_chart);
            iJ.insert(iJ.end(), J.begin(), J.end());
            x.push_back(y[index_.at(n).at(iJ)]);
        }
        bool mem = member(n - 1, x);
        bool ok = coboundary(n - 1, x) == y;
        return {std::move(x), mem, ok};
    }

    /// Random valid cochain: per tuple, a random unit monomial supported on
    /// the tuple's allowed variables.
    Cochain random_cochain(int n, std::mt19937_64& rng, int exp_bound = 2) const {
        const auto& ts = tuples_.at(n);
        Cochain out;
        std::uniform_int_distribution<int> expd(-exp_bound, exp_bound);
        std::uniform_int_distribution<int> num(-8, 8), den(1, 3);
        for (const auto& t : ts) {
            Exponents e(cover_.A.vars, 0);
            for (int v = 0; v < cover_.A.vars; ++v)
                if (cover_.allowed_var(t, v)) e[v] = expd(rng);
            SemiringElement c = cover_.A.M.kind() == SemiringKind::QMax
                                    ? SemiringElement::number(cover_.A.M,
                                                              Rational(num(rng), den(rng)))
                                    : SemiringElement::one(cover_.A.M);
            out.emplace_back(c, e);
        }
        return out;
    }

private:
    void build(std::size_t pos, Tuple& t, std::vector<Tuple>& out) const {
        if (pos == t.size()) {
            out.push_back(t);
            return;
        }
        for (int v = 0; v < cover_.num_charts(); ++v) {
            t[pos] = v;
            build(pos + 1, t, out);
        }
    }

    Cochain half_differential(int n, const Cochain& x, bool even) const {
        const auto& to = tuples_.at(n + 1);
        Cochain out;
        out.reserve(to.size());
        for (const auto& t : to) {
            UnitMonomial acc = UnitMonomial::one(cover_.A.M, cover_.A.vars);
            for (int k = 0; k < static_cast<int>(t.size()); ++k) {
                if ((k % 2 == 0) != even) continue;
                acc = acc * x[index_.at(n).at(omit(t, k))];
            }
            out.push_back(acc);
        }
        return out;
    }

    AffineCover cover_;
    std::vector<std::vector<Tuple>> tuples_;
    std::vector<std::map<Tuple, int>> index_;
};

}  // namespace semicech

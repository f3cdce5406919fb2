#pragma once

// Multivariate Laurent polynomials over a coefficient semiring, plus the
// section spaces they carve out on the standard charts of projective space.
// Restriction between charts is the identity embedding: every section lives
// in one common Laurent semiring and the chart only constrains which
// exponents are allowed.

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "semicech/semiring.hpp"

namespace semicech {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponents exp_neg(const Exponents& a) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

/// A finitely supported map exponent vector -> nonzero coefficient.
class LaurentPoly {
public:
    LaurentPoly(Semiring ring, int vars) : ring_(std::move(ring)), vars_(vars) {}

    static LaurentPoly zero(const Semiring& r, int vars) { return LaurentPoly(r, vars); }

    static LaurentPoly monomial(const Semiring& r, Exponents e, SemiringElement c) {
        LaurentPoly p(r, static_cast<int>(e.size()));
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    static LaurentPoly constant(const Semiring& r, int vars, SemiringElement c) {
        return monomial(r, Exponents(vars, 0), std::move(c));
    }

    static LaurentPoly one(const Semiring& r, int vars) {
        return constant(r, vars, SemiringElement::one(r));
    }

    const Semiring& ring() const { return ring_; }
    int vars() const { return vars_; }
    const std::map<Exponents, SemiringElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }

    /// Accumulates c * x^e into the term map, pruning zero results.
    void add_term(Exponents e, SemiringElement c) {
        if (static_cast<int>(e.size()) != vars_)
            throw IncompatibleOperands("exponent vector of wrong length");
        if (!ring_.same_as(c.ring()))
            throw IncompatibleOperands("coefficient from a different semiring");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            auto sum = it->second + c;
            if (sum.is_zero())
                terms_.erase(it);
            else
                it->second = sum;
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        check_ambient(o);
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        check_ambient(o);
        LaurentPoly r(ring_, vars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                r.add_term(exp_add(e1, e2), c1 * c2);
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        check_ambient(o);
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [e, c] : terms_) {
            if (e != it->first || c != it->second) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Multiplication by x^{-g}: localization of p at the monomial x^g.
    LaurentPoly localize(const Exponents& g) const {
        LaurentPoly r(ring_, vars_);
        for (const auto& [e, c] : terms_) r.add_term(exp_sub(e, g), c);
        return r;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != degree) return false;
        return true;
    }

    /// Inverse of a single invertible monomial, if it is one.
    std::optional<LaurentPoly> monomial_inverse() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [e, c] = *terms_.begin();
        auto ci = c.mul_inverse();
        if (!ci) return std::nullopt;
        return monomial(ring_, exp_neg(e), *ci);
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += c.str();
            for (int i = 0; i < vars_; ++i) {
                if (e[i] == 0) continue;
                out += "*";
                out += i < static_cast<int>(names.size()) ? names[i]
                                                          : "x" + std::to_string(i);
                if (e[i] != 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

private:
    void check_ambient(const LaurentPoly& o) const {
        if (vars_ != o.vars_ || !ring_.same_as(o.ring_))
            throw IncompatibleOperands("Laurent polynomials from different ambients");
    }

    Semiring ring_;
    int vars_;
    std::map<Exponents, SemiringElement> terms_;
};

enum class PolyOp { Add, Mul };

inline LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op) {
    return op == PolyOp::Add ? a + b : a * b;
}

/// Localization of p at the honest monomial x^g (g >= 0 entrywise).
inline LaurentPoly localize_monomial(const LaurentPoly& p, const Exponents& g) {
    for (int gi : g)
        if (gi < 0) throw IncompatibleOperands("localization wants an honest monomial");
    return p.localize(g);
}

/// Degree-m sections of the twisted structure sheaf on the chart intersection
/// U_{i0...ik} of P^n: Laurent polynomials all of whose monomials have total
/// degree m and nonnegative exponents on every variable outside the tuple.
struct SectionSpace {
    int num_vars = 0;          // n + 1
    std::vector<int> tuple;    // strictly increasing chart indices
    int degree = 0;            // m

    SectionSpace() = default;
    SectionSpace(int nv, std::vector<int> t, int m)
        : num_vars(nv), tuple(std::move(t)), degree(m) {
        if (tuple.empty()) throw IncompatibleOperands("empty chart tuple");
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] < 0 || tuple[i] >= num_vars)
                throw IncompatibleOperands("chart index out of range");
            if (i > 0 && tuple[i - 1] >= tuple[i])
                throw IncompatibleOperands("chart tuple must strictly increase");
        }
    }

    bool in_tuple(int j) const {
        return std::binary_search(tuple.begin(), tuple.end(), j);
    }

    bool admits_exponent(const Exponents& e) const {
        if (static_cast<int>(e.size()) != num_vars) return false;
        if (total_degree(e) != degree) return false;
        for (int j = 0; j < num_vars; ++j)
            if (e[j] < 0 && !in_tuple(j)) return false;
        return true;
    }

    bool contains(const LaurentPoly& p) const {
        if (p.vars() != num_vars) return false;
        for (const auto& [e, c] : p.terms())
            if (!admits_exponent(e)) return false;
        return true;
    }

    /// All admissible exponent vectors with entries bounded by |e_i| <= bound.
    std::vector<Exponents> monomial_exponents(int bound) const {
        std::vector<Exponents> out;
        Exponents e(num_vars, 0);
        enumerate(0, bound, e, out);
        return out;
    }

private:
    void enumerate(int pos, int bound, Exponents& e, std::vector<Exponents>& out) const {
        if (pos == num_vars) {
            if (admits_exponent(e)) out.push_back(e);
            return;
        }
        int lo = in_tuple(pos) ? -bound : 0;
        for (int v = lo; v <= bound; ++v) {
            e[pos] = v;
            enumerate(pos + 1, bound, e, out);
        }
        e[pos] = 0;
    }
};

/// Invertible degree-0 sections on U_{i0...ik}: single monomials q x^e with
/// q a unit, total degree 0 and support inside the tuple.
struct UnitSectionSpace {
    int num_vars = 0;
    std::vector<int> tuple;

    UnitSectionSpace() = default;
    UnitSectionSpace(const Semiring& ring, int nv, std::vector<int> t)
        : num_vars(nv), tuple(std::move(t)) {
        if (!ring.is_semifield())
            throw IncompatibleOperands("unit sections need semifield coefficients");
        SectionSpace check(num_vars, tuple, 0);  // validates the tuple
    }

    bool in_tuple(int j) const {
        return std::binary_search(tuple.begin(), tuple.end(), j);
    }

    bool admits_exponent(const Exponents& e) const {
        if (static_cast<int>(e.size()) != num_vars) return false;
        if (total_degree(e) != 0) return false;
        for (int j = 0; j < num_vars; ++j)
            if (e[j] != 0 && !in_tuple(j)) return false;
        return true;
    }

    bool contains(const LaurentPoly& p) const {
        if (p.vars() != num_vars || !p.is_monomial()) return false;
        const auto& [e, c] = *p.terms().begin();
        return admits_exponent(e) && c.is_unit();
    }

    std::vector<Exponents> monomial_exponents(int bound) const {
        std::vector<Exponents> out;
        Exponents e(num_vars, 0);
        enumerate(0, bound, e, out);
        return out;
    }

private:
    void enumerate(int pos, int bound, Exponents& e, std::vector<Exponents>& out) const {
        if (pos == num_vars) {
            if (admits_exponent(e)) out.push_back(e);
            return;
        }
        if (!in_tuple(pos)) {
            e[pos] = 0;
            enumerate(pos + 1, bound, e, out);
            return;
        }
        for (int v = -bound; v <= bound; ++v) {
            e[pos] = v;
            enumerate(pos + 1, bound, e, out);
        }
        e[pos] = 0;
    }
};

/// A single invertible monomial q x^e (q a unit), the currency of O*
/// computations.  Multiplication and inversion stay exact.
struct UnitMonomial {
    SemiringElement coef;
    Exponents exp;

    UnitMonomial(SemiringElement c, Exponents e) : coef(std::move(c)), exp(std::move(e)) {
        if (!coef.is_unit()) throw IncompatibleOperands("coefficient is not a unit");
    }

    static UnitMonomial one(const Semiring& r, int vars) {
        return UnitMonomial(SemiringElement::one(r), Exponents(vars, 0));
    }

    UnitMonomial operator*(const UnitMonomial& o) const {
        return UnitMonomial(coef * o.coef, exp_add(exp, o.exp));
    }

    UnitMonomial inverse() const {
        return UnitMonomial(*coef.mul_inverse(), exp_neg(exp));
    }

    UnitMonomial pow(int k) const {
        UnitMonomial base = k < 0 ? inverse() : *this;
        int steps = k < 0 ? -k : k;
        UnitMonomial acc = one(coef.ring(), static_cast<int>(exp.size()));
        for (int i = 0; i < steps; ++i) acc = acc * base;
        return acc;
    }

    bool operator==(const UnitMonomial& o) const { return coef == o.coef && exp == o.exp; }
    bool operator!=(const UnitMonomial& o) const { return !(*this == o); }

    LaurentPoly poly() const { return LaurentPoly::monomial(coef.ring(), exp, coef); }

    std::string str() const { return poly().str(); }
};

inline SectionSpace section_space(int n, std::vector<int> tuple, int m) {
    return SectionSpace(n + 1, std::move(tuple), m);
}

inline UnitSectionSpace unit_sections(const Semiring& ring, int n, std::vector<int> tuple) {
    return UnitSectionSpace(ring, n + 1, std::move(tuple));
}

/// A Laurent polynomial together with the chart tuple and homogeneous degree
/// it claims to be a section for; validated on construction.
struct ChartSection {
    LaurentPoly poly;
    std::vector<int> chart_tuple;
    int homogeneous_degree;

    ChartSection(LaurentPoly p, std::vector<int> t, int m)
        : poly(std::move(p)), chart_tuple(std::move(t)), homogeneous_degree(m) {
        SectionSpace space(poly.vars(), chart_tuple, homogeneous_degree);
        if (!space.contains(poly))
            throw ValidationError("polynomial is not a section on this chart tuple");
    }
};

}  // namespace semicech

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "semicech/laurent.hpp"

using namespace semicech;

namespace {

LaurentPoly qm(const Semiring& r, Exponents e, const char* coef) {
    return LaurentPoly::monomial(r, std::move(e), SemiringElement::parse(r, coef));
}

/// Brute-force product oracle over B: a monomial appears in the product iff
/// it is an exponent sum of one term from each factor (coefficients in B
/// collapse to 1).
std::set<Exponents> oracle_product_support(const LaurentPoly& a, const LaurentPoly& b) {
    std::set<Exponents> out;
    for (const auto& [e1, c1] : a.terms())
        for (const auto& [e2, c2] : b.terms()) out.insert(exp_add(e1, e2));
    return out;
}

LaurentPoly random_section(std::mt19937_64& rng, const SectionSpace& space, int bound,
                           int max_terms) {
    auto q = Semiring::qmax();
    auto exps = space.monomial_exponents(bound);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<std::size_t> pick(0, exps.size() - 1);
    LaurentPoly p(q, space.num_vars);
    int k = count(rng);
    for (int i = 0; i < k; ++i)
        p.add_term(exps[pick(rng)], fixtures::random_qmax(rng));
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic over qmax and B") {
    auto q = Semiring::qmax();

    // (0*T) + (0*T) = 0*T: idempotent absorption of equal monomials.
    auto t0 = qm(q, {1}, "0");
    CHECK(poly_arith(t0, t0, PolyOp::Add) == t0);

    // (2*T) * (3*T^-1) = 5: tropical mul is rational addition.
    auto a = qm(q, {1}, "2");
    auto b = qm(q, {-1}, "3");
    CHECK(poly_arith(a, b, PolyOp::Mul) == LaurentPoly::constant(q, 1, SemiringElement::parse(q, "5")));

    // Over B, (T + 1)^2 = T^2 + T + 1.
    auto bb = Semiring::boolean();
    auto one = SemiringElement::one(bb);
    LaurentPoly tp1(bb, 1);
    tp1.add_term({1}, one);
    tp1.add_term({0}, one);
    auto sq = tp1 * tp1;
    auto support = oracle_product_support(tp1, tp1);
    REQUIRE(support == std::set<Exponents>{{0}, {1}, {2}});
    LaurentPoly expect(bb, 1);
    for (const auto& e : support) expect.add_term(e, one);
    CHECK(sq == expect);

    CHECK_THROWS_AS(tp1 + t0, IncompatibleOperands);
}

TEST_CASE("localization at monomials") {
    auto b = Semiring::boolean();
    auto one = SemiringElement::one(b);

    auto p = LaurentPoly::monomial(b, {2, 1}, one);  // x0^2 x1
    CHECK(localize_monomial(p, {1, 0}) == LaurentPoly::monomial(b, {1, 1}, one));

    CHECK(localize_monomial(LaurentPoly::one(b, 2), {1, 1}) ==
          LaurentPoly::monomial(b, {-1, -1}, one));

    LaurentPoly s(b, 2);
    s.add_term({1, 0}, one);
    s.add_term({0, 1}, one);
    LaurentPoly expect(b, 2);
    expect.add_term({0, 0}, one);
    expect.add_term({-1, 1}, one);
    CHECK(localize_monomial(s, {1, 0}) == expect);

    CHECK_THROWS_AS(localize_monomial(p, {-1, 0}), IncompatibleOperands);
}

TEST_CASE("section spaces on projective charts") {
    auto q = Semiring::qmax();

    // P^1, U_01: all of M[T, 1/T] with T = x1/x0.
    auto s01 = section_space(1, {0, 1}, 0);
    for (int k = -4; k <= 4; ++k)
        CHECK(s01.contains(qm(q, {-k, k}, "3/2")));
    CHECK_FALSE(s01.contains(qm(q, {1, 1}, "0")));  // degree 2

    // P^2, U_0: polynomials in x1/x0, x2/x0.
    auto s0 = section_space(2, {0}, 0);
    CHECK(s0.contains(qm(q, {-3, 1, 2}, "1")));
    CHECK_FALSE(s0.contains(qm(q, {1, -1, 0}, "1")));  // x1 exponent negative
    auto exps = s0.monomial_exponents(2);
    for (const auto& e : exps) {
        CHECK(total_degree(e) == 0);
        CHECK(e[1] >= 0);
        CHECK(e[2] >= 0);
    }
    // Exponents with |e_i| <= 2: e = (-(a+b), a, b) needs a + b <= 2.
    CHECK(exps.size() == 6);

    // P^2, U_012: any degree-0 exponents.
    auto s012 = section_space(2, {0, 1, 2}, 0);
    CHECK(s012.contains(qm(q, {-1, -1, 2}, "1")));
    CHECK_FALSE(s012.contains(qm(q, {-1, -1, 1}, "1")));

    // Twisted sections: degree m.
    auto s0_2 = section_space(2, {0}, 2);
    CHECK(s0_2.contains(qm(q, {0, 1, 1}, "1")));
    CHECK(s0_2.contains(qm(q, {-1, 2, 1}, "1")));
    CHECK_FALSE(s0_2.contains(qm(q, {0, 0, 1}, "1")));

    CHECK_THROWS_AS(section_space(2, {}, 0), IncompatibleOperands);
    CHECK_THROWS_AS(section_space(2, {1, 0}, 0), IncompatibleOperands);

    ChartSection ok(qm(q, {-2, 2, 0}, "1"), {0, 1}, 0);
    CHECK(ok.homogeneous_degree == 0);
    CHECK_THROWS_AS(ChartSection(qm(q, {-2, 1, 0}, "1"), {0, 1}, 0), ValidationError);
}

TEST_CASE("unit section spaces") {
    auto q = Semiring::qmax();

    auto u01 = unit_sections(q, 1, {0, 1});
    for (int k = -3; k <= 3; ++k)
        CHECK(u01.contains(qm(q, {-k, k}, "7/3")));
    {
        LaurentPoly sum(q, 2);
        sum.add_term({-1, 1}, SemiringElement::parse(q, "1"));
        sum.add_term({1, -1}, SemiringElement::parse(q, "1"));
        CHECK_FALSE(u01.contains(sum));  // not a single monomial
    }

    // Single-chart unit sections are the constants M*.
    auto u0 = unit_sections(q, 2, {0});
    CHECK(u0.contains(qm(q, {0, 0, 0}, "5")));
    CHECK_FALSE(u0.contains(qm(q, {-1, 1, 0}, "5")));
    CHECK(u0.monomial_exponents(3).size() == 1);

    auto u012 = unit_sections(q, 2, {0, 1, 2});
    CHECK(u012.contains(qm(q, {1, 2, -3}, "-4")));
    CHECK_FALSE(u012.contains(qm(q, {1, 2, -2}, "-4")));

    CHECK_THROWS_AS(unit_sections(Semiring::naturals(), 1, {0, 1}), IncompatibleOperands);
}

TEST_CASE("laurent invariants") {
    std::mt19937_64 rng(67);
    auto q = Semiring::qmax();

    // Multiplication adds homogeneous degrees.
    for (int iter = 0; iter < 50; ++iter) {
        auto a = random_section(rng, section_space(2, {0, 1}, 1), 2, 3);
        auto b = random_section(rng, section_space(2, {0, 1}, 2), 2, 3);
        CHECK((a * b).is_homogeneous(3));
    }

    // Products of unit sections are unit sections; inverses multiply to 1.
    auto u01 = unit_sections(q, 2, {0, 1});
    auto uexp = u01.monomial_exponents(3);
    std::uniform_int_distribution<std::size_t> pick(0, uexp.size() - 1);
    for (int iter = 0; iter < 50; ++iter) {
        auto f = LaurentPoly::monomial(q, uexp[pick(rng)], fixtures::random_qmax_unit(rng));
        auto g = LaurentPoly::monomial(q, uexp[pick(rng)], fixtures::random_qmax_unit(rng));
        CHECK(u01.contains(f * g));
        auto fi = f.monomial_inverse();
        REQUIRE(fi.has_value());
        CHECK(f * *fi == LaurentPoly::one(q, 3));
    }

    // p + p = p over idempotent coefficients.
    for (int iter = 0; iter < 50; ++iter) {
        auto p = random_section(rng, section_space(2, {0, 2}, 0), 3, 4);
        CHECK(p + p == p);
    }

    // Membership is monotone under tuple inclusion (restriction embeds).
    auto small = section_space(2, {1}, 0);
    auto big = section_space(2, {1, 2}, 0);
    for (int iter = 0; iter < 50; ++iter) {
        auto p = random_section(rng, small, 2, 3);
        CHECK(big.contains(p));
    }
}

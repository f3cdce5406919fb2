#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "semicech/semimodule.hpp"

using namespace semicech;

namespace {

Semiring B() { return Semiring::table(fixtures::boolean_table()); }

FiniteSemimodule boolean_square() {
    auto r = FiniteSemimodule::regular(B());
    return FiniteSemimodule::product({r, r}, B());
}

/// Oracle: the cancellation relation a ~ b iff some c has a + c = b + c,
/// found by a triple loop with no reuse of the library search.
std::set<std::pair<int, int>> oracle_cancellation_pairs(const FiniteSemimodule& m) {
    std::set<std::pair<int, int>> rel;
    for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
            for (int c = 0; c < m.size(); ++c)
                if (m.add(a, c) == m.add(b, c)) {
                    rel.emplace(a, b);
                    break;
                }
    return rel;
}

}  // namespace

TEST_CASE("module validation catches broken axioms") {
    auto b = B();
    // 2-element module with a non-commutative addition.
    CHECK_THROWS_AS(FiniteSemimodule(b, 2, 0, {{0, 1}, {0, 1}}, {{0, 0}, {0, 1}}),
                    ValidationError);
    // Scalar action that ignores 0_R.
    CHECK_THROWS_AS(FiniteSemimodule(b, 2, 0, {{0, 1}, {1, 1}}, {{0, 1}, {0, 1}}),
                    ValidationError);
    // The regular module validates.
    CHECK(FiniteSemimodule::regular(b).size() == 2);
}

TEST_CASE("congruence closure by saturation") {
    auto m = boolean_square();
    // Encoding: index = 2*first + second, so (1,0) = 2, (0,1) = 1.

    auto id = congruence_closure(m, {});
    CHECK(id.num_classes() == 4);

    auto id2 = congruence_closure(m, {{0, 0}});
    CHECK(id2 == id);

    // Merging (1,0) ~ (0,1) drags in (1,1): saturation adds
    // (1,0)+(0,1) = (1,1) ~ (0,1)+(0,1) = (0,1).
    auto c = congruence_closure(m, {{2, 1}});
    CHECK(c.num_classes() == 2);
    CHECK(c.related(1, 2));
    CHECK(c.related(1, 3));
    CHECK_FALSE(c.related(0, 1));
    CHECK(c.is_congruence_on(m));

    // Least fixpoint: the subset {} generates a strictly finer partition.
    CHECK(id.num_classes() > c.num_classes());

    CHECK_THROWS_AS(congruence_closure(m, {{0, 7}}), IncompatibleOperands);
}

TEST_CASE("quotients") {
    auto m = boolean_square();

    auto q_id = quotient(m, Congruence::discrete(4));
    CHECK(q_id.module.size() == 4);
    REQUIRE(find_isomorphism(q_id.module, m).has_value());

    auto total = congruence_closure(m, {{0, 1}, {1, 2}, {2, 3}});
    auto q_tot = quotient(m, total);
    CHECK(q_tot.module.size() == 1);

    auto c = congruence_closure(m, {{2, 1}});
    auto q = quotient(m, c);
    CHECK(q.module.size() == 2);
    REQUIRE(find_isomorphism(q.module, FiniteSemimodule::regular(B())).has_value());
    // Projection sends the zero class to zero and everything else together.
    CHECK(q.projection(0) == q.module.zero());
    CHECK(q.projection(1) == q.projection(3));

    // A raw relation that is not a congruence is rejected.
    std::vector<int> rep{0, 0, 2, 3};  // merges 0 ~ (0,1) only
    CHECK_THROWS_AS(quotient(m, Congruence(std::move(rep))), ValidationError);
}

TEST_CASE("quotient universal property on a small instance") {
    auto m = boolean_square();
    std::vector<std::pair<int, int>> gen{{2, 1}};
    auto c = congruence_closure(m, gen);
    auto q = quotient(m, c);
    auto p = FiniteSemimodule::regular(B());

    for (const auto& h : all_homs(m, p)) {
        bool equalizes = true;
        for (auto [a, b] : gen) equalizes &= h(a) == h(b);
        if (!equalizes) continue;
        // h must be constant on classes and factor through the projection.
        std::vector<int> bar(q.module.size());
        for (int cls = 0; cls < q.module.size(); ++cls) bar[cls] = h(q.class_reps[cls]);
        SemimoduleHom hbar(q.module, p, bar);
        for (int a = 0; a < m.size(); ++a) CHECK(hbar(q.projection(a)) == h(a));
    }
}

TEST_CASE("golan tensor collapse") {
    // Symbolic rules for the builtins.
    CHECK(golan_collapse_symbolic(Semiring::zmax()).collapses_to_zero);
    CHECK(golan_collapse_symbolic(Semiring::qmax()).collapses_to_zero);
    CHECK(golan_collapse_symbolic(Semiring::boolean()).collapses_to_zero);
    CHECK_FALSE(golan_collapse_symbolic(Semiring::naturals()).collapses_to_zero);

    // B over B: 1 ~ 0 via witness c = 1.
    auto breg = FiniteSemimodule::regular(B());
    auto gb = golan_tensor_collapse(breg);
    CHECK(gb.quotient_module.size() == 1);

    // Truncated naturals {0..3}: c = 3 is absorbing, so everything is
    // cancellation-related and the quotient is trivial.  The oracle decides.
    auto sat = FiniteSemimodule::regular(Semiring::table(fixtures::truncated_naturals(3)));
    auto rel = oracle_cancellation_pairs(sat);
    bool oracle_total = true;
    for (int a = 0; a < sat.size(); ++a)
        for (int b = 0; b < sat.size(); ++b) oracle_total &= rel.count({a, b}) > 0;
    REQUIRE(oracle_total);
    CHECK(golan_tensor_collapse(sat).quotient_module.size() == 1);

    // A cancellative module (Z/4 over Z/4) keeps its size: the relation is
    // equality, so the quotient is all of M.
    auto z4 = FiniteSemimodule::regular(Semiring::table(fixtures::zmod_table(4)));
    auto rel4 = oracle_cancellation_pairs(z4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) REQUIRE((rel4.count({a, b}) > 0) == (a == b));
    CHECK(golan_tensor_collapse(z4).quotient_module.size() == 4);

    // Any finite idempotent module with a maximum collapses (chain tops).
    for (int n = 2; n <= 5; ++n) {
        auto chain = FiniteSemimodule::regular(Semiring::table(fixtures::chain_semiring(n)));
        CHECK(golan_tensor_collapse(chain).quotient_module.size() == 1);
    }
}

TEST_CASE("hom semimodules") {
    auto b = B();
    auto breg = FiniteSemimodule::regular(b);
    auto b2 = boolean_square();
    auto z = FiniteSemimodule::zero_module(b);

    CHECK(hom_semimodule(breg, breg).module.size() == 2);
    CHECK(hom_semimodule(b2, z).module.size() == 1);
    CHECK(hom_semimodule(b2, breg).module.size() == 4);

    // The hom module's addition is pointwise: check against direct tables.
    auto hm = hom_semimodule(b2, breg);
    for (int i = 0; i < hm.module.size(); ++i)
        for (int j = 0; j < hm.module.size(); ++j) {
            int s = hm.module.add(i, j);
            for (int a = 0; a < b2.size(); ++a)
                CHECK(hm.homs[s](a) == breg.add(hm.homs[i](a), hm.homs[j](a)));
        }
}

TEST_CASE("pareigis-rohrl tensor identities") {
    auto b = B();
    auto breg = FiniteSemimodule::regular(b);
    auto b2 = boolean_square();
    auto z = FiniteSemimodule::zero_module(b);

    auto rr = pr_tensor(breg, breg);
    REQUIRE(find_isomorphism(rr.module, breg).has_value());

    auto rm = pr_tensor(breg, b2);
    REQUIRE(find_isomorphism(rm.module, b2).has_value());
    auto mr = pr_tensor(b2, breg);
    REQUIRE(find_isomorphism(mr.module, b2).has_value());

    CHECK(pr_tensor(z, b2).module.size() == 1);
    CHECK(pr_tensor(b2, z).module.size() == 1);

    // Z/2 over Z/2 reproduces the ring tensor.
    auto z2 = FiniteSemimodule::regular(Semiring::table(fixtures::zmod_table(2)));
    REQUIRE(find_isomorphism(pr_tensor(z2, z2).module, z2).has_value());

    // The size guard refuses oversized instances.
    CHECK_THROWS_AS(pr_tensor(b2, b2, 64), SizeGuardError);
}

TEST_CASE("hom-tensor adjunction with a constructed bijection") {
    auto b = B();
    auto breg = FiniteSemimodule::regular(b);
    auto b2 = boolean_square();

    auto check_adjunction = [&](const FiniteSemimodule& M, const FiniteSemimodule& N,
                                const FiniteSemimodule& P) {
        auto t = pr_tensor(M, N);
        auto hom_tp = hom_semimodule(t.module, P);
        auto hom_np = hom_semimodule(N, P);
        auto hom_m_np = hom_semimodule(M, hom_np.module);
        REQUIRE(hom_tp.module.size() == hom_m_np.module.size());

        // Currying: phi |-> (m |-> (n |-> phi(m (x) n))) must be a bijection.
        std::set<int> images;
        for (const auto& phi : hom_tp.homs) {
            std::vector<int> curried(M.size());
            for (int m = 0; m < M.size(); ++m) {
                std::vector<int> inner(N.size());
                for (int n = 0; n < N.size(); ++n) inner[n] = phi(t.pure[m][n]);
                int idx = hom_np.index_of(SemimoduleHom(N, P, inner));
                REQUIRE(idx >= 0);
                curried[m] = idx;
            }
            int outer = hom_m_np.index_of(SemimoduleHom(M, hom_np.module, curried));
            REQUIRE(outer >= 0);
            images.insert(outer);
        }
        CHECK(images.size() == hom_tp.homs.size());
    };

    check_adjunction(breg, breg, breg);
    check_adjunction(breg, b2, breg);
    check_adjunction(b2, breg, breg);
    check_adjunction(breg, breg, b2);
}

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gen.hpp"
#include "spinmcg/errors.hpp"
#include "spinmcg/group_bfs.hpp"
#include "spinmcg/quadform.hpp"

using namespace spinmcg;

namespace {
const Genus G1(1), G2(2), G3(3);
F2Class f(Genus g, const char* s) { return F2Class::parse(g, s); }
}  // namespace

TEST_CASE("evaluation") {
    const auto q1 = QuadraticForm::q1(G2);
    CHECK(q1(f(G2, "[1,1,0,0]")) == 1);
    CHECK(q1(f(G2, "[1,0,1,0]")) == 1);
    CHECK(q1(F2Class(G2, 0)) == 0);
    CHECK(QuadraticForm::q0(G2)(F2Class(G2, 0)) == 0);
    CHECK(q1(f(G2, "[0,0,1,1]")) == 1);
    CHECK(q1(f(G2, "[0,0,1,0]")) == 0);
    CHECK_THROWS_AS(q1(F2Class(G3, 1)), GenusMismatch);
}

TEST_CASE("evaluation matches the expansion in any summation order") {
    testgen::Rng r(301);
    for (int k = 0; k < 200; ++k) {
        const Genus G(testgen::uniform(r, 1, 6));
        const auto q = testgen::any_form(r, G);
        const auto v = testgen::nonzero_f2(r, G);
        std::vector<int> bits;
        for (int b = 0; b < G.dim(); ++b)
            if ((v.bits() >> b) & 1) bits.push_back(b);
        std::shuffle(bits.begin(), bits.end(), r);
        std::uint64_t acc = 0;
        int val = 0;
        for (int b : bits) {
            const std::uint64_t e = std::uint64_t{1} << b;
            val ^= q(e) ^ intersection_mod2(acc, e);
            acc |= e;
        }
        REQUIRE(val == q(v));
    }
}

TEST_CASE("arf") {
    CHECK(arf(QuadraticForm::q0(G2)) == 0);
    CHECK(arf(QuadraticForm::q1(G2)) == 1);
    CHECK(arf(QuadraticForm(G2, 0b1111)) == 0);
    CHECK(arf(QuadraticForm::q1(Genus(6))) == 1);
}

TEST_CASE("action on forms") {
    const QuadraticForm base = QuadraticForm::parse(G2, "[1,1,0,0]");
    CHECK(act_form(base, evaluate_mod2(parse_word("C4", G2), G2)).to_string() == "[1,1,1,0]");
    CHECK(act_form(base, evaluate_mod2(parse_word("C5", G2), G2)).to_string() == "[1,1,0,1]");
    CHECK(act_form(base, SymplecticMatrixF2::identity(G2)) == base);
    CHECK_THROWS_AS(act_form(base, SymplecticMatrixF2(G2, {1, 1, 4, 8})), Error);
}

TEST_CASE("Z2 transvections") {
    const auto q1 = QuadraticForm::q1(G2);
    const auto t = z2_transvection(F2Class::x(G2, 1));
    CHECK((t * t).is_identity());
    CHECK(act_form(q1, t) == q1);
    CHECK_FALSE(act_form(q1, z2_transvection(F2Class::x(G2, 2))) == q1);
    CHECK_THROWS_AS(z2_transvection(F2Class(G2, 0)), Error);
}

TEST_CASE("box") {
    const auto q = QuadraticForm::q1(G2);
    CHECK(box(q, F2Class::x(G2, 1), F2Class::y(G2, 1)).to_symbolic() == "x1+y1");
    CHECK(box(q, F2Class::x(G2, 1), F2Class::x(G2, 1)) == F2Class::x(G2, 1));
    const auto z = box(q, box(q, f(G2, "[0,0,1,1]"), f(G2, "[1,0,1,0]")), F2Class::y(G2, 1));
    CHECK(z.to_string() == "[1,1,0,1]");
    CHECK_THROWS_AS(box(q, F2Class::x(G2, 2), F2Class::x(G2, 1)), Error);
}

TEST_CASE("enumeration") {
    CHECK(enumerate_lambda(QuadraticForm::q1(G2)).size() == 10);
    CHECK(enumerate_lambda(QuadraticForm::q0(G2)).size() == 6);
    CHECK(enumerate_forms(G2, 1).size() == 6);
    CHECK(enumerate_forms(G2, 0).size() == 10);
    CHECK(enumerate_lambda(QuadraticForm::q1(G3)).size() == 36);
    CHECK(enumerate_forms(G3, 1).size() == 28);
    CHECK_THROWS_AS(enumerate_lambda(QuadraticForm::q1(Genus(9))), CapExceeded);
    CHECK_THROWS_AS(enumerate_forms(Genus(3), 0, 2), CapExceeded);
}

TEST_CASE("|Lambda(q)| depends only on the Arf invariant") {
    for (int g = 1; g <= 6; ++g) {
        const Genus G(g);
        testgen::Rng r(310 + static_cast<unsigned>(g));
        for (int k = 0; k < 8; ++k) {
            const auto q = testgen::any_form(r, G);
            std::uint64_t brute = 0;
            for (std::uint64_t v = 1; v <= full_mask(G); ++v) brute += static_cast<std::uint64_t>(q(v));
            REQUIRE(brute == lambda_size(G, arf(q)));
            REQUIRE(enumerate_lambda(q).size() == brute);
        }
    }
    CHECK(lambda_size(G2, 1) == 10);
    CHECK(lambda_size(G2, 0) == 6);
    CHECK(lambda_size(Genus(6), 1) == 2080);
    CHECK(lambda_size(Genus(6), 0) == 2016);
}

TEST_CASE("property: Arf is invariant under the action") {
    testgen::Rng r(302);
    for (int k = 0; k < 500; ++k) {
        const Genus G(testgen::uniform(r, 1, 6));
        const auto q = testgen::any_form(r, G);
        const auto m = testgen::f2_transvection_product(r, G, testgen::uniform(r, 1, 6));
        REQUIRE(arf(act_form(q, m)) == arf(q));
    }
}

TEST_CASE("property: the action is a right action") {
    testgen::Rng r(303);
    for (int k = 0; k < 1000; ++k) {
        const Genus G(testgen::uniform(r, 1, 6));
        const auto q = testgen::any_form(r, G);
        const auto m = testgen::f2_transvection_product(r, G, 3), n = testgen::f2_transvection_product(r, G, 3);
        REQUIRE(act_form(act_form(q, m), n) == act_form(q, m * n));
    }
}

TEST_CASE("box conjugation on all pairs at genus 2") {
    const auto q = QuadraticForm::q1(G2);
    const auto lam = enumerate_lambda(q);
    for (auto a : lam)
        for (auto b : lam) {
            REQUIRE(z2_transvection(b) * z2_transvection(a) * z2_transvection(b) == z2_transvection(box(q, a, b)));
            REQUIRE(box(q, box(q, a, b), b) == a);
        }
}

TEST_CASE("property: box conjugation and involution") {
    testgen::Rng r(304);
    for (int k = 0; k < 1000; ++k) {
        const Genus G(testgen::uniform(r, 2, 6));
        const auto q = testgen::uniform(r, 0, 1) ? QuadraticForm::q1(G) : QuadraticForm::q0(G);
        const auto a = testgen::lambda_element(r, q), b = testgen::lambda_element(r, q);
        const auto c = box(q, a, b);
        REQUIRE(q(c) == 1);
        REQUIRE(z2_transvection(b) * z2_transvection(a) * z2_transvection(b) == z2_transvection(c));
        const auto t = z2_transvection(a);
        REQUIRE((t * t).is_identity());
    }
}

TEST_CASE("T_z preserves q exactly when q(z) = 1 (genus 2, exhaustive)") {
    for (std::uint64_t qv = 0; qv <= full_mask(G2); ++qv) {
        const QuadraticForm q(G2, qv);
        for (std::uint64_t z = 1; z <= full_mask(G2); ++z)
            REQUIRE((act_form(q, z2_transvection(F2Class(G2, z))) == q) == (q(z) == 1));
    }
}

TEST_CASE("odd forms form one orbit") {
    for (int g = 2; g <= 3; ++g) {
        const Genus G(g);
        std::vector<SymplecticMatrixF2> gens;
        for (int i = 1; i <= 2 * g + 1; ++i) gens.push_back(evaluate_mod2(TwistWord::letter(SymbolKind::C, i), G));
        for (int k = 4; k <= 2 * g - 2; k += 2) gens.push_back(evaluate_mod2(TwistWord::letter(SymbolKind::B, k), G));
        auto orbit = form_orbit(gens, QuadraticForm::q1(G));
        auto odd = enumerate_forms(G, 1);
        std::sort(orbit.begin(), orbit.end(), [](auto& a, auto& b) { return a.basis_values() < b.basis_values(); });
        CHECK(orbit == odd);
    }
}

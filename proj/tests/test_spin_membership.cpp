#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "spinmcg/errors.hpp"
#include "spinmcg/group_bfs.hpp"
#include "spinmcg/spin_membership.hpp"

using namespace spinmcg;

namespace {
const Genus G1(1), G2(2);
}

TEST_CASE("membership examples") {
    const auto q1 = QuadraticForm::q1(G2);
    CHECK(is_spin_member(parse_word("C1", G2), q1, G2).member);
    auto r = is_spin_member(parse_word("C4", G2), q1, G2);
    CHECK_FALSE(r.member);
    REQUIRE(r.failing_class);
    CHECK(r.failing_class->to_symbolic() == "x2");
    CHECK(q1(r.image.apply(*r.failing_class)) != q1(*r.failing_class));
    CHECK(is_spin_member(parse_word("C4 C4", G2), q1, G2).member);
    CHECK_FALSE(is_spin_member(parse_word("C4", G2), q1, G2).image.is_identity());
}

TEST_CASE("extendability over the cubic connected sum") {
    for (int g = 2; g <= 5; ++g)
        for (const auto& w : gg_generators(Genus(g))) CHECK(is_extendable_k3_sum(w, Genus(g)));
    CHECK_FALSE(is_extendable_k3_sum(parse_word("C4", G2), G2));
    CHECK(is_extendable_k3_sum(TwistWord(), G2));
    CHECK_THROWS_AS(is_extendable_k3_sum(TwistWord(), G1), Error);
}

TEST_CASE("non-preserving witnesses") {
    auto w = non_preserving_witness(QuadraticForm::q1(G2));
    REQUIRE(w);
    CHECK(w->z.to_symbolic() == "x2");
    CHECK_FALSE(act_form(QuadraticForm::q1(G2), w->transvection) == QuadraticForm::q1(G2));
    auto w0 = non_preserving_witness(QuadraticForm::q0(G1));
    REQUIRE(w0);
    CHECK(w0->z.to_symbolic() == "x1");
    CHECK_FALSE(non_preserving_witness(QuadraticForm::q1(G1)));
    for (int g = 2; g <= 6; ++g) {
        for (int a = 0; a <= 1; ++a) {
            const auto q = a ? QuadraticForm::q1(Genus(g)) : QuadraticForm::q0(Genus(g));
            auto wt = non_preserving_witness(q);
            REQUIRE(wt);
            CHECK(q(wt->z) == 0);
            CHECK_FALSE(act_form(q, wt->transvection) == q);
        }
    }
}

TEST_CASE("property: the spin group is closed under products") {
    testgen::Rng r(401);
    int tested = 0;
    for (int k = 0; k < 20000 && tested < 500; ++k) {
        const Genus G(testgen::uniform(r, 2, 4));
        const auto q = QuadraticForm::q1(G);
        auto pick = [&] {
            const auto gens = gg_generators(G);
            TwistWord w;
            for (int j = 0; j < 4; ++j) {
                const auto& gen = gens[static_cast<std::size_t>(testgen::uniform(r, 0, static_cast<int>(gens.size()) - 1))];
                w.append(testgen::uniform(r, 0, 1) ? gen : gen.inverse());
            }
            if (testgen::uniform(r, 0, 3) == 0) w.append(testgen::primitive_word(r, G, 2));
            return w;
        };
        auto u = pick(), v = pick();
        if (!is_spin_member(u, q, G).member || !is_spin_member(v, q, G).member) continue;
        ++tested;
        REQUIRE(is_spin_member(u * v, q, G).member);
    }
    CHECK(tested == 500);
}

TEST_CASE("membership depends only on the mod 2 image") {
    const auto q = QuadraticForm::q1(G2);
    CHECK(is_spin_member(parse_word("C1 C2 C1", G2), q, G2).member == is_spin_member(parse_word("C2 C1 C2", G2), q, G2).member);
    CHECK(is_spin_member(parse_word("C4 C3 C4", G2), q, G2).member == is_spin_member(parse_word("C3 C4 C3", G2), q, G2).member);
    CHECK(is_spin_member(parse_word("C4 C4^-1 C1", G2), q, G2).member == is_spin_member(parse_word("C1", G2), q, G2).member);
}

TEST_CASE("exactly 120 elements of Sp(4,2) fix q1") {
    std::vector<SymplecticMatrixF2> gens;
    for (int i = 1; i <= 5; ++i) gens.push_back(evaluate_mod2(TwistWord::letter(SymbolKind::C, i), G2));
    // walk the whole group and count stabilizer elements
    std::vector<SymplecticMatrixF2> all{SymplecticMatrixF2::identity(G2)};
    std::set<std::vector<std::uint64_t>> seen{all[0].columns()};
    for (std::size_t i = 0; i < all.size(); ++i)
        for (const auto& g : gens) {
            auto m = all[i] * g;
            if (seen.insert(m.columns()).second) all.push_back(m);
        }
    CHECK(all.size() == 720);
    int fix = 0;
    for (const auto& m : all) fix += is_spin_member(m, QuadraticForm::q1(G2)).member;
    CHECK(fix == 120);
}

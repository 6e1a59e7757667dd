#include <doctest.h>

#include <set>

#include "spinmcg/certify.hpp"
#include "spinmcg/errors.hpp"
#include "spinmcg/group_bfs.hpp"

using namespace spinmcg;

namespace {
const Genus G2(2), G3(3), G4(4);
std::vector<SymplecticMatrixF2> images(const std::vector<TwistWord>& ws, Genus g) {
    std::vector<SymplecticMatrixF2> out;
    for (const auto& w : ws) out.push_back(evaluate_mod2(w, g));
    return out;
}
std::vector<SymplecticMatrixF2> sp_generators(Genus g) {
    std::vector<TwistWord> ws;
    for (int i = 1; i <= 2 * g.value() + 1; ++i) ws.push_back(TwistWord::letter(SymbolKind::C, i));
    for (int k = 4; k <= 2 * g.value() - 2; k += 2) ws.push_back(TwistWord::letter(SymbolKind::B, k));
    return images(ws, g);
}
F2Class f(Genus g, const char* s) { return F2Class::parse(g, s); }
}  // namespace

TEST_CASE("image dictionary") {
    auto r = verify_phi2_images(G3);
    CHECK(r.ok());
    CHECK(r.entries.size() == 7);
    CHECK_FALSE(r.first_mismatch());
    for (int g = 2; g <= 8; ++g) CHECK(verify_phi2_images(Genus(g)).entries.size() == static_cast<std::size_t>(3 * g - 2));
    std::string y4;
    for (const auto& e : r.entries)
        if (e.word == "Y4") y4 = e.expected.to_symbolic();
    CHECK(y4 == "x2+y2");
    CHECK(r.entries[0].word == "C1");
    CHECK(r.entries[0].expected.to_symbolic() == "x1");
}

TEST_CASE("lambda reduction examples") {
    auto t = lambda_reduce(f(G2, "[1,1,0,0]"));
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].by.to_symbolic() == "y1");
    CHECK(t.end().to_symbolic() == "x1");
    CHECK(replay_trace(t));
    // x2+y2 is itself a base class
    CHECK(lambda_reduce(f(G2, "[0,0,1,1]")).steps.empty());
    auto u = lambda_reduce(f(G2, "[1,1,1,0]"));
    REQUIRE(u.steps.size() == 1);
    CHECK(u.steps[0].by.to_symbolic() == "x1+x2");
    CHECK(u.end().to_symbolic() == "y1");
    CHECK_THROWS_AS(lambda_reduce(F2Class::x(G2, 2)), Error);
}

TEST_CASE("generation certificates, genus 2..6") {
    const std::size_t counts[] = {10, 36, 136, 528, 2080};
    for (int g = 2; g <= 6; ++g) {
        auto c = certify_o_q1_generation(Genus(g));
        CHECK(c.ok());
        CHECK(c.lambda_count == counts[g - 2]);
        CHECK(c.traces.size() == counts[g - 2]);
        CHECK(c.conjugation_exhaustive == (g <= 3));
        // observed bound, not a theorem
        CHECK(c.max_trace_length <= static_cast<std::size_t>(4 * g));
        for (const auto& t : c.traces)
            for (const auto& s : t.steps) CHECK(in_lambda_base(s.by));
    }
    CHECK_THROWS_AS(certify_o_q1_generation(Genus(9)), CapExceeded);
}

TEST_CASE("trace lengths beyond the certified range") {
    // regression data: the longest trace grows like 6g - 12 from genus 4 on
    for (int g = 4; g <= 8; ++g) {
        std::size_t mx = 0;
        for (auto z : enumerate_lambda(QuadraticForm::q1(Genus(g)))) {
            auto t = lambda_reduce(z);
            REQUIRE(replay_trace(t));
            mx = std::max(mx, t.steps.size());
        }
        CHECK(mx == static_cast<std::size_t>(6 * g - 12));
    }
}

TEST_CASE("group orders") {
    CHECK(group_order_bfs(sp_generators(G2), 10000) == 720);
    CHECK(group_order_bfs(images(gg_generators(G2), G2), 10000) == 120);
    CHECK(group_order_bfs(images(gg_generators(G3), G3), 1000000) == 51840);
    try {
        group_order_bfs(sp_generators(G2), 100);
        FAIL("cap not enforced");
    } catch (const CapExceeded& e) {
        CHECK(e.partial() > 100);
    }
}

TEST_CASE("orbit-stabilizer at genus 3") {
    const auto sp = sp_generators(G3);
    const std::uint64_t full = group_order_bfs(sp, 2000000);
    CHECK(full == 1451520);
    const auto orbit = form_orbit(sp, QuadraticForm::q1(G3)).size();
    CHECK(orbit == 28);
    CHECK(full / orbit == group_order_bfs(images(gg_generators(G3), G3), 1000000));
}

TEST_CASE("q1 is fixed and Lambda is one orbit under G_g") {
    for (int g = 2; g <= 4; ++g) {
        const Genus G(g);
        const auto gens = images(gg_generators(G), G);
        CHECK(form_orbit(gens, QuadraticForm::q1(G)).size() == 1);
        const auto lam = enumerate_lambda(QuadraticForm::q1(G));
        auto orbit = class_orbit(gens, lam.front());
        CHECK(orbit.size() == lam.size());
        std::set<std::uint64_t> a, b;
        for (auto z : orbit) a.insert(z.bits());
        for (auto z : lam) b.insert(z.bits());
        CHECK(a == b);
    }
}

TEST_CASE("square transvections") {
    CHECK(evaluate(parse_word("D2", G2), G2) == square_transvection_matrix(HomologyClass::y(G2, 1)));
    CHECK(evaluate(parse_word("(C1 C2 C1^-1)^2", G2), G2) ==
          square_transvection_matrix(HomologyClass::x(G2, 1) + HomologyClass::y(G2, 1)));
    const std::uint64_t realized[] = {7, 13, 19, 25, 31};
    for (int g = 2; g <= 6; ++g) {
        auto r = verify_square_transvections(Genus(g));
        CHECK(r.ok());
        CHECK(r.classes == (std::uint64_t{1} << (2 * g)) - 1);
        CHECK(r.in_kernel == r.classes);
        CHECK(r.realized == realized[g - 2]);
    }
    CHECK_THROWS_AS(verify_square_transvections(Genus(7)), Error);
    auto w = square_transvection_realization(f(G3, "[0,0,1,1,1,0]"));
    REQUIRE(w);
    CHECK(w->to_string() == "X4^2");
    auto w2 = square_transvection_realization(f(G3, "[0,0,1,0,1,1]"));
    REQUIRE(w2);
    CHECK(w2->to_string() == "Xs5^2");
}

TEST_CASE("block moves") {
    auto moves = verify_block_moves(G4);
    CHECK(moves.size() == 7);
    for (const auto& m : moves) CHECK(m.ok());
    auto find = [&](char rule, int i) {
        for (const auto& m : moves)
            if (m.rule == rule && m.block == i) return m;
        FAIL("missing move");
        return moves.front();
    };
    auto a = find('a', 2);
    CHECK(a.from.to_symbolic() == "y3");
    CHECK(a.image.to_symbolic() == "y2");
    auto c = find('c', 2);
    CHECK(c.from.to_symbolic() == "x2+y2+x3+y3");
    CHECK(c.image.to_symbolic() == "y2");
    auto d = find('d', 2);
    CHECK(d.from.to_symbolic() == "y2+y3");
    CHECK(d.image.to_symbolic() == "y2");
    for (int g = 3; g <= 7; ++g)
        for (const auto& m : verify_block_moves(Genus(g))) CHECK(m.ok());
}

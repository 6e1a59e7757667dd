// One PASS/FAIL line per acceptance criterion, with the measured time and
// the time limit. Exit status is 1 if any criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "properties.hpp"
#include "spinmcg/certify.hpp"
#include "spinmcg/genus2.hpp"
#include "spinmcg/group_bfs.hpp"
#include "spinmcg/rokhlin.hpp"
#include "spinmcg/spin_membership.hpp"
#include "spinmcg/torelli.hpp"

using namespace spinmcg;

namespace {

struct Verdict {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < limit_s;
    if (!in_time) v.detail += "; over time limit";
    const bool pass = v.ok && in_time;
    failures += !pass;
    std::printf("criterion %2d %s  %-28s %-58s %7.3fs (limit %gs)\n", n, pass ? "PASS" : "FAIL", name, v.detail.c_str(), s, limit_s);
    std::fflush(stdout);
}

std::vector<SymplecticMatrixF2> images(const std::vector<TwistWord>& ws, Genus g) {
    std::vector<SymplecticMatrixF2> out;
    for (const auto& w : ws) out.push_back(evaluate_mod2(w, g));
    return out;
}

std::vector<TwistWord> chain_and_b(Genus g) {
    std::vector<TwistWord> out;
    for (int i = 1; i <= 2 * g.value() + 1; ++i) out.push_back(TwistWord::letter(SymbolKind::C, i));
    for (int i = 4; i <= 2 * g.value() - 2; i += 2) out.push_back(TwistWord::letter(SymbolKind::B, i));
    return out;
}

bool factorizes(const torelli::TackSequence& s) {
    const auto c = torelli::factorize(s);
    return torelli::verify_certificate(c).ok && evaluate(c.root.flatten(), s.genus()).is_identity();
}

}  // namespace

int main() {
    criterion(1, "genus-2 generator table", 1.0, [] {
        const auto t = genus2::schreier_table();
        int good = 0;
        for (const auto& e : t) good += e.matrix_equal;
        return Verdict{t.size() == 30 && good == 30, std::to_string(good) + "/" + std::to_string(t.size()) + " matrix-verified"};
    });

    criterion(2, "coset graph", 1.0, [] {
        const auto cg = genus2::coset_graph();
        // the path [0,1,1,1] -C1- [0,0,1,1] -C2- [1,0,1,1] -C3- [1,1,1,0] -C4- [1,1,0,0] -C5- [1,1,0,1]
        const std::vector<std::string> labels = {"[0,1,1,1]", "[0,0,1,1]", "[1,0,1,1]", "[1,1,1,0]", "[1,1,0,0]", "[1,1,0,1]"};
        bool ok = cg.is_path() && cg.vertices.size() == 6 && cg.vertices[cg.base].to_string() == "[1,1,0,0]";
        int matched = 0;
        for (int k = 0; ok && k < 5; ++k) {
            const Genus G2(2);
            const auto a = cg.index_of(QuadraticForm::parse(G2, labels[k])), b = cg.index_of(QuadraticForm::parse(G2, labels[k + 1]));
            for (const auto& e : cg.edges)
                if (e.label == k + 1 && ((e.from == a && e.to == b) || (e.from == b && e.to == a))) {
                    ++matched;
                    break;
                }
        }
        ok = ok && matched == 5;
        return Verdict{ok, std::to_string(cg.vertices.size()) + " vertices, " + std::to_string(matched) + "/5 labelled path edges"};
    });

    criterion(3, "genus-2 presentation", 1.0, [] {
        const auto rs = genus2::verify_presentation_sp4();
        std::size_t good = 0;
        bool coxeter = false, delta = false;
        for (const auto& r : rs) {
            good += r.ok;
            coxeter = coxeter || (r.name == "(C1 C2 C3 C4 C5)^6 = 1" && r.ok);
            delta = delta || (r.name.find("= -I") != std::string::npos && r.ok);
        }
        return Verdict{good == rs.size() && coxeter && delta, std::to_string(good) + "/" + std::to_string(rs.size()) + " relations hold"};
    });

    criterion(4, "generator membership", 1.0, [] {
        int n = 0, good = 0;
        for (int g = 2; g <= 6; ++g) {
            const Genus G(g);
            for (const auto& w : gg_generators(G)) {
                ++n;
                good += is_spin_member(w, QuadraticForm::q1(G), G).member;
            }
        }
        return Verdict{n == good, std::to_string(good) + "/" + std::to_string(n) + " generators preserve q1, g=2..6"};
    });

    criterion(5, "group orders", 60.0, [] {
        const Genus G2(2), G3(3);
        const auto full2 = group_order_bfs(images(chain_and_b(G2), G2), 100'000'000);
        const auto spin2 = group_order_bfs(images(gg_generators(G2), G2), 100'000'000);
        const auto orbit2 = form_orbit(images(chain_and_b(G2), G2), QuadraticForm::q1(G2)).size();
        const auto full3 = group_order_bfs(images(chain_and_b(G3), G3), 100'000'000);
        const auto orbit3 = form_orbit(images(chain_and_b(G3), G3), QuadraticForm::q1(G3)).size();
        const auto spin3 = group_order_bfs(images(gg_generators(G3), G3), 100'000'000);
        const bool ok = full2 == 720 && spin2 == 120 && orbit2 == 6 && full3 == 1451520 && orbit3 == 28 && spin3 * orbit3 == full3;
        std::ostringstream d;
        d << "g=2 " << full2 << "/" << orbit2 << "=" << spin2 << ", g=3 " << full3 << "/" << orbit3 << "=" << spin3;
        return Verdict{ok, d.str()};
    });

    criterion(6, "generation certificate", 30.0, [] {
        bool ok = true;
        std::ostringstream d;
        d << "|Lambda| =";
        for (int g = 2; g <= 6; ++g) {
            const Genus G(g);
            const auto c = certify_o_q1_generation(G);
            const auto brute = enumerate_lambda(QuadraticForm::q1(G)).size();
            ok = ok && c.ok() && c.lambda_count == brute && c.traces.size() == brute;
            if (g <= 3) ok = ok && c.conjugation_exhaustive;
            d << " " << c.lambda_count;
        }
        d << " (brute force), g=2..6";
        return Verdict{ok, d.str()};
    });

    criterion(7, "Torelli factorization", 60.0, [] {
        int n3 = 0, ok3 = 0;
        const Genus G3(3);
        for (std::uint64_t b = 0; b < 256; ++b) {
            if (std::popcount(b) < 4 || std::popcount(b) % 2) continue;
            ++n3;
            ok3 += factorizes(torelli::TackSequence(G3, b));
        }
        int nr = 0, okr = 0;
        testgen::Rng r(707);
        for (int g = 4; g <= 5; ++g) {
            std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << (2 * g + 2)) - 1);
            for (int k = 0; k < 500; ++k) {
                std::uint64_t b;
                do b = d(r);
                while (std::popcount(b) < 4 || std::popcount(b) % 2);
                ++nr;
                okr += factorizes(torelli::TackSequence(Genus(g), b));
            }
        }
        return Verdict{n3 == ok3 && nr == okr,
                       "g=3 " + std::to_string(ok3) + "/" + std::to_string(n3) + ", g=4,5 random " + std::to_string(okr) + "/" + std::to_string(nr)};
    });

    criterion(8, "terminal expansions", 1.0, [] {
        int n = 0, good = 0;
        for (int g = 3; g <= 5; ++g) {
            const Genus G(g);
            for (auto t : {torelli::Terminal::A, torelli::Terminal::B, torelli::Terminal::C}) {
                ++n;
                good += evaluate(torelli::terminal_expansion(t, G), G) == evaluate(torelli::terminal_direct(t, G), G);
            }
        }
        return Verdict{n == good, std::to_string(good) + "/" + std::to_string(n) + " expansions equal the direct word, g=3..5"};
    });

    criterion(9, "Arf suite", 1.0, [] {
        const Genus G(3);
        const bool ok = arf(QuadraticForm::q0(G)) == 0 && arf(QuadraticForm::q1(G)) == 1 && arf_from_signature(1, 9) == 1 &&
                        plane_curve_genus(3) == 1 && plane_curve_genus(4) == 3;
        return Verdict{ok, "arf(q0)=0 arf(q1)=1 arf(1,9)=1 g_3=1 g_4=3"};
    });

    criterion(10, "property suites", 10.0, [] {
        bool ok = true;
        std::ostringstream d;
        for (const auto& o : props::all()) {
            ok = ok && o.cases == 1000 && o.failures == 0;
            d << o.failures << " ";
        }
        return Verdict{ok, "5 suites x 1000 cases, failures: " + d.str()};
    });

    return failures ? 1 : 0;
}

#pragma once

// Randomized property checks shared by the doctest suite and the acceptance
// binary. Each runs a fixed number of cases from a fixed seed and returns the
// number of cases that failed.

#include <string>
#include <vector>

#include "gen.hpp"
#include "spinmcg/quadform.hpp"
#include "spinmcg/twist_words.hpp"

namespace spinmcg::props {

struct Outcome {
    std::string name;
    int cases = 0;
    int failures = 0;
};

inline Outcome transvection_symplecticity(int n = 1000) {
    testgen::Rng r(1001);
    Outcome o{"transvection symplecticity", n, 0};
    for (int k = 0; k < n; ++k) {
        const Genus G(testgen::uniform(r, 1, 6));
        const auto a = testgen::uniform(r, 0, 1) ? testgen::primitive_class(r, G) : testgen::small_class(r, G);
        const auto t = transvection_matrix(a);
        bool ok = t.is_symplectic() && t * t.symplectic_inverse() == SymplecticMatrix::identity(G);
        if (!a.is_zero() && a.is_primitive()) ok = ok && square_transvection_matrix(a).is_symplectic() && t * t == square_transvection_matrix(a);
        o.failures += !ok;
    }
    return o;
}

// T_z is an involution mod 2 and T_b T_a T_b = T_{a box b}
inline Outcome box_conjugation(int n = 1000) {
    testgen::Rng r(1002);
    Outcome o{"Z2 transvection involution and box conjugation", n, 0};
    for (int k = 0; k < n; ++k) {
        const Genus G(testgen::uniform(r, 1, 6));
        const auto q = testgen::uniform(r, 0, 1) ? QuadraticForm::q1(G) : QuadraticForm::q0(G);
        if (lambda_size(G, arf(q)) == 0) {
            --k;
            continue;
        }
        const auto a = testgen::lambda_element(r, q), b = testgen::lambda_element(r, q);
        const auto ta = z2_transvection(a), tb = z2_transvection(b);
        const auto c = box(q, a, b);
        const bool ok = (ta * ta).is_identity() && ta.is_symplectic() && q(c) == 1 && tb * ta * tb == z2_transvection(c) &&
                        box(q, c, b) == a && act_form(q, ta) == q;
        o.failures += !ok;
    }
    return o;
}

inline Outcome act_form_functoriality(int n = 1000) {
    testgen::Rng r(1003);
    Outcome o{"act_form functoriality", n, 0};
    for (int k = 0; k < n; ++k) {
        const Genus G(testgen::uniform(r, 1, 6));
        const auto q = testgen::any_form(r, G);
        const auto m = testgen::f2_transvection_product(r, G, testgen::uniform(r, 0, 4));
        const auto p = testgen::f2_transvection_product(r, G, testgen::uniform(r, 0, 4));
        const bool ok = act_form(act_form(q, m), p) == act_form(q, m * p) && act_form(q, SymplecticMatrixF2::identity(G)) == q &&
                        arf(act_form(q, m)) == arf(q);
        o.failures += !ok;
    }
    return o;
}

inline Outcome phi_multiplicativity(int n = 1000) {
    testgen::Rng r(1004);
    Outcome o{"Phi multiplicativity", n, 0};
    for (int k = 0; k < n; ++k) {
        const Genus G(testgen::uniform(r, 1, 6));
        const auto u = testgen::primitive_word(r, G, testgen::uniform(r, 0, 6));
        const auto v = testgen::primitive_word(r, G, testgen::uniform(r, 0, 6));
        const auto eu = evaluate(u, G), ev = evaluate(v, G);
        const bool ok = evaluate(u * v, G) == eu * ev && evaluate(u.inverse(), G) == eu.symplectic_inverse() &&
                        evaluate_mod2(u * v, G) == evaluate_mod2(u, G) * evaluate_mod2(v, G);
        o.failures += !ok;
    }
    return o;
}

// every single-twist curve of the catalog at genus g
inline std::vector<std::pair<std::string, HomologyClass>> catalog_curves(Genus g) {
    const CurveCatalog cat(g);
    std::vector<std::pair<std::string, HomologyClass>> out;
    for (int i = 1; i <= 2 * g.value() + 1; ++i) out.emplace_back("c" + std::to_string(i), cat.c(i));
    for (int k = 4; k <= 2 * g.value() - 2; k += 2) out.emplace_back("b" + std::to_string(k), cat.b(k));
    if (g.value() >= 3) out.emplace_back("b4'", cat.b4_prime());
    return out;
}

// Curves meeting once braid, disjoint ones commute. Cases are pairs with
// intersection +-1; (b4, c4) is checked first at every genus.
inline Outcome braid_relations(int n = 1000) {
    testgen::Rng r(1005);
    Outcome o{"braid relations", n, 0};
    auto braid_ok = [](const HomologyClass& a, const HomologyClass& b) {
        const auto ta = transvection_matrix(a), tb = transvection_matrix(b);
        return ta * tb * ta == tb * ta * tb;
    };
    int done = 0;
    for (int g = 3; g <= 6 && done < n; ++g, ++done) {
        const CurveCatalog cat{Genus(g)};
        const bool ok = abs(intersection(cat.b(4), cat.c(4))) == 1 && braid_ok(cat.b(4), cat.c(4));
        o.failures += !ok;
    }
    while (done < n) {
        const Genus G(testgen::uniform(r, 2, 6));
        const auto curves = catalog_curves(G);
        const auto& a = curves[static_cast<std::size_t>(testgen::uniform(r, 0, static_cast<int>(curves.size()) - 1))].second;
        const auto& b = curves[static_cast<std::size_t>(testgen::uniform(r, 0, static_cast<int>(curves.size()) - 1))].second;
        const Integer i = intersection(a, b);
        if (i == 0) {
            if (!(transvection_matrix(a) * transvection_matrix(b) == transvection_matrix(b) * transvection_matrix(a))) ++o.failures;
            continue;
        }
        if (abs(i) != 1) continue;
        o.failures += !braid_ok(a, b);
        ++done;
    }
    return o;
}

inline std::vector<Outcome> all() {
    return {transvection_symplecticity(), box_conjugation(), act_form_functoriality(), phi_multiplicativity(), braid_relations()};
}

}  // namespace spinmcg::props

#include <doctest.h>

#include "properties.hpp"

using namespace spinmcg;

TEST_CASE("property suites") {
    for (const auto& o : props::all()) {
        CAPTURE(o.name);
        CHECK(o.cases == 1000);
        CHECK(o.failures == 0);
    }
}

TEST_CASE("the catalog has curve pairs of every kind") {
    int braided = 0, disjoint = 0;
    const auto curves = props::catalog_curves(Genus(4));
    for (const auto& [na, a] : curves)
        for (const auto& [nb, b] : curves) {
            const Integer i = intersection(a, b);
            braided += abs(i) == 1;
            disjoint += i == 0;
        }
    CHECK(braided > 0);
    CHECK(disjoint > 0);
}

TEST_CASE("b4 is disjoint from c5 in homology, so B4 and C5 commute") {
    for (int g = 3; g <= 6; ++g) {
        const Genus G(g);
        const CurveCatalog cat(G);
        CHECK(intersection(cat.b(4), cat.c(5)) == 0);
        CHECK(evaluate(parse_word("B4 C5", G), G) == evaluate(parse_word("C5 B4", G), G));
        CHECK_FALSE(evaluate(parse_word("B4 C5 B4", G), G) == evaluate(parse_word("C5 B4 C5", G), G));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/catalog.hpp"

using namespace folia;

// Direct divisibility check, independent of the library's implementation.
static bool brute_good(const std::vector<int>& e, long delta) {
    const long s = e[0] + e[1] + e[2];
    if (delta < s) return false;
    for (int i = 0; i < 3; ++i) {
        bool ok = false;
        for (int j = 0; j < 3; ++j)
            if ((delta - s + e[j]) % e[i] == 0) ok = true;
        if (!ok) return false;
    }
    return true;
}

TEST_CASE("good degrees against the brute-force oracle") {
    for (const std::vector<int>& e :
         {std::vector<int>{1, 1, 1}, std::vector<int>{1, 1, 2}, std::vector<int>{1, 2, 3}}) {
        const WeightVector w(e);
        const long s = w.sum();
        const long period = (long)e[0] * e[1] * e[2];
        const GoodDegrees gd = good_degrees(w, s, s + 2 * period);
        CHECK(gd.period == period);
        std::vector<long> expect;
        for (long d = s; d <= s + 2 * period; ++d)
            if (brute_good(e, d)) expect.push_back(d);
        CHECK(gd.degrees == expect);
        // periodicity: good in the first period iff good in the second
        for (long d = s; d < s + period; ++d)
            CHECK(brute_good(e, d) == brute_good(e, d + period));
    }
}

TEST_CASE("good degrees known values") {
    GoodDegrees all = good_degrees(WeightVector({1, 1, 1}), 0, 10);
    CHECK(all.degrees == std::vector<long>{3, 4, 5, 6, 7, 8, 9, 10});
    CHECK_THROWS_AS(good_degrees(WeightVector({1, 1}), 0, 5), ArityError);
}

TEST_CASE("pullback degree") {
    CHECK(pullback_degree(3, 2) == 6);
    CHECK(pullback_degree(4, 1) == 4);
    CHECK_THROWS_AS(pullback_degree(3, 0), DegreeMismatchError);
}

TEST_CASE("weight vector") {
    const WeightVector w({2, 4, 6});
    CHECK(w.gcd() == 2);
    CHECK(w.sum() == 12);
    CHECK_THROWS_AS(WeightVector({1, -1}), DegreeMismatchError);
}

TEST_CASE("lie families construct and verify their brackets") {
    // construction recomputes every bracket; a throw here is a failure
    const LieAlgebraSpec aff = lie_family("aff");
    CHECK(aff.m == 3);
    CHECK(aff.generators.size() == 2);
    for (int m : {3, 4, 5}) {
        const LieAlgebraSpec g = lie_family("g(m)", m);
        CHECK((int)g.generators.size() == m - 1);
    }
    CHECK(lie_family("g6").generators.size() == 5);
    CHECK(lie_family("g7").generators.size() == 6);
    CHECK_THROWS_AS(lie_family("nope"), ParseError);
    CHECK_THROWS_AS(lie_family("g(m)", 2), ArityError);
}

TEST_CASE("lie foliations: degree and annihilation by generators") {
    for (const std::string& name : {"aff", "g6", "g7"}) {
        const LieAlgebraSpec spec = lie_family(name);
        const Foliation fol = lie_foliation(spec);
        CHECK(fol.delta == spec.m + 1);
        for (const VectorField& X : spec.generators) {
            const DiffForm c = contract(X, fol.omega);
            CHECK(c.component({}).is_zero());
        }
    }
    for (int m : {3, 4, 5}) {
        const LieAlgebraSpec spec = lie_family("g(m)", m);
        const Foliation fol = lie_foliation(spec);
        CHECK(fol.delta == m + 1);
        for (const VectorField& X : spec.generators)
            CHECK(contract(X, fol.omega).component({}).is_zero());
    }
}

TEST_CASE("census rows") {
    const std::vector<CensusRow> rows = component_census(9, 1);
    REQUIRE(rows.size() >= 6);
    for (const CensusRow& r : rows) CHECK(r.status == "ok");

    const CensusRow e51 = component_census(5, 1, "E")[0];
    CHECK(e51.degree == 4);
    const CensusRow e52 = component_census(5, 2, "E")[0];
    CHECK(e52.degree == 8);
    const CensusRow g6row = component_census(8, 2, "g6")[0];
    CHECK(g6row.degree == 14);
    CHECK(g6row.n_min == 8);
    const CensusRow g35 = component_census(7, 3, "g(5)")[0];
    CHECK(g35.degree == 18); // k(m+1) = 3*6
    const CensusRow g7row = component_census(9, 1, "g7")[0];
    CHECK(g7row.degree == 8);
    CHECK(g7row.generic_element.find("P^7") != std::string::npos);
}

TEST_CASE("census ambient bounds") {
    CHECK_THROWS_AS(component_census(7, 1, "g6"), AmbientError);
    CHECK_THROWS_AS(component_census(8, 1, "g7"), AmbientError);
    CHECK_THROWS_AS(component_census(4, 1, "E"), AmbientError);
    CHECK_THROWS_AS(component_census(4, 1, "g(3)"), AmbientError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/ring.hpp"

using namespace folia;

TEST_CASE("ring construction and validation") {
    const WeightedRing R = projective_ring(3);
    CHECK(R.nvars() == 3);
    CHECK(R.weights == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(WeightedRing({1, 0}), Error);
    CHECK(WeightedRing({1, 1, 2}).nvars() == 3);
}

TEST_CASE("grevlex descending order on degree-2 monomials") {
    const WeightedRing R = projective_ring(3);
    const auto ms = monomials_of_degree(R, 2);
    const std::vector<Expvec> expected = {
        {2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    CHECK(ms == expected);
}

TEST_CASE("graded dimension") {
    const WeightedRing P2 = projective_ring(3);
    CHECK(graded_dimension(P2, 0) == 1);
    CHECK(graded_dimension(P2, 3) == 10);
    CHECK(graded_dimension(P2, -1) == 0);
    const WeightedRing W({1, 1, 2});
    CHECK(graded_dimension(W, 4) == 9); // a+b+2c=4: 5+3+1
    const WeightedRing P4 = projective_ring(5);
    CHECK(graded_dimension(P4, 2) == 15);
    CHECK(graded_dimension(P4, 3) == 35);
}

TEST_CASE("arithmetic and homogeneity") {
    const WeightedRing R = projective_ring(2);
    const Poly x = variable(R, 0), y = variable(R, 1);
    const Poly s = x + y;
    CHECK((s * s) == x * x + x * y * Rat(2) + y * y);
    CHECK((s - s).is_zero());
    CHECK(s.is_homogeneous());
    CHECK(!(s + Poly(R, Rat(1))).is_homogeneous());
    CHECK(s.weighted_degree() == 1);
    CHECK_THROWS_AS(Poly(R).weighted_degree(), ZeroPolynomialError);
    CHECK_THROWS_AS((s + Poly(R, Rat(1))).weighted_degree(), InhomogeneousError);
    CHECK((x * Rat(0)).is_zero());
}

TEST_CASE("weighted degrees") {
    const WeightedRing W({1, 2, 3});
    const Poly p = variable(W, 0) * variable(W, 1) + variable(W, 2);
    CHECK(p.is_homogeneous());
    CHECK(p.weighted_degree() == 3);
}

TEST_CASE("leading term") {
    const WeightedRing R = projective_ring(3);
    const Poly x = variable(R, 0), y = variable(R, 1), z = variable(R, 2);
    const Poly p = z * z + x * y * Rat(5);
    CHECK(p.leading_exps() == Expvec{1, 1, 0});
    CHECK(p.leading_coef() == Rat(5));
}

TEST_CASE("partial derivative") {
    const WeightedRing R = projective_ring(2);
    const Poly x = variable(R, 0), y = variable(R, 1);
    const Poly p = x * x * y * Rat(3);
    CHECK(p.partial(0) == x * y * Rat(6));
    CHECK(p.partial(1) == x * x * Rat(3));
    CHECK(Poly(R, Rat(7)).partial(0).is_zero());
}

TEST_CASE("substitution") {
    // a(u, v) with u = x^2, v = xy: a = u*v -> x^3 y
    const WeightedRing T = projective_ring(2);
    const WeightedRing S = projective_ring(2);
    const Poly u = variable(S, 0) * variable(S, 0);
    const Poly v = variable(S, 0) * variable(S, 1);
    const Poly a = variable(T, 0) * variable(T, 1);
    const std::vector<Poly> fs = {u, v};
    const Poly composed = a.substitute(fs);
    CHECK(composed == variable(S, 0) * variable(S, 0) * variable(S, 0) * variable(S, 1));

    // inconsistent degrees for the common factor k must throw
    const Poly w = variable(S, 1);
    const std::vector<Poly> bad = {u, w};
    CHECK_THROWS_AS(a.substitute(bad), DegreeMismatchError);
}

TEST_CASE("weighted substitution respects k*e_i") {
    // target weights (1,2); f_0 of degree k, f_1 of degree 2k with k=2
    const WeightedRing T({1, 2});
    const WeightedRing S = projective_ring(2);
    const Poly f0 = variable(S, 0) * variable(S, 0);
    Poly f1(S);
    f1.add_term({3, 1}, Rat(1));
    const Poly a = variable(T, 1); // degree 2 in the target
    const std::vector<Poly> fs = {f0, f1};
    CHECK(a.substitute(fs) == f1);
}

TEST_CASE("random homogeneous is deterministic and dense") {
    const WeightedRing R = projective_ring(4);
    Rng r1(7, "test"), r2(7, "test");
    const Poly p1 = random_homogeneous(R, 3, r1);
    const Poly p2 = random_homogeneous(R, 3, r2);
    CHECK(p1 == p2);
    CHECK((long)p1.nterms() == graded_dimension(R, 3));
    Rng r3(8, "test");
    CHECK(random_homogeneous(R, 3, r3) != p1);
}

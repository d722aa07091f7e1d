#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/exterior.hpp"

using namespace folia;

static DiffForm random_one_form(const WeightedRing& R, long delta, Rng& rng) {
    DiffForm u(R, 1);
    for (int i = 0; i < R.nvars(); ++i) {
        const long d = delta - R.weights[i];
        if (d < 0) continue;
        u.add_term({i}, random_homogeneous(R, d, rng));
    }
    return u;
}

TEST_CASE("component normalization: order, sign, repeats") {
    const WeightedRing R = projective_ring(3);
    const Poly one(R, Rat(1));
    DiffForm u(R, 2);
    u.add_term({1, 0}, one); // dx1 ^ dx0 = -dx0 ^ dx1
    CHECK(u.component({0, 1}) == -one);
    DiffForm v(R, 2);
    v.add_term({1, 1}, one); // annihilates
    CHECK(v.is_zero());
}

TEST_CASE("wedge anticommutes on 1-forms; u^u = 0") {
    const WeightedRing R = projective_ring(4);
    Rng rng(3, "exterior");
    for (int trial = 0; trial < 20; ++trial) {
        const DiffForm u = random_one_form(R, 2, rng);
        const DiffForm v = random_one_form(R, 3, rng);
        CHECK(wedge(u, v) == -wedge(v, u));
        CHECK(wedge(u, u).is_zero());
    }
}

TEST_CASE("d^2 = 0 and graded Leibniz for d") {
    const WeightedRing R = projective_ring(3);
    Rng rng(11, "exterior");
    for (int trial = 0; trial < 20; ++trial) {
        const DiffForm u = random_one_form(R, 3, rng);
        CHECK(exterior_derivative(exterior_derivative(u)).is_zero());
        const Poly f = random_homogeneous(R, 2, rng);
        // d(f u) = df ^ u + f du
        CHECK(exterior_derivative(u * f) ==
              wedge(exterior_derivative(f), u) + exterior_derivative(u) * f);
    }
}

TEST_CASE("graded Leibniz for contraction") {
    const WeightedRing R = projective_ring(4);
    Rng rng(5, "exterior");
    const VectorField X = radial_field(R);
    for (int trial = 0; trial < 10; ++trial) {
        const DiffForm u = random_one_form(R, 2, rng);
        const DiffForm v = random_one_form(R, 2, rng);
        // i_X(u ^ v) = (i_X u) v - u (i_X v) for 1-forms u, v
        const DiffForm lhs = contract(X, wedge(u, v));
        const DiffForm rhs = v * contract(X, u).component({}) - u * contract(X, v).component({});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Cartan degree identity on descending and plain forms") {
    // i_R du + d i_R u = deg(u) * u for homogeneous u
    const WeightedRing W({1, 1, 2});
    Rng rng(9, "exterior");
    for (int trial = 0; trial < 20; ++trial) {
        const DiffForm u = random_one_form(W, 4, rng);
        const VectorField R = radial_field(W);
        const DiffForm lhs =
            contract(R, exterior_derivative(u)) + exterior_derivative(contract(R, u).component({}));
        CHECK(lhs == u * Rat(u.total_degree()));
    }
}

TEST_CASE("radial contraction and descent") {
    const WeightedRing R = projective_ring(3);
    const DiffForm vol = volume_form(R);
    CHECK(descends(contract(radial_field(R), vol)));
    DiffForm dx0(R, 1);
    dx0.add_term({0}, Poly(R, Rat(1)));
    CHECK(!descends(dx0));
    // x1 dx0 - x0 dx1 descends
    DiffForm a(R, 1);
    a.add_term({0}, variable(R, 1));
    a.add_term({1}, -variable(R, 0));
    CHECK(descends(a));
}

TEST_CASE("weighted total degree") {
    const WeightedRing W({1, 2, 3});
    DiffForm u(W, 1);
    u.add_term({2}, variable(W, 0)); // x0 dx2: 1 + 3
    CHECK(u.total_degree() == 4);
    u.add_term({0}, variable(W, 2)); // x2 dx0: 3 + 1
    CHECK(u.is_homogeneous());
    DiffForm v = u;
    v.add_term({0}, variable(W, 0));
    CHECK(!v.is_homogeneous());
}

TEST_CASE("lie bracket") {
    const WeightedRing R = projective_ring(2);
    VectorField X(R), Y(R);
    X.coeffs[0] = variable(R, 0); // x d/dx
    Y.coeffs[0] = variable(R, 1); // y d/dx
    // [x d/dx, y d/dx] = -y d/dx
    const VectorField B = lie_bracket(X, Y);
    CHECK(B.coeffs[0] == -variable(R, 1));
    CHECK(B.coeffs[1].is_zero());
}

TEST_CASE("pullback along the identity tuple") {
    const WeightedRing R = projective_ring(3);
    std::vector<Poly> id;
    for (int i = 0; i < 3; ++i) id.push_back(variable(R, i));
    Rng rng(2, "exterior");
    const DiffForm u = random_one_form(R, 2, rng);
    CHECK(pullback(std::span<const Poly>(id), R, u) == u);
}

TEST_CASE("pullback functoriality and descent") {
    const WeightedRing T = projective_ring(3);
    const WeightedRing S = projective_ring(4);
    Rng rng(21, "exterior");
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Poly> fs;
        for (int i = 0; i < 3; ++i) fs.push_back(random_homogeneous(S, 2, rng));
        const std::span<const Poly> fspan(fs);
        const DiffForm u = random_one_form(T, 2, rng);
        const DiffForm v = random_one_form(T, 1, rng);
        CHECK(pullback(fspan, T, wedge(u, v)) ==
              wedge(pullback(fspan, T, u), pullback(fspan, T, v)));
        CHECK(pullback(fspan, T, exterior_derivative(u)) ==
              exterior_derivative(pullback(fspan, T, u)));
        // descent is preserved
        DiffForm a(T, 1);
        a.add_term({0}, variable(T, 1));
        a.add_term({1}, -variable(T, 0));
        CHECK(descends(pullback(fspan, T, a)));
    }
}

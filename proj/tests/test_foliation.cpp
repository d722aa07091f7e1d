#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/foliation.hpp"
#include "support/dual_number.hpp"

using namespace folia;

// Generic logarithmic foliation on P^2 of degree 3: three lines in general
// position, residues (1, 2, -3); distinct residues keep d(alpha) vanishing only in codimension 3.
static Foliation log_p2(Rng& rng) {
    const WeightedRing R = projective_ring(3);
    const Poly f0 = random_homogeneous(R, 1, rng);
    const Poly f1 = random_homogeneous(R, 1, rng);
    const Poly f2 = random_homogeneous(R, 1, rng);
    return logarithmic_form({f0, f1, f2}, {Rat(1), Rat(2), Rat(-3)});
}

static RationalMapLift random_map_p(int n, const WeightedRing& target, long k, Rng& rng) {
    const WeightedRing S = projective_ring(n + 1);
    std::vector<Poly> polys;
    for (int i = 0; i < target.nvars(); ++i)
        polys.push_back(random_homogeneous(S, k * target.weights[i], rng));
    return RationalMapLift(S, target, polys);
}

TEST_CASE("map lift validation") {
    const WeightedRing S = projective_ring(5);
    const WeightedRing T = projective_ring(3);
    std::vector<Poly> good, bad;
    Rng rng(1, "fol");
    for (int i = 0; i < 3; ++i) good.push_back(random_homogeneous(S, 2, rng));
    const RationalMapLift F(S, T, good);
    CHECK(F.k == 2);
    bad = good;
    bad[2] = random_homogeneous(S, 3, rng);
    CHECK_THROWS_AS(RationalMapLift(S, T, bad), DegreeMismatchError);
    bad = good;
    bad.pop_back();
    CHECK_THROWS_AS(RationalMapLift(S, T, bad), ArityError);

    // weighted target: degrees k*e_i
    const WeightedRing W({1, 1, 2});
    std::vector<Poly> wp = {random_homogeneous(S, 1, rng), random_homogeneous(S, 1, rng),
                            random_homogeneous(S, 2, rng)};
    CHECK(RationalMapLift(S, W, wp).k == 1);
}

TEST_CASE("make_foliation validates") {
    const WeightedRing R = projective_ring(3);
    DiffForm dx0(R, 1);
    dx0.add_term({0}, Poly(R, Rat(1)));
    CHECK_THROWS_AS(make_foliation(dx0), NotDescendingError);
    CHECK_THROWS_AS(make_foliation(DiffForm(R, 1)), ZeroFormError);

    // non-integrable descending form on P^3
    const WeightedRing R4 = projective_ring(4);
    DiffForm u(R4, 1);
    u.add_term({0}, variable(R4, 1));
    u.add_term({1}, -variable(R4, 0));
    u.add_term({2}, variable(R4, 3));
    u.add_term({3}, -variable(R4, 2));
    CHECK(descends(u));
    CHECK_THROWS_AS(make_foliation(u), NotIntegrableError);
}

TEST_CASE("split presentation on P^2 with a constant field") {
    const WeightedRing R = projective_ring(3);
    VectorField X(R);
    X.coeffs[2] = Poly(R, Rat(1)); // d/dx2
    const SplitPresentation pres = split_form_from_fields({X});
    // i_X i_R (dx0^dx1^dx2) = x1 dx0 - x0 dx1 up to overall sign convention
    DiffForm expect(R, 1);
    expect.add_term({0}, variable(R, 1));
    expect.add_term({1}, -variable(R, 0));
    const bool plus = pres.fol.omega == expect;
    const bool minus = pres.fol.omega == -expect;
    CHECK((plus || minus));
    CHECK(pres.fol.delta == 2);
    // annihilated by both R and X
    CHECK(contract(X, pres.fol.omega).component({}).is_zero());
}

TEST_CASE("logarithmic forms") {
    Rng rng(17, "fol");
    const Foliation fol = log_p2(rng);
    CHECK(fol.delta == 3);
    CHECK(descends(fol.omega));
    // resonance violation
    const WeightedRing R = projective_ring(3);
    CHECK_THROWS_AS(
        logarithmic_form({variable(R, 0), variable(R, 1)}, {Rat(1), Rat(1)}),
        ResonanceError);
    // weighted factors: deg f0=1, f1=1, f2=2 with lambda=(1,1,-1)
    const Poly q = variable(R, 0) * variable(R, 2) - variable(R, 1) * variable(R, 1);
    const Foliation wlog =
        logarithmic_form({variable(R, 0), variable(R, 1), q}, {Rat(1), Rat(1), Rat(-1)});
    CHECK(wlog.delta == 4);
}

TEST_CASE("pullback presentation agrees with direct pullback") {
    Rng rng(23, "fol");
    const Foliation alpha = log_p2(rng);
    const RationalMapLift F = random_map_p(4, alpha.ring, 1, rng);
    const PullbackPresentation pres = make_pullback(F, alpha);
    CHECK(pres.omega == pullback(F, alpha.omega));
    CHECK(pres.delta_omega == 3);
    CHECK(descends(pres.omega));
    // the pullback is a foliation
    const Foliation om = make_foliation(pres.omega);
    CHECK(om.delta == 3);
}

TEST_CASE("euler identity: unfolding along G = (e_i F_i) rescales omega") {
    Rng rng(31, "fol");
    for (int trial = 0; trial < 5; ++trial) {
        const Foliation alpha = log_p2(rng);
        const RationalMapLift F = random_map_p(4, alpha.ring, 1, rng);
        const PullbackPresentation pres = make_pullback(F, alpha);
        std::vector<Poly> G;
        for (int i = 0; i < 3; ++i) G.push_back(F.polys[i] * Rat(F.target.weights[i]));
        const DiffForm eta = special_unfolding(pres, G);
        CHECK(eta == pres.omega * Rat(alpha.delta));
    }
}

TEST_CASE("special unfoldings descend") {
    Rng rng(41, "fol");
    const Foliation alpha = log_p2(rng);
    const RationalMapLift F = random_map_p(4, alpha.ring, 1, rng);
    const PullbackPresentation pres = make_pullback(F, alpha);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Poly> G;
        for (int i = 0; i < 3; ++i) G.push_back(random_homogeneous(F.source, 1, rng));
        const DiffForm eta = special_unfolding(pres, G);
        CHECK(descends(eta));
    }
    // degree validation
    std::vector<Poly> bad(3, Poly(F.source));
    bad[0] = random_homogeneous(F.source, 2, rng);
    CHECK_THROWS_AS(special_unfolding(pres, bad), DegreeMismatchError);
}

TEST_CASE("first-order pullback matches the dual-number expansion") {
    Rng rng(53, "fol");
    for (int trial = 0; trial < 8; ++trial) {
        const Foliation alpha = log_p2(rng);
        const RationalMapLift F = random_map_p(4, alpha.ring, 1, rng);
        std::vector<Poly> G;
        for (int i = 0; i < 3; ++i) G.push_back(random_homogeneous(F.source, 1, rng));
        // beta: a random descending 1-form on the target (degree 3)
        DiffForm beta(alpha.ring, 1);
        {
            const Poly a = random_homogeneous(alpha.ring, 1, rng);
            const Poly b = random_homogeneous(alpha.ring, 1, rng);
            // x_s a dx_t - x_t b dx_s style descending combination
            beta.add_term({0}, variable(alpha.ring, 1) * a);
            beta.add_term({1}, -variable(alpha.ring, 0) * a);
            beta.add_term({1}, variable(alpha.ring, 2) * b);
            beta.add_term({2}, -variable(alpha.ring, 1) * b);
        }
        REQUIRE(descends(beta));
        const FirstOrderPullback got = first_order_pullback(F, G, alpha, beta);
        const testing::DualForm want = testing::dual_pullback(F, G, alpha.omega, beta);
        CHECK(got.omega == want.re);
        CHECK(got.eta == want.ep);
    }
}

TEST_CASE("jacobian relations and minors for split presentations") {
    Rng rng(61, "fol");
    // P^2 target: one generic linear field
    const WeightedRing T = projective_ring(3);
    VectorField X(T);
    for (int i = 0; i < 3; ++i) X.coeffs[i] = random_homogeneous(T, 1, rng);
    const SplitPresentation sp = split_form_from_fields({X});
    const RationalMapLift F = random_map_p(4, T, 1, rng);
    const PullbackPresentation pres = make_pullback(F, sp.fol);
    const JacobianRelationsReport rep = jacobian_relations_check(pres, sp.fields);
    CHECK(rep.euler_relation_ok);
    REQUIRE(rep.field_relation_ok.size() == 1);
    CHECK(rep.field_relation_ok[0]);
    CHECK(rep.minors_match);
    CHECK(rep.minor_scalar != 0);
}

TEST_CASE("ideals of a presentation") {
    Rng rng(71, "fol");
    const Foliation alpha = log_p2(rng);
    const RationalMapLift F = random_map_p(4, alpha.ring, 1, rng);
    const PullbackPresentation pres = make_pullback(F, alpha);
    CHECK(k0_ideal(pres).generators.size() == 3);
    CHECK(map_base_ideal(F).generators.size() == 3);
    CHECK(kr_ideal(pres, 1).generators.size() == 9);
    CHECK(kr_ideal(pres, 0).generators.size() == 3);
    CHECK(singular_ideal(alpha).generators.size() == 3);
}

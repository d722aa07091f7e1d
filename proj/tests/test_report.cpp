#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/json_io.hpp"
#include "folia/report.hpp"

using namespace folia;

TEST_CASE("canonical emission is key-order independent") {
    Report a("census", 0), b("census", 0);
    a.set_inputs({{"n", 5}, {"k", 1}});
    b.set_inputs({{"k", 1}, {"n", 5}});
    CHECK(a.emit_json() == b.emit_json());
    CHECK(a.body()["digest"] == b.body()["digest"]);
    CHECK(a.body()["schema_version"] == Report::kSchemaVersion);
}

TEST_CASE("digest changes with content") {
    CHECK(digest_hex({{"a", 1}}) != digest_hex({{"a", 2}}));
    CHECK(digest_hex({{"a", 1}, {"b", 2}}) == digest_hex({{"b", 2}, {"a", 1}}));
    CHECK(digest_hex({{"a", 1}}).size() == 16);
}

TEST_CASE("csv emission and escaping") {
    Report r("census", 0);
    r.body()["rows"] = nlohmann::json::array(
        {{{"family", "a,b"}, {"degree", 4}}, {{"family", "plain"}, {"degree", 7}}});
    const std::string csv = r.emit_csv();
    CHECK(csv == "degree,family\n4,\"a,b\"\n7,plain\n");
    Report empty("census", 0);
    CHECK(empty.emit_csv() == "");
}

TEST_CASE("poly json round trip") {
    const WeightedRing R({1, 1, 2});
    Poly p(R);
    p.add_term({1, 0, 1}, Rat(-3, 2));
    p.add_term({3, 0, 0}, Rat(5));
    const Poly q = poly_from_json(poly_to_json(p));
    CHECK(q == p);
    CHECK(q.ring() == R);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json{{"weights", {1, 1}}}), ParseError);
}

TEST_CASE("form json round trip") {
    const WeightedRing R = projective_ring(3);
    DiffForm u(R, 2);
    u.add_term({0, 1}, variable(R, 2));
    u.add_term({1, 2}, variable(R, 0) * Rat(1, 3));
    const DiffForm v = form_from_json(form_to_json(u));
    CHECK(v == u);
}

TEST_CASE("foliation json validates on load") {
    const WeightedRing R = projective_ring(3);
    DiffForm a(R, 1);
    a.add_term({0}, variable(R, 1));
    a.add_term({1}, -variable(R, 0));
    Foliation fol;
    fol.ring = R;
    fol.omega = a;
    fol.delta = 2;
    const Foliation back = foliation_from_json(foliation_to_json(fol));
    CHECK(back.omega == a);
    CHECK(back.delta == 2);

    // a non-descending form must be rejected on load
    DiffForm bad(R, 1);
    bad.add_term({0}, variable(R, 0));
    CHECK_THROWS_AS(foliation_from_json(form_to_json(bad)), NotDescendingError);

    // stated delta must agree
    nlohmann::json j = foliation_to_json(fol);
    j["delta"] = 5;
    CHECK_THROWS_AS(foliation_from_json(j), ParseError);
}

TEST_CASE("map json round trip") {
    const WeightedRing S = projective_ring(4);
    const WeightedRing T({1, 1, 2});
    Rng rng(3, "io");
    std::vector<Poly> polys = {random_homogeneous(S, 1, rng), random_homogeneous(S, 1, rng),
                               random_homogeneous(S, 2, rng)};
    const RationalMapLift F(S, T, polys);
    const RationalMapLift G = map_from_json(map_to_json(F));
    CHECK(G.k == 1);
    CHECK(G.target == T);
    for (int i = 0; i < 3; ++i) CHECK(G.polys[i] == F.polys[i]);
    nlohmann::json j = map_to_json(F);
    j["k"] = 7;
    CHECK_THROWS_AS(map_from_json(j), ParseError);
}

TEST_CASE("file io") {
    const std::string path = "/tmp/folia_test_io.json";
    write_file(path, "{\"x\": 1}\n");
    CHECK(load_json_file(path)["x"] == 1);
    CHECK_THROWS_AS(load_json_file("/nonexistent/nope.json"), ParseError);
    write_file(path, "not json");
    CHECK_THROWS_AS(load_json_file(path), ParseError);
}

#include "folia/json_io.hpp"

#include <fstream>
#include <sstream>

namespace folia {

static std::vector<int> ints_from(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected array");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError(std::string(what) + ": expected integer");
        v.push_back(x.get<int>());
    }
    return v;
}

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json j;
    j["weights"] = p.ring().weights;
    j["terms"] = nlohmann::json::array();
    for (const auto& [exps, coef] : p.terms()) {
        nlohmann::json t;
        t["coef"] = rat_to_string(coef);
        t["exps"] = exps;
        j["terms"].push_back(t);
    }
    return j;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("terms"))
        throw ParseError("polynomial: need weights and terms");
    const WeightedRing ring(ints_from(j["weights"], "weights"));
    Poly p(ring);
    for (const auto& t : j["terms"]) {
        if (!t.contains("coef") || !t.contains("exps")) throw ParseError("term: need coef and exps");
        const Expvec e = ints_from(t["exps"], "exps");
        if (static_cast<int>(e.size()) != ring.nvars()) throw ParseError("term: exponent arity");
        p.add_term(e, rat_from_string(t["coef"].get<std::string>()));
    }
    return p;
}

static std::string tuple_key(const IndexTuple& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx[i]);
    }
    return s;
}

static IndexTuple tuple_from_key(const std::string& key) {
    IndexTuple idx;
    if (key.empty()) return idx;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            idx.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw ParseError("component key: " + key);
        }
    }
    return idx;
}

nlohmann::json form_to_json(const DiffForm& u) {
    nlohmann::json j;
    j["p"] = u.form_degree();
    j["weights"] = u.ring().weights;
    j["components"] = nlohmann::json::object();
    for (const auto& [idx, poly] : u.components())
        j["components"][tuple_key(idx)] = poly_to_json(poly);
    return j;
}

DiffForm form_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("weights") || !j.contains("components"))
        throw ParseError("form: need p, weights, components");
    const WeightedRing ring(ints_from(j["weights"], "weights"));
    const int p = j["p"].get<int>();
    DiffForm u(ring, p);
    for (const auto& [key, val] : j["components"].items()) {
        const IndexTuple idx = tuple_from_key(key);
        if (static_cast<int>(idx.size()) != p) throw ParseError("form: component arity");
        Poly poly = poly_from_json(val);
        if (poly.ring() != ring) throw ParseError("form: component ring mismatch");
        u.add_term(idx, poly);
    }
    return u;
}

nlohmann::json foliation_to_json(const Foliation& fol) {
    nlohmann::json j = form_to_json(fol.omega);
    j["delta"] = fol.delta;
    return j;
}

Foliation foliation_from_json(const nlohmann::json& j) {
    const Foliation fol = make_foliation(form_from_json(j));
    if (j.contains("delta") && j["delta"].get<long>() != fol.delta)
        throw ParseError("foliation: stated delta disagrees with the form");
    return fol;
}

nlohmann::json map_to_json(const RationalMapLift& F) {
    nlohmann::json j;
    j["k"] = F.k;
    j["target_weights"] = F.target.weights;
    j["polys"] = nlohmann::json::array();
    for (const Poly& f : F.polys) j["polys"].push_back(poly_to_json(f));
    return j;
}

RationalMapLift map_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("target_weights") || !j.contains("polys"))
        throw ParseError("map: need target_weights and polys");
    const WeightedRing target(ints_from(j["target_weights"], "target_weights"));
    std::vector<Poly> polys;
    for (const auto& pj : j["polys"]) polys.push_back(poly_from_json(pj));
    if (polys.empty()) throw ParseError("map: no components");
    const RationalMapLift F(polys[0].ring(), target, polys);
    if (j.contains("k") && j["k"].get<long>() != F.k)
        throw ParseError("map: stated k disagrees with the degrees");
    return F;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << bytes;
}

} // namespace folia

#pragma once

#include <string>

#include <json.hpp>

#include "folia/exterior.hpp"
#include "folia/foliation.hpp"

namespace folia {

// File formats:
//   polynomial: {"weights":[...], "terms":[{"coef":"-3/2","exps":[...]}]}
//   form:       {"p":1, "weights":[...], "components":{"0":poly, "0,2":poly}}
//   map:        {"k":1, "target_weights":[...], "polys":[poly,...]}
//   foliation:  form plus {"delta": ...}

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json form_to_json(const DiffForm& u);
DiffForm form_from_json(const nlohmann::json& j);

nlohmann::json foliation_to_json(const Foliation& fol);
Foliation foliation_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const RationalMapLift& F);
RationalMapLift map_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

} // namespace folia

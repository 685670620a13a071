#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wloc/localization.hpp"

namespace wloc {

// Problem document:
//   {"group": {"kind": "SL2n"|"N", "n": 2, "field": "Q"},
//    "components": [{"id": "P", "residue": "rational"|"twisted", "a": 2,
//                    "normal": "F@1+F@2", "restricted": "F@1+F@2" | {"class": "e1*e2"},
//                    "twist": "rho(1)", "residue_field": "Q(sqrt:2)"}],
//    "invert": {"M": 2}}
// "restricted" defaults to the normal representation, "residue" to rational.
LocalizationProblem problem_from_json(const nlohmann::json& doc);
LocalizationProblem load_problem_file(const std::string& path);
nlohmann::json problem_to_json(const LocalizationProblem& p);

nlohmann::json result_to_json(const ResidueResult& r);
std::string result_to_text(const ResidueResult& r);

}  // namespace wloc

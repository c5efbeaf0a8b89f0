#pragma once

#include <string>

#include <json.hpp>

#include "klr/weight_quiver.hpp"

namespace klr {

// {"ell","k","base","vertices":[{"coeffs","x","beta"}],"arrows":[{"src","dst","label":[i,j]}]}
nlohmann::json to_json(const WeightQuiver& q);
nlohmann::json to_json(const TQuiver& t);  // adds "tags" to each vertex

WeightQuiver quiver_from_json(const nlohmann::json& j);

std::string to_dot(const WeightQuiver& q, const std::string& name = "C");
std::string to_dot(const TQuiver& t);

std::string to_text(const WeightQuiver& q);
std::string to_text(const TQuiver& t);

} // namespace klr

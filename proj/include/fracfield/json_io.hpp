#pragma once
#include <json.hpp>
#include <string>

#include "fracfield/foxh.hpp"
#include "fracfield/problem.hpp"
#include "fracfield/solver.hpp"

namespace fracfield {

using json = nlohmann::json;

// All parsers throw ValidityError on malformed input.
ProblemSpec problem_from_json(const json& j);
json problem_to_json(const ProblemSpec& p);  // custom handles are not serializable

GridSpec grid_from_json(const json& j);

HFunctionSpec hspec_from_json(const json& j);
json hspec_to_json(const HFunctionSpec& s);

json read_json_file(const std::string& path);

}  // namespace fracfield

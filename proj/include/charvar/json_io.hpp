#pragma once

#include <json.hpp>

#include "charvar/coords.hpp"
#include "charvar/model.hpp"
#include "charvar/reduction.hpp"
#include "charvar/switches.hpp"
#include "charvar/traces.hpp"

namespace charvar {

using json = nlohmann::ordered_json;

// Rationals serialize as "p/q" (or "p" for integers); parsing accepts
// rational strings, plain integers, and decimal literals.
json to_json(const Rat& q);
Rat rat_from_json(const json& j);

json to_json(const Coords4<Rat>& x);
json to_json(const Coords4<double>& x);
Coords4<Rat> coords_from_json(const json& j);
Coords4<double> coords_double_from_json(const json& j);

json to_json(const SignVector& eps);
SignVector signs_from_json(const json& j);
// "+--" and [-1,1,...] forms for puncture sign vectors
std::array<int, 3> cusp_signs_from_string(const std::string& s);
json to_json(const std::array<int, 3>& signs);

json to_json(const ComponentLabel& label);

json to_json(const CurveStep& step);
json to_json(const CurveDescriptor& desc);
json model_to_json();

json to_json(const Holonomy<Rat>& h);
json to_json(const Holonomy<double>& h);

json to_json(const SwitchResult<Rat>& r);
json to_json(const EdgeLengths<Rat>& lambda);

json to_json(const TreeAddress& addr);
json to_json(const ReductionLog& log);
json to_json(const WalkReport& report);
json to_json(const ScanReport& report);
json to_json(const SeparationReport& report);

}  // namespace charvar

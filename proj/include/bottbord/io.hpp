#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "bottbord/cobordism.hpp"
#include "bottbord/enumerate.hpp"

namespace bottbord {

using nlohmann::json;

// Input document: {"dims": [...], "coefficients": "Z2"|"Z", "rows": [[...], ...]}.
ReducedVectorMatrix parse_input(const json& doc);
ReducedVectorMatrix parse_input_stream(std::istream& in);
ReducedVectorMatrix parse_input_file(const std::string& path);

// Family spec document: {"dims", "mode", "family": "triangular"|"cyclic"|
// "bounded"|"explicit", "bound", "prod_b", "max_abs_b", "cap", "rows"}.
FamilySpec parse_family_spec(const json& doc);
FamilySpec parse_family_spec_file(const std::string& path);

std::string mode_name(CoeffMode mode);
std::string obstruction_name(Obstruction o);

// Integers as numbers (when they fit), anything else as an exact string.
json rational_json(const Rational& v);

json tristate_json(TriState t);
json report_json(const CharNumberReport& rep); // {"all_zero", "values": {label: value}, ...}
json verdict_json(const CobordismVerdict& V);
json validation_json(const ValidationReport& rep);
json verification_json(const VerificationResult& R);

} // namespace bottbord

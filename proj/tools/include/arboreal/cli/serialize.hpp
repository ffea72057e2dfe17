#pragma once

// JSON forms of the records printed by the command-line tool. Rationals are
// strings ("p/q"), points are strings ("(x, y)" or "inf").

#include "json.hpp"

#include "arboreal/curve_model.hpp"
#include "arboreal/galois.hpp"
#include "arboreal/param.hpp"

namespace arboreal::cli {

using nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const curves::CurvePoint& p);
json to_json(const std::vector<curves::CurvePoint>& pts);

// {gamma, c, level, status, witness: [indices], sqrt, reason?}
json to_json(const galois::LevelCertificate& cert);
galois::LevelCertificate certificate_from_json(const json& j);

// in_S is true, false or "unknown".
json to_json(const param::MembershipRecord& rec);
param::MembershipRecord record_from_json(const json& j);

galois::LevelStatus status_from_string(const std::string& s);

}  // namespace arboreal::cli

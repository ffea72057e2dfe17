#include "arboreal/cli/serialize.hpp"

namespace arboreal::cli {

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw DomainError("expected a rational string");
  return parse_rational(j.get<std::string>());
}

json to_json(const curves::CurvePoint& p) { return p.to_string(); }

json to_json(const std::vector<curves::CurvePoint>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

galois::LevelStatus status_from_string(const std::string& s) {
  for (auto st : {galois::LevelStatus::Maximal, galois::LevelStatus::NonMaximal, galois::LevelStatus::Reducible,
                  galois::LevelStatus::Unknown}) {
    if (s == galois::to_string(st)) return st;
  }
  throw DomainError("unknown level status '" + s + "'");
}

json to_json(const galois::LevelCertificate& cert) {
  json j;
  j["gamma"] = to_json(cert.gamma);
  j["c"] = to_json(cert.c);
  j["level"] = cert.level;
  j["status"] = galois::to_string(cert.status);
  j["witness"] = cert.witness;
  j["sqrt"] = cert.sqrt ? to_json(*cert.sqrt) : json(nullptr);
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  return j;
}

galois::LevelCertificate certificate_from_json(const json& j) {
  galois::LevelCertificate c;
  c.gamma = rational_from_json(j.at("gamma"));
  c.c = rational_from_json(j.at("c"));
  c.level = j.at("level").get<int>();
  c.status = status_from_string(j.at("status").get<std::string>());
  c.witness = j.at("witness").get<std::vector<std::size_t>>();
  if (!j.at("sqrt").is_null()) c.sqrt = rational_from_json(j.at("sqrt"));
  if (j.contains("reason")) c.reason = j.at("reason").get<std::string>();
  return c;
}

json to_json(const param::MembershipRecord& rec) {
  json j;
  j["gamma"] = to_json(rec.gamma);
  j["c"] = to_json(rec.c);
  j["depth"] = rec.depth;
  switch (rec.in_S) {
    case galois::Verdict::Yes:
      j["in_S"] = true;
      break;
    case galois::Verdict::No:
      j["in_S"] = false;
      break;
    case galois::Verdict::Unknown:
      j["in_S"] = "unknown";
      break;
  }
  j["witness_curve"] = rec.witness_curve.empty() ? json(nullptr) : json(rec.witness_curve);
  j["y"] = rec.y ? to_json(*rec.y) : json(nullptr);
  j["reason"] = rec.reason;
  j["exact"] = rec.exact;
  json trail = json::array();
  for (const auto& c : rec.trail) trail.push_back(to_json(c));
  j["trail"] = std::move(trail);
  return j;
}

param::MembershipRecord record_from_json(const json& j) {
  param::MembershipRecord r;
  r.gamma = rational_from_json(j.at("gamma"));
  r.c = rational_from_json(j.at("c"));
  r.depth = j.at("depth").get<int>();
  const auto& s = j.at("in_S");
  if (s.is_boolean()) {
    r.in_S = s.get<bool>() ? galois::Verdict::Yes : galois::Verdict::No;
  } else if (s == "unknown") {
    r.in_S = galois::Verdict::Unknown;
  } else {
    throw DomainError("in_S must be true, false or \"unknown\"");
  }
  if (!j.at("witness_curve").is_null()) r.witness_curve = j.at("witness_curve").get<std::string>();
  if (!j.at("y").is_null()) r.y = rational_from_json(j.at("y"));
  r.reason = j.at("reason").get<std::string>();
  r.exact = j.at("exact").get<bool>();
  for (const auto& c : j.at("trail")) r.trail.push_back(certificate_from_json(c));
  return r;
}

}  // namespace arboreal::cli

#include "mcdlo/json_io.hpp"

#include "mcdlo/error.hpp"

namespace mcdlo {

using nlohmann::json;

json rat_to_json(const Rat& r) { return format_rat(r); }

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw DomainError("expected a rational string, got " + j.dump());
  return parse_rat(j.get<std::string>());
}

json finset_to_json(const FinSet& s) {
  json out = json::array();
  for (const auto& p : s.points()) out.push_back(rat_to_json(p));
  return out;
}

FinSet finset_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected an array of rationals, got " + j.dump());
  std::vector<Rat> pts;
  for (const auto& e : j) pts.push_back(rat_from_json(e));
  const auto n = pts.size();
  FinSet s(std::move(pts));
  if (s.size() != n) throw DomainError("duplicate points in " + j.dump());
  return s;
}

json interval_union_to_json(const IntervalUnion& u) {
  json out = json::array();
  for (const auto& iv : u.intervals()) {
    out.push_back(json::array({rat_to_json(iv.left), iv.right ? rat_to_json(*iv.right) : json("inf")}));
  }
  return out;
}

IntervalUnion interval_union_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected an array of intervals, got " + j.dump());
  std::vector<Interval> raw;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw DomainError("expected [left, right], got " + e.dump());
    Interval iv{rat_from_json(e[0]), std::nullopt};
    if (!(e[1].is_string() && e[1].get<std::string>() == "inf")) iv.right = rat_from_json(e[1]);
    raw.push_back(iv);
  }
  return IntervalUnion::normalize(std::move(raw));
}

std::map<std::string, FinSet> finset_bindings_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("parameter file must hold a JSON object");
  std::map<std::string, FinSet> out;
  for (const auto& [name, value] : j.items()) out.emplace(name, finset_from_json(value));
  return out;
}

std::map<std::string, IntervalUnion> interval_bindings_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("parameter file must hold a JSON object");
  std::map<std::string, IntervalUnion> out;
  for (const auto& [name, value] : j.items()) out.emplace(name, interval_union_from_json(value));
  return out;
}

}  // namespace mcdlo

#ifndef MCDLO_JSON_IO_HPP
#define MCDLO_JSON_IO_HPP

// JSON forms: a rational is the string "p/q"; a FinSet is an array of
// rational strings; an IntervalUnion is an array of [left, right] pairs where
// right is a rational string or the literal "inf".

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "mcdlo/order.hpp"

namespace mcdlo {

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json finset_to_json(const FinSet& s);
FinSet finset_from_json(const nlohmann::json& j);

nlohmann::json interval_union_to_json(const IntervalUnion& u);
IntervalUnion interval_union_from_json(const nlohmann::json& j);

/// A parameter file maps variable names to values.
std::map<std::string, FinSet> finset_bindings_from_json(const nlohmann::json& j);
std::map<std::string, IntervalUnion> interval_bindings_from_json(const nlohmann::json& j);

}  // namespace mcdlo

#endif  // MCDLO_JSON_IO_HPP

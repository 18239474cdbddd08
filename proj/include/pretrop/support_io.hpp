#pragma once

// JSON form of a monomial support:
//   {"ambient_dim": d, "points": [[...], ...]}
// A file may also bundle several supports as {"supports": [ ... ]}.

#include <string>
#include <vector>

#include <json.hpp>

#include "pretrop/cone.hpp"
#include "pretrop/polytope.hpp"

namespace pretrop {

nlohmann::json support_to_json(const Support& s);
Support support_from_json(const nlohmann::json& j);

// {"rays": [...], "lineality": [...]} with the cone's canonical ordering.
nlohmann::json cone_to_json(const Cone& c);

// Accepts either a single support document or a {"supports": [...]} bundle.
std::vector<Support> supports_from_file(const std::string& path);
void write_support_file(const Support& s, const std::string& path);

}  // namespace pretrop

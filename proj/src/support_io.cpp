#include "pretrop/support_io.hpp"

#include <fstream>

#include "pretrop/error.hpp"

namespace pretrop {

using nlohmann::json;

namespace {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(static_cast<long long>(x.get_si()));
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error("BadInput", "expected an integer, got " + j.dump());
}

}  // namespace

json support_to_json(const Support& s) {
  json pts = json::array();
  for (const auto& p : s.points) {
    json row = json::array();
    for (const auto& x : p) row.push_back(int_to_json(x));
    pts.push_back(std::move(row));
  }
  return json{{"ambient_dim", s.ambient_dim}, {"points", std::move(pts)}};
}

Support support_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("points"))
    throw Error("BadInput", "support document needs ambient_dim and points");
  const int dim = j.at("ambient_dim").get<int>();
  std::vector<IntVec> points;
  for (const auto& row : j.at("points")) {
    IntVec p;
    for (const auto& x : row) p.push_back(int_from_json(x));
    points.push_back(std::move(p));
  }
  return make_support(std::move(points), dim);
}

json cone_to_json(const Cone& c) {
  auto rows_to_json = [](const std::vector<IntVec>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
      json row = json::array();
      for (const auto& x : r) row.push_back(int_to_json(x));
      out.push_back(std::move(row));
    }
    return out;
  };
  return json{{"rays", rows_to_json(c.rays())},
              {"lineality", rows_to_json(c.lineality())}};
}

std::vector<Support> supports_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadInput", "cannot open " + path);
  json j;
  in >> j;
  std::vector<Support> out;
  if (j.is_object() && j.contains("supports")) {
    for (const auto& s : j.at("supports")) out.push_back(support_from_json(s));
  } else {
    out.push_back(support_from_json(j));
  }
  return out;
}

void write_support_file(const Support& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("BadInput", "cannot open " + path + " for writing");
  out << support_to_json(s).dump(2) << "\n";
}

}  // namespace pretrop

#include "pretrop/oracle.hpp"

#include <algorithm>
#include <map>

#include "pretrop/engine.hpp"
#include "pretrop/error.hpp"

namespace pretrop {

namespace {

void collect(const std::vector<Polytope>& ps, std::size_t level,
             const Cone& prefix, std::map<ConeKey, Cone>& leaves) {
  if (level == ps.size()) {
    leaves.emplace(prefix.key(), prefix);
    return;
  }
  for (const auto& e : ps[level].edges) {
    Cone meet = intersect(prefix, e.normal_cone);
    if (meet.trivial()) continue;
    collect(ps, level + 1, meet, leaves);
  }
}

}  // namespace

OracleResult brute_force_pretropisms(const std::vector<Polytope>& polytopes,
                                     std::uint64_t cap) {
  if (polytopes.size() < 2)
    throw Error("TooFewPolytopes", "need at least 2 polytopes, got " +
                                       std::to_string(polytopes.size()));
  const int dim = polytopes[0].ambient_dim;
  for (const auto& p : polytopes)
    if (p.ambient_dim != dim)
      throw Error("DimensionMismatch",
                  "polytopes live in different ambient dimensions");

  std::uint64_t tuples = 1;
  for (const auto& p : polytopes) {
    tuples *= static_cast<std::uint64_t>(p.edges.size());
    if (tuples > cap)
      throw Error("OracleTooLarge",
                  "edge tuple count exceeds cap " + std::to_string(cap));
    if (tuples == 0) break;
  }

  OracleResult out;
  out.tuples_examined = tuples;
  if (tuples == 0) return out;

  std::map<ConeKey, Cone> leaves;
  for (const auto& e : polytopes[0].edges)
    collect(polytopes, 1, e.normal_cone, leaves);

  // Keep only maximal leaf cones so the generating-ray set matches what the
  // engine reports; the union of points is unchanged.
  std::vector<Cone> distinct;
  distinct.reserve(leaves.size());
  for (auto& [key, cone] : leaves) distinct.push_back(std::move(cone));
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool swallowed = false;
    for (std::size_t j = 0; j < distinct.size() && !swallowed; ++j) {
      if (i == j || distinct[i].dim() > distinct[j].dim()) continue;
      if (contains(distinct[j], distinct[i])) swallowed = true;
    }
    if (!swallowed) out.cones.push_back(distinct[i]);
  }

  std::vector<IntVec> rays;
  for (const auto& c : out.cones) {
    rays.insert(rays.end(), c.rays().begin(), c.rays().end());
    for (const auto& l : c.lineality()) {
      rays.push_back(l);
      rays.push_back(negated(l));
    }
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  for (const auto& r : rays)
    if (validate_pretropism(polytopes, r)) out.rays.push_back(r);
  return out;
}

}  // namespace pretrop

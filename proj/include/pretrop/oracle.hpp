#pragma once

// Brute-force pretropism enumeration over every tuple of edges, one per
// polytope. Ground truth for small instances; shares only the cone
// primitives with the search engine.

#include <cstdint>
#include <vector>

#include "pretrop/cone.hpp"
#include "pretrop/polytope.hpp"

namespace pretrop {

struct OracleResult {
  std::vector<IntVec> rays;   // validated generating rays, deduplicated, sorted
  std::vector<Cone> cones;    // maximal nontrivial tuple cones, sorted by key
  std::uint64_t tuples_examined = 0;  // product of edge counts
};

// Intersects the edge normal cones of every tuple left to right with early
// exit on a trivial partial result. Throws Error("OracleTooLarge") when the
// product of edge counts exceeds `cap`.
OracleResult brute_force_pretropisms(const std::vector<Polytope>& polytopes,
                                     std::uint64_t cap = 10'000'000);

}  // namespace pretrop

#pragma once

// Supports of the cyclic n-roots system and of its reduced form (first
// n-1 equations dehomogenized at coordinate 0), plus the lift taking a
// reduced-system direction back to the full coordinates.

#include <vector>

#include "pretrop/linalg.hpp"
#include "pretrop/polytope.hpp"

namespace pretrop {

struct CyclicSystem {
  int n = 0;
  bool reduced = false;
  std::vector<Support> supports;  // ordered by equation degree
};

// Full system: equation k (k = 1..n-1) has the n cyclic windows of k
// consecutive variables; equation n is the monomial product minus one.
// Throws Error("BadArgument") for n < 3.
CyclicSystem cyclic_supports(int n);

// Reduced system: equations 1..n-1 with coordinate 0 deleted (each equation
// is homogeneous, so this is the dehomogenization at x_0 = 1).
CyclicSystem reduced_cyclic_supports(int n);

// (0, v_1, ..., v_{n-1}): the representative of v's class modulo the
// all-ones lineality direction with first coordinate zero.
IntVec lift_pretropism(const IntVec& v);

}  // namespace pretrop

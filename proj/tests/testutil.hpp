#pragma once

// Shared helpers for the test suites: a cross-platform deterministic PRNG,
// random support/cone generators, an exact Fourier-Motzkin feasibility
// checker (the independent edge oracle), and small set utilities.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pretrop/cone.hpp"
#include "pretrop/linalg.hpp"
#include "pretrop/polytope.hpp"

namespace testutil {

using pretrop::Int;
using pretrop::IntVec;
using pretrop::Rat;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

inline IntVec random_vector(Rng& rng, int dim, long lo, long hi) {
  IntVec v(static_cast<std::size_t>(dim));
  for (auto& x : v) x = rng.range(lo, hi);
  return v;
}

inline pretrop::Support random_support(Rng& rng, int dim, int max_points) {
  const int npts = static_cast<int>(rng.range(3, max_points));
  std::vector<IntVec> pts;
  for (int i = 0; i < npts; ++i) pts.push_back(random_vector(rng, dim, 0, 3));
  return pretrop::make_support(std::move(pts), dim);
}

// Nontrivial cone from random generators (occasionally with lineality).
inline pretrop::Cone random_cone(Rng& rng, int dim) {
  while (true) {
    const int nrays = static_cast<int>(rng.range(1, dim + 2));
    std::vector<IntVec> rays;
    for (int i = 0; i < nrays; ++i)
      rays.push_back(random_vector(rng, dim, -3, 3));
    std::vector<IntVec> lin;
    if (rng.range(0, 3) == 0) lin.push_back(random_vector(rng, dim, -2, 2));
    pretrop::Cone c = pretrop::Cone::from_generators(rays, lin, dim);
    if (!c.trivial()) return c;
  }
}

// ---------------------------------------------------------------------------
// Exact feasibility of { x : <a,x> >= b } systems by Fourier-Motzkin
// elimination over Q. Small dimensions only.

struct LinIneq {
  std::vector<Rat> a;
  Rat b;  // <a, x> >= b
};

inline bool fm_feasible(std::vector<LinIneq> sys, std::size_t nvars) {
  for (std::size_t var = nvars; var-- > 0;) {
    std::vector<LinIneq> lower, upper, rest;
    for (auto& q : sys) {
      const int s = sgn(q.a[var]);
      if (s > 0)
        lower.push_back(std::move(q));
      else if (s < 0)
        upper.push_back(std::move(q));
      else
        rest.push_back(std::move(q));
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // lo: x_var >= (b_lo - rest_lo)/a_lo ; up gives an upper bound.
        LinIneq combo;
        combo.a.assign(var, Rat(0));
        const Rat scale_lo = -up.a[var];  // positive
        const Rat scale_up = lo.a[var];   // positive
        for (std::size_t j = 0; j < var; ++j)
          combo.a[j] = scale_lo * lo.a[j] + scale_up * up.a[j];
        combo.b = scale_lo * lo.b + scale_up * up.b;
        rest.push_back(std::move(combo));
      }
    }
    for (auto& q : rest) q.a.resize(var);
    sys = std::move(rest);
  }
  for (const auto& q : sys)
    if (q.b > 0) return false;  // 0 >= b with b > 0
  return true;
}

// Independent edge oracle: {u, v} spans an edge of conv(points) iff some
// direction is equal on u and v, and strictly smaller there than on every
// point not lying on the segment [u, v].
inline bool edge_by_supporting_normal(const std::vector<IntVec>& points,
                                      std::size_t ui, std::size_t vi) {
  const std::size_t dim = points[ui].size();
  const IntVec& u = points[ui];
  const IntVec& v = points[vi];

  auto on_segment = [&](const IntVec& w) -> bool {
    // w = u + t (v - u) with t in [0, 1]?
    std::optional<Rat> t;
    for (std::size_t j = 0; j < dim; ++j) {
      const Int dw = w[j] - u[j];
      const Int dv = v[j] - u[j];
      if (dv == 0) {
        if (dw != 0) return false;
      } else {
        Rat tj = Rat(dw) / Rat(dv);
        if (t && *t != tj) return false;
        t = tj;
      }
    }
    return t && *t >= 0 && *t <= 1;
  };

  std::vector<LinIneq> sys;
  // <v - u, n> = 0 as two inequalities.
  LinIneq eq1, eq2;
  eq1.a.resize(dim);
  eq2.a.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    eq1.a[j] = Rat(v[j] - u[j]);
    eq2.a[j] = -Rat(v[j] - u[j]);
  }
  eq1.b = eq2.b = 0;
  sys.push_back(eq1);
  sys.push_back(eq2);
  for (std::size_t w = 0; w < points.size(); ++w) {
    if (w == ui || w == vi || on_segment(points[w])) continue;
    LinIneq strict;
    strict.a.resize(dim);
    for (std::size_t j = 0; j < dim; ++j)
      strict.a[j] = Rat(points[w][j] - u[j]);
    strict.b = 1;  // strictly supporting, scaled
    sys.push_back(std::move(strict));
  }
  return fm_feasible(std::move(sys), dim);
}

// ---------------------------------------------------------------------------

inline std::set<std::string> ray_set(const std::vector<IntVec>& rays) {
  std::set<std::string> out;
  for (const auto& r : rays) out.insert(pretrop::to_string(r));
  return out;
}

inline IntVec vec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace testutil

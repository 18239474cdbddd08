#include "pretrop/cyclic.hpp"

#include "pretrop/error.hpp"

namespace pretrop {

namespace {

// Indicator vector of the window {j, j+1, ..., j+k-1} mod n.
IntVec window_point(int n, int k, int j) {
  IntVec v(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < k; ++t) v[static_cast<std::size_t>((j + t) % n)] = 1;
  return v;
}

}  // namespace

CyclicSystem cyclic_supports(int n) {
  if (n < 3) throw Error("BadArgument", "cyclic system needs n >= 3");
  CyclicSystem sys;
  sys.n = n;
  sys.reduced = false;
  for (int k = 1; k < n; ++k) {
    std::vector<IntVec> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) pts.push_back(window_point(n, k, j));
    sys.supports.push_back(make_support(std::move(pts), n));
  }
  std::vector<IntVec> prod;
  prod.push_back(IntVec(static_cast<std::size_t>(n), 1));
  prod.push_back(IntVec(static_cast<std::size_t>(n), 0));
  sys.supports.push_back(make_support(std::move(prod), n));
  return sys;
}

CyclicSystem reduced_cyclic_supports(int n) {
  if (n < 3) throw Error("BadArgument", "cyclic system needs n >= 3");
  CyclicSystem sys;
  sys.n = n;
  sys.reduced = true;
  for (int k = 1; k < n; ++k) {
    std::vector<IntVec> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      IntVec full = window_point(n, k, j);
      pts.emplace_back(full.begin() + 1, full.end());
    }
    sys.supports.push_back(make_support(std::move(pts), n - 1));
  }
  return sys;
}

IntVec lift_pretropism(const IntVec& v) {
  if (is_zero(v)) throw Error("ZeroVector", "lift of the zero vector");
  IntVec out;
  out.reserve(v.size() + 1);
  out.push_back(0);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace pretrop

#include "pretrop/cyclic.hpp"

#include <doctest.h>

#include <set>

#include "pretrop/engine.hpp"
#include "pretrop/error.hpp"
#include "testutil.hpp"

using namespace pretrop;
using testutil::vec;

namespace {

std::set<std::string> point_set(const Support& s) {
  std::set<std::string> out;
  for (const auto& p : s.points) out.insert(to_string(p));
  return out;
}

// Window oracle used by the tests: indicator of {j..j+k-1} mod n.
IntVec window(int n, int k, int j) {
  IntVec v(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < k; ++t) v[static_cast<std::size_t>((j + t) % n)] = 1;
  return v;
}

}  // namespace

TEST_CASE("cyclic-3 first equation is the unit simplex support") {
  const CyclicSystem sys = cyclic_supports(3);
  REQUIRE(sys.supports.size() == 3);
  CHECK(point_set(sys.supports[0]) ==
        std::set<std::string>{"(0, 0, 1)", "(0, 1, 0)", "(1, 0, 0)"});
}

TEST_CASE("cyclic-4 second equation has the four windows of length 2") {
  const CyclicSystem sys = cyclic_supports(4);
  CHECK(point_set(sys.supports[1]) ==
        std::set<std::string>{"(1, 1, 0, 0)", "(0, 1, 1, 0)", "(0, 0, 1, 1)",
                              "(1, 0, 0, 1)"});
}

TEST_CASE("cyclic-4 last equation is monomial minus constant") {
  const CyclicSystem sys = cyclic_supports(4);
  REQUIRE(sys.supports.size() == 4);
  CHECK(point_set(sys.supports[3]) ==
        std::set<std::string>{"(0, 0, 0, 0)", "(1, 1, 1, 1)"});
}

TEST_CASE("reduced cyclic-4 supports") {
  const CyclicSystem sys = reduced_cyclic_supports(4);
  REQUIRE(sys.supports.size() == 3);
  for (const auto& s : sys.supports) CHECK(s.ambient_dim == 3);
  CHECK(point_set(sys.supports[0]) ==
        std::set<std::string>{"(0, 0, 0)", "(1, 0, 0)", "(0, 1, 0)",
                              "(0, 0, 1)"});
  CHECK(point_set(sys.supports[1]) ==
        std::set<std::string>{"(1, 0, 0)", "(1, 1, 0)", "(0, 1, 1)",
                              "(0, 0, 1)"});
  CHECK(point_set(sys.supports[2]) ==
        std::set<std::string>{"(1, 1, 0)", "(1, 1, 1)", "(0, 1, 1)",
                              "(1, 0, 1)"});
}

TEST_CASE("reduced supports match the window oracle with coordinate 0 deleted") {
  for (int n = 3; n <= 8; ++n) {
    const CyclicSystem sys = reduced_cyclic_supports(n);
    REQUIRE(sys.supports.size() == static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k) {
      std::set<std::string> expect;
      for (int j = 0; j < n; ++j) {
        const IntVec full = window(n, k, j);
        expect.insert(to_string(IntVec(full.begin() + 1, full.end())));
      }
      CHECK(point_set(sys.supports[static_cast<std::size_t>(k - 1)]) == expect);
    }
  }
}

TEST_CASE("support sizes and homogeneity") {
  for (int n = 3; n <= 8; ++n) {
    const CyclicSystem full = cyclic_supports(n);
    REQUIRE(full.supports.size() == static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k) {
      const Support& s = full.supports[static_cast<std::size_t>(k - 1)];
      CHECK(s.points.size() == static_cast<std::size_t>(n));
      for (const auto& p : s.points) {
        Int sum = 0;
        for (const auto& x : p) sum += x;
        CHECK(sum == k);
      }
    }
    CHECK(full.supports.back().points.size() == 2);

    const CyclicSystem red = reduced_cyclic_supports(n);
    for (const auto& s : red.supports)
      CHECK(s.points.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("full supports are invariant under the cyclic shift") {
  for (int n = 3; n <= 7; ++n) {
    const CyclicSystem full = cyclic_supports(n);
    for (int k = 1; k < n; ++k) {
      const Support& s = full.supports[static_cast<std::size_t>(k - 1)];
      std::set<std::string> shifted;
      for (const auto& p : s.points) {
        IntVec q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
          q[(i + 1) % p.size()] = p[i];
        shifted.insert(to_string(q));
      }
      CHECK(shifted == point_set(s));
    }
  }
}

TEST_CASE("lift prepends a zero coordinate") {
  CHECK(lift_pretropism(vec({1, 0, -1})) == vec({0, 1, 0, -1}));
  CHECK_THROWS_WITH_AS(lift_pretropism(vec({0, 0})),
                       doctest::Contains("ZeroVector"), Error);
}

TEST_CASE("shifting a lifted ray along the all-ones direction keeps faces") {
  // Holds for the homogeneous window equations, i.e. supports 1..n-1.
  const CyclicSystem full = cyclic_supports(4);
  const IntVec base = lift_pretropism(vec({1, 0, -1}));
  for (long c : {-1L, 0L, 1L}) {
    IntVec shifted(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) shifted[i] = base[i] + c;
    for (std::size_t k = 0; k + 1 < full.supports.size(); ++k) {
      const Polytope p = build_polytope(full.supports[k]);
      const FaceDescriptor a = support_face(p, base);
      const FaceDescriptor b = support_face(p, shifted);
      CHECK(a.vertex_ids == b.vertex_ids);
    }
  }
}

TEST_CASE("lift preserves the pretropism predicate in both directions") {
  testutil::Rng rng(167);
  for (int n : {4, 5}) {
    std::vector<Polytope> reduced, full_first;
    for (const auto& s : reduced_cyclic_supports(n).supports)
      reduced.push_back(build_polytope(s));
    const CyclicSystem full = cyclic_supports(n);
    for (int k = 0; k < n - 1; ++k)
      full_first.push_back(
          build_polytope(full.supports[static_cast<std::size_t>(k)]));
    for (int trial = 0; trial < 40; ++trial) {
      const IntVec v = testutil::random_vector(rng, n - 1, -2, 2);
      if (is_zero(v)) continue;
      CHECK(validate_pretropism(reduced, v) ==
            validate_pretropism(full_first, lift_pretropism(v)));
    }
  }
}

TEST_CASE("n below 3 is rejected") {
  CHECK_THROWS_WITH_AS(cyclic_supports(2), doctest::Contains("BadArgument"),
                       Error);
  CHECK_THROWS_WITH_AS(reduced_cyclic_supports(2),
                       doctest::Contains("BadArgument"), Error);
}

#include "pretrop/oracle.hpp"

#include <doctest.h>

#include <map>
#include <set>

#include "pretrop/cyclic.hpp"
#include "pretrop/engine.hpp"
#include "pretrop/error.hpp"
#include "testutil.hpp"

using namespace pretrop;
using testutil::vec;

namespace {

Polytope unit_square() {
  return build_polytope(
      make_support({vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})}, 2));
}

Polytope diamond() {
  return build_polytope(make_support(
      {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})}, 2));
}

std::vector<Polytope> reduced_cyclic_polytopes(int n) {
  std::vector<Polytope> out;
  for (const auto& s : reduced_cyclic_supports(n).supports)
    out.push_back(build_polytope(s));
  return out;
}

}  // namespace

TEST_CASE("two unit squares") {
  const OracleResult res =
      brute_force_pretropisms({unit_square(), unit_square()});
  CHECK(res.tuples_examined == 16);
  CHECK(res.rays == std::vector<IntVec>{vec({-1, 0}), vec({0, -1}),
                                        vec({0, 1}), vec({1, 0})});
}

TEST_CASE("square and diamond have no common positive-dimensional faces") {
  const Polytope sq = unit_square();
  const Polytope di = diamond();

  // Exhaustive check over the 16 edge pairs, independent of the oracle's
  // own enumeration: no pair of edge normal cones meets nontrivially, and
  // no diagonal direction supports an edge of the square.
  std::size_t nontrivial = 0;
  for (const auto& e1 : sq.edges)
    for (const auto& e2 : di.edges)
      if (!intersect(e1.normal_cone, e2.normal_cone).trivial()) ++nontrivial;
  CHECK(nontrivial == 0);
  for (long a : {-1L, 1L})
    for (long b : {-1L, 1L})
      CHECK_FALSE(validate_pretropism({sq, di}, vec({a, b})));

  const OracleResult res = brute_force_pretropisms({sq, di});
  CHECK(res.tuples_examined == 16);
  CHECK(res.rays.empty());
  CHECK(res.cones.empty());
}

TEST_CASE("reduced cyclic-4 regression fixture") {
  const OracleResult res =
      brute_force_pretropisms(reduced_cyclic_polytopes(4));
  // Frozen after the first verified run: both directions of the tropism of
  // the classic cyclic-4 solution curve (a, 1/a, -a, -1/a), whose exponent
  // vector (1,-1,1,-1) dehomogenizes to (-2,0,-2) ~ (-1,0,-1). All three
  // engine modes agree on this set.
  const std::vector<IntVec> expect{vec({-1, 0, -1}), vec({1, 0, 1})};
  CHECK(res.rays == expect);
  for (const auto& r : res.rays)
    CHECK(validate_pretropism(reduced_cyclic_polytopes(4), r));
}

TEST_CASE("oracle agrees with every engine mode on small random tuples") {
  testutil::Rng rng(41);
  int done = 0;
  while (done < 8) {
    const int dim = static_cast<int>(rng.range(2, 3));
    std::vector<Polytope> tuple;
    for (int i = 0; i < 2; ++i)
      tuple.push_back(build_polytope(testutil::random_support(rng, dim, 6)));
    const OracleResult oracle = brute_force_pretropisms(tuple);
    for (PruneMode m :
         {PruneMode::Naive, PruneMode::Vertical, PruneMode::Horizontal}) {
      EngineConfig cfg;
      cfg.mode = m;
      const PretropismReport rep = find_pretropisms(tuple, cfg);
      std::vector<IntVec> validated;
      for (std::size_t i = 0; i < rep.rays.size(); ++i)
        if (rep.validated[i]) validated.push_back(rep.rays[i]);
      CHECK(validated == oracle.rays);
    }
    ++done;
  }
}

TEST_CASE("early exit never changes the leaf cone set") {
  testutil::Rng rng(59);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polytope> tuple;
    for (int i = 0; i < 2; ++i)
      tuple.push_back(build_polytope(testutil::random_support(rng, 2, 6)));
    // Reference without early exit: intersect every full tuple.
    std::map<std::string, Cone> leaves;
    for (const auto& e1 : tuple[0].edges)
      for (const auto& e2 : tuple[1].edges) {
        const Cone meet = intersect(e1.normal_cone, e2.normal_cone);
        if (!meet.trivial()) leaves.emplace(meet.key().bytes, meet);
      }
    std::set<std::string> reference;
    for (const auto& [k, c] : leaves) {
      bool maximal = true;
      for (const auto& [k2, c2] : leaves)
        if (k != k2 && c.dim() <= c2.dim() && contains(c2, c)) maximal = false;
      if (maximal) reference.insert(k);
    }
    const OracleResult res = brute_force_pretropisms(tuple);
    std::set<std::string> got;
    for (const auto& c : res.cones) got.insert(c.key().bytes);
    CHECK(got == reference);
  }
}

TEST_CASE("tuple cap") {
  CHECK_THROWS_WITH_AS(
      brute_force_pretropisms({unit_square(), unit_square()}, 3),
      doctest::Contains("OracleTooLarge"), Error);
}

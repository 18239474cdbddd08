#pragma once

// The pretropism search: edge-skeleton exploration of one polytope against
// one cone, and the level-by-level driver over a polytope tuple. Three
// modes trade work for pruning:
//   naive      - every cone is tested against every edge; no level pruning
//                beyond dropping trivial cones; no containment fast path.
//   vertical   - skeleton walk seeded at the supported face; trivial cones
//                are dropped but duplicate/contained cones survive; no
//                containment fast path.
//   horizontal - vertical plus the containment fast path inside the walk
//                and duplicate removal across each level's cones.
// Counters record intersections performed and containment fast-path hits;
// pruning-time containment checks are not counted.

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "pretrop/cone.hpp"
#include "pretrop/polytope.hpp"

namespace pretrop {

enum class PruneMode { Naive, Vertical, Horizontal };

std::string to_string(PruneMode m);
PruneMode prune_mode_from_string(const std::string& s);

struct StatsTriple {
  std::uint64_t intersections = 0;
  std::uint64_t containments = 0;
  std::uint64_t sum() const { return intersections + containments; }
};

struct PruneStats {
  std::uint64_t intersections = 0;
  std::uint64_t containments = 0;
  std::vector<StatsTriple> per_level;  // one entry per polytope; entry 0 is
                                       // initial cone construction
  std::uint64_t sum() const { return intersections + containments; }
};

struct PretropismReport {
  PruneMode mode = PruneMode::Horizontal;
  bool lower_hull = false;
  std::uint64_t seed = 0;
  std::vector<Cone> cones;        // final cones, duplicates and contained
                                  // cones removed, sorted by key
  std::vector<IntVec> rays;       // generating rays, deduplicated, lex sorted
  std::vector<bool> validated;    // pretropism predicate per ray
  PruneStats stats;
};

struct ExploreResult {
  std::vector<Cone> cones;  // deduplicated by key, sorted
  std::uint64_t intersections = 0;
  std::uint64_t containments = 0;
};

struct ExploreOptions {
  bool all_edges = false;              // test every edge instead of walking
  bool containment_fast_path = true;
  const std::atomic<bool>* cancel = nullptr;
};

// Walks the edge skeleton of p starting from the face supported by a ray
// interior to c; every reached edge is tested against c and the walk
// continues through neighbors of edges whose normal cone meets c
// nontrivially. Throws Error("EmptyCone") for a trivial input cone; an
// edgeless polytope yields an empty result.
ExploreResult explore_edge_skeleton(const Polytope& p, const Cone& c,
                                    std::uint64_t seed,
                                    const ExploreOptions& opt = {});

// Removes duplicate cones by key, then every cone strictly contained in
// another surviving cone. Returns the survivors sorted by key plus the
// number removed.
std::pair<std::vector<Cone>, std::size_t> horizontal_prune(
    std::vector<Cone> cones);

// True iff the face of every polytope supported by r has dimension >= 1.
bool validate_pretropism(const std::vector<Polytope>& polytopes,
                         const IntVec& r);

struct EngineConfig {
  PruneMode mode = PruneMode::Horizontal;
  bool lower_hull = false;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  const std::atomic<bool>* cancel = nullptr;
};

PretropismReport find_pretropisms(const std::vector<Polytope>& polytopes,
                                  const EngineConfig& cfg);

}  // namespace pretrop

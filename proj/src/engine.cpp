#include "pretrop/engine.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <thread>

#include "pretrop/error.hpp"

namespace pretrop {

std::string to_string(PruneMode m) {
  switch (m) {
    case PruneMode::Naive:
      return "naive";
    case PruneMode::Vertical:
      return "vertical";
    case PruneMode::Horizontal:
      return "horizontal";
  }
  return "?";
}

PruneMode prune_mode_from_string(const std::string& s) {
  if (s == "naive") return PruneMode::Naive;
  if (s == "vertical") return PruneMode::Vertical;
  if (s == "horizontal") return PruneMode::Horizontal;
  throw Error("BadArgument", "unknown mode '" + s + "'");
}

namespace {

void check_cancel(const std::atomic<bool>* cancel) {
  if (cancel && cancel->load(std::memory_order_relaxed))
    throw Error("Timeout", "search cancelled");
}

}  // namespace

ExploreResult explore_edge_skeleton(const Polytope& p, const Cone& c,
                                    std::uint64_t seed,
                                    const ExploreOptions& opt) {
  if (c.trivial())
    throw Error("EmptyCone", "explore_edge_skeleton needs a nontrivial cone");
  if (c.ambient_dim() != p.ambient_dim)
    throw Error("DimensionMismatch", "cone and polytope dims differ");
  ExploreResult out;
  if (p.edges.empty()) return out;

  const std::size_t ne = p.edges.size();
  std::vector<bool> enqueued(ne, false);
  std::deque<int> queue;
  if (opt.all_edges) {
    for (std::size_t i = 0; i < ne; ++i) {
      queue.push_back(static_cast<int>(i));
      enqueued[i] = true;
    }
  } else {
    const IntVec r = interior_ray(c, seed);
    const FaceDescriptor face = support_face(p, r);
    for (int id : edges_touching_face(p, face)) {
      queue.push_back(id);
      enqueued[static_cast<std::size_t>(id)] = true;
    }
  }

  std::map<ConeKey, Cone> found;
  while (!queue.empty()) {
    check_cancel(opt.cancel);
    const int id = queue.front();
    queue.pop_front();
    const Edge& edge = p.edges[static_cast<std::size_t>(id)];

    bool added = false;
    if (opt.containment_fast_path && contains(edge.normal_cone, c)) {
      ++out.containments;
      found.emplace(c.key(), c);
      added = true;
    } else {
      Cone meet = intersect(c, edge.normal_cone);
      ++out.intersections;
      if (!meet.trivial()) {
        found.emplace(meet.key(), meet);
        added = true;
      }
    }
    if (added) {
      for (int nb : edge.neighbors) {
        if (!enqueued[static_cast<std::size_t>(nb)]) {
          enqueued[static_cast<std::size_t>(nb)] = true;
          queue.push_back(nb);
        }
      }
    }
  }
  out.cones.reserve(found.size());
  for (auto& [key, cone] : found) out.cones.push_back(std::move(cone));
  return out;
}

std::pair<std::vector<Cone>, std::size_t> horizontal_prune(
    std::vector<Cone> cones) {
  std::size_t removed = 0;
  std::map<ConeKey, Cone> unique;
  for (auto& c : cones) {
    if (!unique.emplace(c.key(), std::move(c)).second) ++removed;
  }
  std::vector<Cone> distinct;
  distinct.reserve(unique.size());
  for (auto& [key, cone] : unique) distinct.push_back(std::move(cone));

  std::vector<Cone> kept;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool swallowed = false;
    for (std::size_t j = 0; j < distinct.size() && !swallowed; ++j) {
      if (i == j) continue;
      if (distinct[i].dim() > distinct[j].dim()) continue;
      if (contains(distinct[j], distinct[i])) swallowed = true;
    }
    if (swallowed)
      ++removed;
    else
      kept.push_back(distinct[i]);
  }
  return {std::move(kept), removed};
}

bool validate_pretropism(const std::vector<Polytope>& polytopes,
                         const IntVec& r) {
  if (is_zero(r)) throw Error("ZeroVector", "validate_pretropism of zero ray");
  for (const auto& p : polytopes)
    if (support_face(p, r).dim < 1) return false;
  return true;
}

namespace {

// Runs one explore task per cone with a fixed-size worker pool; results land
// in per-task slots so merging is independent of scheduling.
std::vector<ExploreResult> run_level(const Polytope& p,
                                     const std::vector<Cone>& cones,
                                     std::uint64_t seed,
                                     const ExploreOptions& opt,
                                     unsigned workers) {
  std::vector<ExploreResult> slots(cones.size());
  if (cones.empty()) return slots;
  const unsigned nthreads = std::max(
      1u, std::min<unsigned>(workers, static_cast<unsigned>(cones.size())));
  if (nthreads == 1) {
    for (std::size_t i = 0; i < cones.size(); ++i)
      slots[i] = explore_edge_skeleton(p, cones[i], seed, opt);
    return slots;
  }
  std::vector<std::exception_ptr> errors(cones.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= cones.size()) return;
      try {
        slots[i] = explore_edge_skeleton(p, cones[i], seed, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return slots;
}

std::vector<Cone> drop_trivial(std::vector<Cone> cones) {
  cones.erase(std::remove_if(cones.begin(), cones.end(),
                             [](const Cone& c) { return c.trivial(); }),
              cones.end());
  return cones;
}

// Level pruning for horizontal mode: duplicate removal by key. This is what
// the reference counters correspond to; removing cones contained in other
// cones as well would shrink the level sets further and distort the
// intersection counts. Containment still pays off through the fast path
// inside the walk and when the final cone set is reported.
std::vector<Cone> dedup_by_key(std::vector<Cone> cones) {
  std::map<ConeKey, Cone> unique;
  for (auto& c : cones) unique.emplace(c.key(), std::move(c));
  std::vector<Cone> out;
  out.reserve(unique.size());
  for (auto& [key, cone] : unique) out.push_back(std::move(cone));
  return out;
}

void sort_by_key(std::vector<Cone>& cones) {
  std::sort(cones.begin(), cones.end(),
            [](const Cone& a, const Cone& b) { return a.key() < b.key(); });
}

}  // namespace

PretropismReport find_pretropisms(const std::vector<Polytope>& polytopes,
                                  const EngineConfig& cfg) {
  if (polytopes.size() < 2)
    throw Error("TooFewPolytopes", "need at least 2 polytopes, got " +
                                       std::to_string(polytopes.size()));
  const int dim = polytopes[0].ambient_dim;
  for (const auto& p : polytopes)
    if (p.ambient_dim != dim)
      throw Error("DimensionMismatch",
                  "polytopes live in different ambient dimensions");

  PretropismReport report;
  report.mode = cfg.mode;
  report.lower_hull = cfg.lower_hull;
  report.seed = cfg.seed;
  report.stats.per_level.assign(polytopes.size(), StatsTriple{});

  ExploreOptions opt;
  opt.all_edges = cfg.mode == PruneMode::Naive;
  opt.containment_fast_path = cfg.mode == PruneMode::Horizontal;
  opt.cancel = cfg.cancel;

  std::vector<Cone> cones;
  for (const auto& e : polytopes[0].edges) cones.push_back(e.normal_cone);
  if (cfg.lower_hull) {
    IntVec up(static_cast<std::size_t>(dim), 0);
    up[0] = 1;
    const Cone upper = Cone::from_constraints({up}, {}, dim);
    for (auto& c : cones) {
      check_cancel(cfg.cancel);
      c = intersect(c, upper);
      ++report.stats.per_level[0].intersections;
    }
  }
  cones = drop_trivial(std::move(cones));
  if (cfg.mode == PruneMode::Horizontal)
    cones = dedup_by_key(std::move(cones));
  else
    sort_by_key(cones);

  for (std::size_t level = 1; level < polytopes.size(); ++level) {
    const auto slots =
        run_level(polytopes[level], cones, cfg.seed, opt, cfg.workers);
    std::vector<Cone> merged;
    for (const auto& slot : slots) {
      report.stats.per_level[level].intersections += slot.intersections;
      report.stats.per_level[level].containments += slot.containments;
      merged.insert(merged.end(), slot.cones.begin(), slot.cones.end());
    }
    if (cfg.mode == PruneMode::Horizontal)
      merged = dedup_by_key(std::move(merged));
    else
      sort_by_key(merged);
    cones = std::move(merged);
  }
  for (const auto& lvl : report.stats.per_level) {
    report.stats.intersections += lvl.intersections;
    report.stats.containments += lvl.containments;
  }

  // Final cones are reported with duplicates and contained cones removed in
  // every mode; the maximal elements are mode independent, which keeps the
  // reported ray set well defined across modes. The search itself (and its
  // counters) is untouched by this.
  report.cones = horizontal_prune(std::move(cones)).first;

  std::vector<IntVec> rays;
  for (const auto& c : report.cones) {
    rays.insert(rays.end(), c.rays().begin(), c.rays().end());
    for (const auto& l : c.lineality()) {
      rays.push_back(l);
      rays.push_back(negated(l));
    }
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (cfg.lower_hull) {
    rays.erase(std::remove_if(rays.begin(), rays.end(),
                              [](const IntVec& r) { return r[0] <= 0; }),
               rays.end());
  }
  report.validated.reserve(rays.size());
  for (const auto& r : rays)
    report.validated.push_back(validate_pretropism(polytopes, r));
  report.rays = std::move(rays);
  return report;
}

}  // namespace pretrop

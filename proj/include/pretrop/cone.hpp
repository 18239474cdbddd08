#pragma once

// Exact polyhedral cones in normal space. Every cone is stored in a
// canonical double description: primitive extreme rays reduced modulo the
// lineality space, lineality as a saturated HNF lattice basis, and the dual
// side (halfspaces + equalities) re-derived so both descriptions are
// minimal. Equality of point sets is equality of keys. Intersection and
// containment are pure functions; the engine owns all operation counters.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pretrop/linalg.hpp"

namespace pretrop {

struct ConeKey {
  std::string bytes;
  friend bool operator==(const ConeKey&, const ConeKey&) = default;
  friend auto operator<=>(const ConeKey&, const ConeKey&) = default;
};

class Cone {
public:
  Cone() = default;

  // Conic hull of `rays` plus the span of `lineality`. Zero generators are
  // ignored; inputs need not be extreme, primitive, or independent.
  static Cone from_generators(const std::vector<IntVec>& rays,
                              const std::vector<IntVec>& lineality,
                              int ambient_dim);

  // { x : <x,h> >= 0 for h in halfspaces, <x,e> = 0 for e in equalities }.
  static Cone from_constraints(const std::vector<IntVec>& halfspaces,
                               const std::vector<IntVec>& equalities,
                               int ambient_dim);

  static Cone full_space(int ambient_dim);
  static Cone zero(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lin_; }
  const std::vector<IntVec>& halfspaces() const { return half_; }
  const std::vector<IntVec>& equalities() const { return eq_; }
  bool trivial() const { return rays_.empty() && lin_.empty(); }
  const ConeKey& key() const { return key_; }

private:
  int ambient_ = 0, dim_ = 0;
  std::vector<IntVec> rays_, lin_, half_, eq_;
  ConeKey key_;
};

// Point-set intersection, recanonicalized from the concatenated halfspace
// descriptions.
Cone intersect(const Cone& a, const Cone& b);

// True iff every generator of `inner` (and the negation of each lineality
// generator) satisfies every constraint of `outer`.
bool contains(const Cone& outer, const Cone& inner);

bool is_trivial(const Cone& c);
ConeKey cone_key(const Cone& c);

// Primitive vector in the relative interior of `c`: a strictly positive
// pseudo-random integer combination of the extreme rays plus a combination
// of the lineality basis. Deterministic for a fixed seed across platforms.
// Throws Error("EmptyCone") on the trivial cone.
IntVec interior_ray(const Cone& c, std::uint64_t seed);

}  // namespace pretrop

template <>
struct std::hash<pretrop::ConeKey> {
  std::size_t operator()(const pretrop::ConeKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};

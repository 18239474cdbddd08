#include "pretrop/cone.hpp"

#include <algorithm>
#include <sstream>

#include "pretrop/error.hpp"

namespace pretrop {

namespace {

struct Constraint {
  IntVec v;
  bool equality;
};

using Bits = std::vector<std::uint64_t>;

Bits bits_make(std::size_t n) { return Bits((n + 63) / 64, 0); }

void bits_set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

// a subset-of b
bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

Bits bits_and(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

struct RawCone {
  std::vector<IntVec> rays;
  std::vector<IntVec> lin;
};

// Double description over exact integers. Starts from the full space and
// cuts with one constraint at a time; the lineality basis absorbs a cut
// whenever possible, otherwise the classic adjacent-pair combination step
// runs on the rays. Tight-constraint bitsets drive the combinatorial
// adjacency test.
RawCone dd_cone(const std::vector<Constraint>& cs, int dim) {
  std::vector<IntVec> lin;
  lin.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[static_cast<std::size_t>(i)] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<IntVec> rays;
  std::vector<Bits> tight;

  for (std::size_t k = 0; k < cs.size(); ++k) {
    const IntVec& h = cs[k].v;
    const bool equality = cs[k].equality;

    // A lineality direction not orthogonal to h absorbs the cut exactly.
    std::size_t l0 = lin.size();
    Int p0;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      Int p = inner(lin[i], h);
      if (p != 0) {
        l0 = i;
        p0 = p;
        break;
      }
    }
    if (l0 != lin.size()) {
      IntVec pivot = lin[l0];
      if (p0 < 0) {
        pivot = negated(pivot);
        p0 = -p0;
      }
      std::vector<IntVec> newlin;
      newlin.reserve(lin.size() - 1);
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == l0) continue;
        Int p = inner(lin[i], h);
        if (p == 0) {
          newlin.push_back(lin[i]);
          continue;
        }
        IntVec adj(static_cast<std::size_t>(dim));
        for (std::size_t j = 0; j < adj.size(); ++j)
          adj[j] = p0 * lin[i][j] - p * pivot[j];
        newlin.push_back(primitive(adj));
      }
      for (std::size_t i = 0; i < rays.size(); ++i) {
        Int p = inner(rays[i], h);
        if (p != 0) {
          IntVec adj(static_cast<std::size_t>(dim));
          for (std::size_t j = 0; j < adj.size(); ++j)
            adj[j] = p0 * rays[i][j] - p * pivot[j];
          rays[i] = primitive(adj);
        }
        bits_set(tight[i], k);
      }
      lin = std::move(newlin);
      if (!equality) {
        Bits t = bits_make(cs.size());
        for (std::size_t j = 0; j < k; ++j) bits_set(t, j);
        rays.push_back(std::move(pivot));
        tight.push_back(std::move(t));
      }
      continue;
    }

    // Lineality entirely on the hyperplane: split rays by sign.
    std::vector<Int> prod(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      prod[i] = inner(rays[i], h);
      const int s = sgn(prod[i]);
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }
    if (neg.empty() && (!equality || pos.empty())) {
      for (std::size_t i : zero) bits_set(tight[i], k);
      continue;
    }

    auto adjacent = [&](std::size_t a, std::size_t b) {
      Bits t = bits_and(tight[a], tight[b]);
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (i == a || i == b) continue;
        if (bits_subset(t, tight[i])) return false;
      }
      return true;
    };

    std::vector<IntVec> new_rays;
    std::vector<Bits> new_tight;
    auto keep = [&](std::size_t i, bool now_tight) {
      new_rays.push_back(std::move(rays[i]));
      Bits t = std::move(tight[i]);
      if (now_tight) bits_set(t, k);
      new_tight.push_back(std::move(t));
    };
    std::vector<std::pair<IntVec, Bits>> combos;
    for (std::size_t p : pos) {
      for (std::size_t m : neg) {
        if (!adjacent(p, m)) continue;
        IntVec v(static_cast<std::size_t>(dim));
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] = prod[p] * rays[m][j] - prod[m] * rays[p][j];
        v = primitive(v);
        bool dup = false;
        for (const auto& c : combos)
          if (c.first == v) {
            dup = true;
            break;
          }
        if (dup) continue;
        Bits t = bits_and(tight[p], tight[m]);
        bits_set(t, k);
        combos.emplace_back(std::move(v), std::move(t));
      }
    }
    if (!equality)
      for (std::size_t i : pos) keep(i, false);
    for (std::size_t i : zero) keep(i, true);
    for (auto& c : combos) {
      new_rays.push_back(std::move(c.first));
      new_tight.push_back(std::move(c.second));
    }
    rays = std::move(new_rays);
    tight = std::move(new_tight);
  }
  return RawCone{std::move(rays), std::move(lin)};
}

// Canonical coset representative of a ray modulo the lineality subspace:
// zero the coordinates at the HNF pivot columns, then rescale primitive.
IntVec reduce_mod_lineality(const IntVec& r, const std::vector<IntVec>& lin) {
  if (lin.empty()) return primitive(r);
  std::vector<Rat> x(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) x[i] = Rat(r[i]);
  for (const auto& h : lin) {
    std::size_t piv = 0;
    while (h[piv] == 0) ++piv;
    if (x[piv] == 0) continue;
    Rat c = x[piv] / Rat(h[piv]);
    for (std::size_t j = piv; j < x.size(); ++j) x[j] -= c * Rat(h[j]);
  }
  Int den = 1;
  for (const auto& q : x)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  IntVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rat scaled = x[i] * Rat(den);
    out[i] = scaled.get_num();
  }
  return primitive(out);
}

// Canonicalize a raw generator description: saturated HNF lineality,
// rays reduced modulo it, sorted lexicographically.
void canonicalize(RawCone& rc, int dim) {
  rc.lin = subspace_basis(rc.lin, static_cast<std::size_t>(dim));
  for (auto& r : rc.rays) r = reduce_mod_lineality(r, rc.lin);
  std::sort(rc.rays.begin(), rc.rays.end(), lex_less);
  rc.rays.erase(std::unique(rc.rays.begin(), rc.rays.end()), rc.rays.end());
}

std::string encode_key(int dim, const std::vector<IntVec>& rays,
                       const std::vector<IntVec>& lin) {
  std::ostringstream os;
  os << "d" << dim << "|R";
  for (const auto& r : rays) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ";";
  }
  os << "|L";
  for (const auto& l : lin) {
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ";";
  }
  return os.str();
}

void check_dims(const std::vector<IntVec>& vs, int dim, const char* what) {
  for (const auto& v : vs)
    if (v.size() != static_cast<std::size_t>(dim))
      throw Error("DimensionMismatch",
                  std::string(what) + " has length " +
                      std::to_string(v.size()) + ", expected " +
                      std::to_string(dim));
}

std::vector<Constraint> as_constraints(const std::vector<IntVec>& ineqs,
                                       const std::vector<IntVec>& eqs) {
  std::vector<Constraint> cs;
  cs.reserve(ineqs.size() + eqs.size());
  for (const auto& e : eqs)
    if (!is_zero(e)) cs.push_back({e, true});
  for (const auto& h : ineqs)
    if (!is_zero(h)) cs.push_back({h, false});
  return cs;
}

}  // namespace

Cone Cone::from_constraints(const std::vector<IntVec>& halfspaces,
                            const std::vector<IntVec>& equalities,
                            int ambient_dim) {
  if (ambient_dim < 0) throw Error("DimensionMismatch", "negative dimension");
  check_dims(halfspaces, ambient_dim, "halfspace");
  check_dims(equalities, ambient_dim, "equality");

  Cone c;
  c.ambient_ = ambient_dim;
  RawCone primal = dd_cone(as_constraints(halfspaces, equalities), ambient_dim);
  canonicalize(primal, ambient_dim);
  c.rays_ = std::move(primal.rays);
  c.lin_ = std::move(primal.lin);

  // Dual run over the canonical generators yields the minimal halfspace
  // description (dual extreme rays) and the equality set (dual lineality).
  RawCone dual = dd_cone(as_constraints(c.rays_, c.lin_), ambient_dim);
  canonicalize(dual, ambient_dim);
  c.half_ = std::move(dual.rays);
  c.eq_ = std::move(dual.lin);

  std::vector<IntVec> gens = c.rays_;
  gens.insert(gens.end(), c.lin_.begin(), c.lin_.end());
  c.dim_ = static_cast<int>(rank_int(gens, static_cast<std::size_t>(ambient_dim)));
  c.key_ = ConeKey{encode_key(ambient_dim, c.rays_, c.lin_)};
  return c;
}

Cone Cone::from_generators(const std::vector<IntVec>& rays,
                           const std::vector<IntVec>& lineality,
                           int ambient_dim) {
  if (ambient_dim < 0) throw Error("DimensionMismatch", "negative dimension");
  check_dims(rays, ambient_dim, "ray");
  check_dims(lineality, ambient_dim, "lineality generator");

  // The dual cone's generators are this cone's constraints.
  RawCone dual = dd_cone(as_constraints(rays, lineality), ambient_dim);
  canonicalize(dual, ambient_dim);
  return from_constraints(dual.rays, dual.lin, ambient_dim);
}

Cone Cone::full_space(int ambient_dim) {
  std::vector<IntVec> id;
  for (int i = 0; i < ambient_dim; ++i) {
    IntVec e(static_cast<std::size_t>(ambient_dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    id.push_back(std::move(e));
  }
  return from_generators({}, id, ambient_dim);
}

Cone Cone::zero(int ambient_dim) { return from_generators({}, {}, ambient_dim); }

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error("DimensionMismatch",
                "intersect: ambient dims " + std::to_string(a.ambient_dim()) +
                    " vs " + std::to_string(b.ambient_dim()));
  std::vector<IntVec> half = a.halfspaces();
  half.insert(half.end(), b.halfspaces().begin(), b.halfspaces().end());
  std::vector<IntVec> eq = a.equalities();
  eq.insert(eq.end(), b.equalities().begin(), b.equalities().end());
  return Cone::from_constraints(half, eq, a.ambient_dim());
}

bool contains(const Cone& outer, const Cone& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw Error("DimensionMismatch",
                "contains: ambient dims " + std::to_string(outer.ambient_dim()) +
                    " vs " + std::to_string(inner.ambient_dim()));
  for (const auto& r : inner.rays()) {
    for (const auto& h : outer.halfspaces())
      if (pretrop::inner(r, h) < 0) return false;
    for (const auto& e : outer.equalities())
      if (pretrop::inner(r, e) != 0) return false;
  }
  for (const auto& l : inner.lineality()) {
    // Lineality generators stand for both directions.
    for (const auto& h : outer.halfspaces())
      if (pretrop::inner(l, h) != 0) return false;
    for (const auto& e : outer.equalities())
      if (pretrop::inner(l, e) != 0) return false;
  }
  return true;
}

bool is_trivial(const Cone& c) { return c.trivial(); }

ConeKey cone_key(const Cone& c) { return c.key(); }

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

IntVec interior_ray(const Cone& c, std::uint64_t seed) {
  if (c.trivial()) throw Error("EmptyCone", "interior_ray of the zero cone");
  std::uint64_t state = seed ^ 0xD1B54A32D192ED03ull;
  IntVec v(static_cast<std::size_t>(c.ambient_dim()), 0);
  for (const auto& r : c.rays()) {
    const Int coef = static_cast<unsigned long>(1 + splitmix64(state) % 7);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coef * r[j];
  }
  for (const auto& l : c.lineality()) {
    const Int coef = static_cast<unsigned long>(1 + splitmix64(state) % 7);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coef * l[j];
  }
  return primitive(v);
}

}  // namespace pretrop

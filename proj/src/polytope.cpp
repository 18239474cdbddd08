#include "pretrop/polytope.hpp"

#include <algorithm>
#include <map>

#include "pretrop/error.hpp"

namespace pretrop {

Support make_support(std::vector<IntVec> points, int ambient_dim) {
  if (ambient_dim <= 0)
    throw Error("DimensionMismatch", "support needs a positive ambient dim");
  for (const auto& p : points)
    if (p.size() != static_cast<std::size_t>(ambient_dim))
      throw Error("DimensionMismatch", "support point " + to_string(p) +
                                           " is not of dimension " +
                                           std::to_string(ambient_dim));
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return Support{ambient_dim, std::move(points)};
}

namespace {

// Enumerate k-subsets of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Polytope build_polytope(const Support& s) {
  if (s.points.empty()) throw Error("EmptySupport", "support has no points");
  const int d = s.ambient_dim;
  const auto& pts = s.points;
  const std::size_t npts = pts.size();

  std::vector<IntVec> diffs;
  diffs.reserve(npts - 1);
  for (std::size_t i = 1; i < npts; ++i) {
    IntVec v(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(v));
  }
  std::vector<IntVec> hullperp =
      kernel_basis_int(diffs, static_cast<std::size_t>(d));
  const std::size_t k = static_cast<std::size_t>(d) - hullperp.size();

  Polytope p;
  p.ambient_dim = d;
  p.dim = static_cast<int>(k);
  for (const auto& h : hullperp)
    p.affine_hull.push_back(AffineEquality{h, inner(pts[0], h)});

  if (k == 0) {
    p.vertices.push_back(pts[0]);
    return p;
  }

  // Facets: each size-k affinely independent point subset spans a candidate
  // hyperplane inside the hull; keep it when all points lie on one side.
  // The normal is the unique direction orthogonal to the subset and inside
  // the hull's direction span, so it is independent of the subset chosen.
  std::map<std::vector<std::size_t>, std::pair<IntVec, Int>> facet_map;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    std::vector<IntVec> rows;
    rows.reserve(k - 1 + hullperp.size());
    for (std::size_t i = 1; i < k; ++i) {
      IntVec v(static_cast<std::size_t>(d));
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = pts[idx[i]][j] - pts[idx[0]][j];
      rows.push_back(std::move(v));
    }
    if (rank_int(rows, static_cast<std::size_t>(d)) != k - 1) continue;
    rows.insert(rows.end(), hullperp.begin(), hullperp.end());
    std::vector<IntVec> normal =
        kernel_basis_int(rows, static_cast<std::size_t>(d));
    if (normal.size() != 1) continue;
    IntVec n = std::move(normal[0]);

    Int mn = inner(pts[0], n), mx = mn;
    for (std::size_t i = 1; i < npts; ++i) {
      Int val = inner(pts[i], n);
      if (val < mn) mn = val;
      if (val > mx) mx = val;
    }
    const Int c = inner(pts[idx[0]], n);
    if (c != mn && c != mx) continue;  // hyperplane cuts the interior
    if (c == mx && c != mn) n = negated(n);
    const Int value = inner(pts[idx[0]], n);

    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < npts; ++i)
      if (inner(pts[i], n) == value) face.push_back(i);
    facet_map.emplace(std::move(face), std::make_pair(std::move(n), value));
  } while (next_subset(idx, npts));

  // Vertices: points whose tight facet normals, together with the hull
  // complement, span the whole space.
  std::vector<std::size_t> vertex_points;
  std::vector<int> point_to_vertex(npts, -1);
  for (std::size_t i = 0; i < npts; ++i) {
    std::vector<IntVec> tight = hullperp;
    for (const auto& [face, nf] : facet_map)
      if (std::binary_search(face.begin(), face.end(), i))
        tight.push_back(nf.first);
    if (rank_int(tight, static_cast<std::size_t>(d)) ==
        static_cast<std::size_t>(d))
      vertex_points.push_back(i);
  }
  for (std::size_t vi = 0; vi < vertex_points.size(); ++vi) {
    point_to_vertex[vertex_points[vi]] = static_cast<int>(vi);
    p.vertices.push_back(pts[vertex_points[vi]]);
  }
  const std::size_t nv = p.vertices.size();

  for (const auto& [face, nf] : facet_map) {
    Facet f;
    f.inner_normal = nf.first;
    f.support_value = nf.second;
    for (std::size_t pi : face)
      if (point_to_vertex[pi] >= 0) f.vertex_ids.push_back(point_to_vertex[pi]);
    std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
    p.facets.push_back(std::move(f));
  }

  // Edges: a vertex pair whose common tight facets cut the hull down to an
  // affine line spans a 1-face; the normal cone is generated by those facet
  // normals with the hull complement as lineality.
  std::vector<std::vector<bool>> on_facet(p.facets.size(),
                                          std::vector<bool>(nv, false));
  for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
    for (int vid : p.facets[fi].vertex_ids)
      on_facet[fi][static_cast<std::size_t>(vid)] = true;

  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      std::vector<IntVec> rows = hullperp;
      std::vector<IntVec> tight_normals;
      for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
        if (on_facet[fi][u] && on_facet[fi][v])
          tight_normals.push_back(p.facets[fi].inner_normal);
      rows.insert(rows.end(), tight_normals.begin(), tight_normals.end());
      if (rank_int(rows, static_cast<std::size_t>(d)) !=
          static_cast<std::size_t>(d) - 1)
        continue;
      Edge e;
      e.id = static_cast<int>(p.edges.size());
      e.u = static_cast<int>(u);
      e.v = static_cast<int>(v);
      e.normal_cone = Cone::from_generators(tight_normals, hullperp, d);
      p.edges.push_back(std::move(e));
    }
  }

  std::vector<std::vector<int>> at_vertex(nv);
  for (const auto& e : p.edges) {
    at_vertex[static_cast<std::size_t>(e.u)].push_back(e.id);
    at_vertex[static_cast<std::size_t>(e.v)].push_back(e.id);
  }
  for (auto& e : p.edges) {
    for (int other : at_vertex[static_cast<std::size_t>(e.u)])
      if (other != e.id) e.neighbors.push_back(other);
    for (int other : at_vertex[static_cast<std::size_t>(e.v)])
      if (other != e.id) e.neighbors.push_back(other);
    std::sort(e.neighbors.begin(), e.neighbors.end());
    e.neighbors.erase(std::unique(e.neighbors.begin(), e.neighbors.end()),
                      e.neighbors.end());
  }
  return p;
}

FaceDescriptor support_face(const Polytope& p, const IntVec& r) {
  if (r.size() != static_cast<std::size_t>(p.ambient_dim))
    throw Error("DimensionMismatch", "support_face: ray length " +
                                         std::to_string(r.size()));
  if (is_zero(r)) throw Error("ZeroVector", "support_face of the zero ray");

  Int m;
  std::vector<int> ids;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Int val = inner(p.vertices[i], r);
    if (i == 0 || val < m) {
      m = val;
      ids.clear();
      ids.push_back(static_cast<int>(i));
    } else if (val == m) {
      ids.push_back(static_cast<int>(i));
    }
  }
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    IntVec v(r.size());
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = p.vertices[static_cast<std::size_t>(ids[i])][j] -
             p.vertices[static_cast<std::size_t>(ids[0])][j];
    diffs.push_back(std::move(v));
  }
  return FaceDescriptor{std::move(ids),
                        static_cast<int>(rank_int(diffs, r.size()))};
}

std::vector<int> edges_touching_face(const Polytope& p,
                                     const FaceDescriptor& f) {
  std::vector<int> out;
  for (const auto& e : p.edges) {
    const bool hit =
        std::binary_search(f.vertex_ids.begin(), f.vertex_ids.end(), e.u) ||
        std::binary_search(f.vertex_ids.begin(), f.vertex_ids.end(), e.v);
    if (hit) out.push_back(e.id);
  }
  return out;
}

}  // namespace pretrop

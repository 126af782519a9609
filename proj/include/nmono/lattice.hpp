#pragma once

#include <nmono/polytope.hpp>

namespace nmono {

// The primitive integral functional on M_gamma = Z^n intersect span(Delta_gamma)
// that is constant on gamma, positive there, and vanishes at the origin.
// ht(v, gamma) = d - <functional, v> for v in M_gamma, so ht(0, gamma) = d.
struct LatticeDistance {
  Int d;           // the distance d_gamma > 0
  IVec functional;  // an ambient integer lift u with <u, v> = d on gamma
};

// Lattice distance of a face from the origin. The face is given by its
// (integer) vertices; requires 0 outside the affine span of the face.
inline LatticeDistance lattice_distance(const std::vector<IVec>& face_vertices) {
  if (face_vertices.empty()) throw domain_error("lattice_distance: empty face");
  const int n = static_cast<int>(face_vertices[0].size());
  for (const IVec& v : face_vertices)
    if (is_zero(v)) throw domain_error("lattice_distance: face contains the origin");

  // M_gamma basis: the span of Delta_gamma is the linear span of the face
  IMat basis = linalg::lattice_span_basis(face_vertices, n);
  if (basis.empty()) throw invariant_error("lattice_distance: degenerate span");
  const std::size_t k1 = basis.size();  // dim gamma + 1

  IMat coords;
  for (const IVec& v : face_vertices) {
    auto c = linalg::integer_coords(basis, v);
    if (!c) throw invariant_error("lattice_distance: vertex outside its own span");
    coords.push_back(*c);
  }
  // the functional w is the primitive kernel vector of the difference matrix
  QMat diffs;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    QVec delta(k1);
    for (std::size_t j = 0; j < k1; ++j) delta[j] = Rat(coords[i][j] - coords[0][j]);
    diffs.push_back(std::move(delta));
  }
  std::vector<IVec> ker;
  if (diffs.empty()) {
    QMat zero(1, QVec(k1, Rat(0)));
    ker = linalg::nullspace_primitive(zero, k1);
  } else {
    ker = linalg::nullspace_primitive(diffs, k1);
  }
  if (ker.size() != 1)
    throw domain_error("lattice_distance: origin lies in the affine span of the face");
  IVec w = ker[0];
  Int d = dot(w, coords[0]);
  if (d == 0) throw domain_error("lattice_distance: origin lies in the affine span of the face");
  if (d < 0) {
    for (Int& x : w) x = -x;
    d = -d;
  }
  for (const IVec& c : coords)
    if (dot(w, c) != d) throw invariant_error("lattice_distance: functional not constant on face");

  IVec u = linalg::dual_solve(basis, w);
  return LatticeDistance{std::move(d), std::move(u)};
}

inline LatticeDistance lattice_distance(const Polytope& P, const Face& gamma) {
  if (gamma.contains_origin) throw domain_error("lattice_distance: face contains the origin");
  if (!gamma.bounded()) throw domain_error("lattice_distance: unbounded face");
  return lattice_distance(P.face_vertices_int(gamma));
}

// ht(v, gamma) = d_gamma - <u_gamma, v>; v must lie in M_gamma.
inline Int height(const IVec& v, const LatticeDistance& ld) {
  return ld.d - dot(ld.functional, v);
}

inline Int height(const IVec& v, const std::vector<IVec>& face_vertices) {
  const int n = static_cast<int>(v.size());
  IMat basis = linalg::lattice_span_basis(face_vertices, n);
  if (!linalg::integer_coords(basis, v))
    throw domain_error("height: point outside the lattice of Delta_gamma");
  return height(v, lattice_distance(face_vertices));
}

namespace detail {

// star triangulation from the lex-least vertex, recursing through the face
// lattice; returns simplices as vertex-id lists
inline std::vector<std::vector<int>> triangulate_face(const Polytope& P, const Face& f) {
  if (f.dim == 0) return {{f.vertex_ids[0]}};
  const int anchor = f.vertex_ids[0];
  std::vector<std::vector<int>> out;
  for (int sub : P.subfaces(f)) {
    const Face& g = P.faces[sub];
    if (g.dim != f.dim - 1) continue;
    if (std::find(g.vertex_ids.begin(), g.vertex_ids.end(), anchor) != g.vertex_ids.end())
      continue;
    for (std::vector<int> s : triangulate_face(P, g)) {
      s.insert(s.begin(), anchor);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace detail

// Normalized lattice volume: (dim)! times the Euclidean volume measured in
// coordinates of the direction lattice L(gamma) intersect Z^n. Points count 1.
inline Int normalized_volume(const std::vector<IVec>& face_vertices) {
  if (face_vertices.empty()) throw domain_error("normalized_volume: empty face");
  if (face_vertices.size() == 1) return 1;
  const int n = static_cast<int>(face_vertices[0].size());
  std::vector<IVec> dirs;
  for (std::size_t i = 1; i < face_vertices.size(); ++i) {
    IVec d(n);
    for (int j = 0; j < n; ++j) d[j] = face_vertices[i][j] - face_vertices[0][j];
    dirs.push_back(std::move(d));
  }
  IMat basis = linalg::lattice_span_basis(dirs, n);
  if (basis.empty()) return 1;  // all vertices coincide
  const std::size_t k = basis.size();

  std::vector<IVec> pts;
  for (const IVec& v : face_vertices) {
    IVec d(n);
    for (int j = 0; j < n; ++j) d[j] = v[j] - face_vertices[0][j];
    auto c = linalg::integer_coords(basis, d);
    if (!c) throw invariant_error("normalized_volume: vertex outside direction span");
    pts.push_back(*c);
  }
  Polytope Q = convex_hull_int(pts);
  if (Q.dim != static_cast<int>(k)) throw invariant_error("normalized_volume: rank mismatch");

  Int vol = 0;
  for (const std::vector<int>& simplex : detail::triangulate_face(Q, Q.top())) {
    IMat edges;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      IVec e(k);
      const IVec a = Q.vertex_int(simplex[0]);
      const IVec b = Q.vertex_int(simplex[i]);
      for (std::size_t j = 0; j < k; ++j) e[j] = b[j] - a[j];
      edges.push_back(std::move(e));
    }
    Int d = linalg::det(edges);
    vol += d < 0 ? -d : d;
  }
  if (vol <= 0) throw invariant_error("normalized_volume: non-positive volume");
  return vol;
}

inline Int normalized_volume(const Polytope& P, const Face& gamma) {
  if (!gamma.bounded()) throw domain_error("normalized_volume: unbounded face");
  if (gamma.dim == 0) return 1;
  return normalized_volume(P.face_vertices_int(gamma));
}

// All lattice points of a bounded region, in lex order. With
// relative_interior_only the facet inequalities are strict (the affine-hull
// equations still hold), i.e. the filter is relative to the region's own span.
inline std::vector<IVec> lattice_points(const Polytope& P, bool relative_interior_only) {
  if (!P.bounded()) throw domain_error("lattice_points: unbounded region");
  const int n = P.ambient_dim;
  IVec lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    Rat mn = P.vertices[0][j], mx = P.vertices[0][j];
    for (const QVec& v : P.vertices) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_rat(mn);
    hi[j] = floor_rat(mx);
  }
  std::vector<IVec> out;
  IVec cur = lo;
  for (int j = 0; j < n; ++j)
    if (lo[j] > hi[j]) return out;
  while (true) {
    bool ok = true;
    QVec q = to_qvec(cur);
    for (const Hyperplane& e : P.equations)
      if (dot(e.normal, q) != e.offset) {
        ok = false;
        break;
      }
    if (ok) {
      for (const Halfspace& h : P.facets) {
        Rat val = dot(h.normal, q);
        if (relative_interior_only ? val <= h.offset : val < h.offset) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(cur);
    int j = n - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

}  // namespace nmono

#pragma once

#include <nmono/linalg.hpp>

#include <map>
#include <set>
#include <utility>

namespace nmono {

struct Halfspace {
  IVec normal;  // primitive integer inner normal: <normal, x> >= offset on the polytope
  Rat offset;
};

struct Hyperplane {
  IVec normal;  // <normal, x> == offset on the affine hull
  Rat offset;
};

struct Face {
  int id = -1;
  int dim = 0;
  std::vector<int> vertex_ids;  // sorted
  std::vector<int> ray_ids;     // sorted; nonempty means the face is unbounded
  std::vector<int> facet_ids;   // facets of the parent containing this face
  bool contains_origin = false;

  bool bounded() const { return ray_ids.empty(); }
  bool at_infinity() const { return !contains_origin; }
};

struct Cone {
  std::vector<IVec> generators;  // primitive, irredundant, lex sorted
  int dim = 0;
};

// A rational polyhedron conv(vertices) + cone(rays), possibly of lower
// dimension than its ambient space. The face list covers all nonempty faces
// including the improper face (the polyhedron itself); the empty face is
// excluded. Everything is ordered deterministically (lex on the data).
class Polytope {
 public:
  int ambient_dim = 0;
  int dim = -1;
  std::vector<QVec> vertices;         // extreme points, lex sorted
  std::vector<IVec> rays;             // primitive extreme recession rays, lex sorted
  std::vector<Halfspace> facets;      // facet inequalities within the affine hull
  std::vector<Hyperplane> equations;  // affine hull equations
  std::vector<Face> faces;            // sorted by (dim, vertex_ids, ray_ids)
  int top_id = -1;                    // the improper face

  const Face& top() const { return faces[top_id]; }
  bool bounded() const { return rays.empty(); }

  bool contains(const QVec& x) const {
    for (const Hyperplane& e : equations)
      if (dot(e.normal, x) != e.offset) return false;
    for (const Halfspace& h : facets)
      if (dot(h.normal, x) < h.offset) return false;
    return true;
  }

  // x lies on the face f (f is cut out of the polyhedron by its facets)
  bool face_contains(const Face& f, const QVec& x) const {
    if (!contains(x)) return false;
    for (int j : f.facet_ids)
      if (dot(facets[j].normal, x) != facets[j].offset) return false;
    return true;
  }

  bool face_subset(const Face& inner, const Face& outer) const {
    return std::includes(outer.vertex_ids.begin(), outer.vertex_ids.end(),
                         inner.vertex_ids.begin(), inner.vertex_ids.end()) &&
           std::includes(outer.ray_ids.begin(), outer.ray_ids.end(), inner.ray_ids.begin(),
                         inner.ray_ids.end());
  }

  const Face* find_face(const std::vector<int>& vids, const std::vector<int>& rids) const {
    auto it = face_index_.find(std::make_pair(vids, rids));
    return it == face_index_.end() ? nullptr : &faces[it->second];
  }

  // gamma_u: the face where <u, .> attains its minimum; throws if u is
  // unbounded below on the polyhedron.
  const Face& supporting_face(const IVec& u) const {
    for (const IVec& r : rays)
      if (dot(u, r) < 0) throw domain_error("supporting_face: unbounded direction");
    Rat m = dot(u, vertices[0]);
    for (const QVec& v : vertices) m = std::min(m, dot(u, v));
    std::vector<int> vids, rids;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (dot(u, vertices[i]) == m) vids.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (dot(u, rays[i]) == 0) rids.push_back(static_cast<int>(i));
    const Face* f = find_face(vids, rids);
    if (!f) throw invariant_error("supporting_face: minimizing set is not a face");
    return *f;
  }

  // sigma(gamma) in the dual fan: the cone spanned by the inner normals of the
  // facets containing gamma. Only defined for full-dimensional polyhedra.
  Cone normal_cone(const Face& f) const {
    if (dim != ambient_dim) throw domain_error("normal_cone: polyhedron is not full-dimensional");
    Cone c;
    for (int j : f.facet_ids) c.generators.push_back(facets[j].normal);
    std::sort(c.generators.begin(), c.generators.end());
    c.dim = ambient_dim - f.dim;
    return c;
  }

  std::vector<int> faces_of_dim(int d) const {
    std::vector<int> out;
    for (const Face& f : faces)
      if (f.dim == d) out.push_back(f.id);
    return out;
  }

  // subfaces of f, f itself included
  std::vector<int> subfaces(const Face& f) const {
    std::vector<int> out;
    for (const Face& g : faces)
      if (face_subset(g, f)) out.push_back(g.id);
    return out;
  }

  QVec vertex(int id) const { return vertices[id]; }
  IVec vertex_int(int id) const { return to_ivec(vertices[id]); }
  std::vector<IVec> face_vertices_int(const Face& f) const {
    std::vector<IVec> out;
    out.reserve(f.vertex_ids.size());
    for (int id : f.vertex_ids) out.push_back(vertex_int(id));
    return out;
  }

  void build_face_index() {
    face_index_.clear();
    for (const Face& f : faces) face_index_[std::make_pair(f.vertex_ids, f.ray_ids)] = f.id;
  }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> face_index_;
};

namespace detail {

struct HullContext {
  std::vector<QVec> pts;   // deduped, lex sorted
  std::vector<IVec> rys;   // primitive, deduped, lex sorted
  QVec p0;
  std::vector<QVec> basis;  // rational basis of the direction space
  int d = 0;                // affine dimension

  QVec coords(const QVec& x, bool affine) const {
    if (d == 0) return {};
    QVec delta = x;
    if (affine)
      for (std::size_t i = 0; i < delta.size(); ++i) delta[i] -= p0[i];
    auto c = linalg::coords_in_basis(basis, delta);
    if (!c) throw invariant_error("convex_hull: point outside affine hull");
    return *c;
  }
};

// facet candidate in coordinate space: <normal, c> >= offset
struct CoordFacet {
  IVec normal;
  Rat offset;
  bool operator<(const CoordFacet& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

inline IVec primitive_integer_direction(const QVec& v) {
  Int scale = 1;
  for (const Rat& x : v) scale = lcm(scale, den(x));
  IVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = num(v[i] * Rat(scale));
  return primitive(std::move(w));
}

}  // namespace detail

// Exact convex hull of rational points plus integer recession rays.
// Deterministic output; supports lower-dimensional hulls. Throws on empty
// input, on a dimension above the cap, and on non-pointed recession cones.
inline Polytope convex_hull(std::vector<QVec> points, std::vector<IVec> rays = {},
                            int dim_cap = 8) {
  if (points.empty()) throw domain_error("convex_hull: no points");
  const int n = static_cast<int>(points[0].size());
  if (n < 1) throw domain_error("convex_hull: ambient dimension must be positive");
  if (n > dim_cap) throw domain_error("convex_hull: ambient dimension exceeds cap");
  for (const QVec& p : points)
    if (static_cast<int>(p.size()) != n) throw domain_error("convex_hull: mixed dimensions");
  for (IVec& r : rays) {
    if (static_cast<int>(r.size()) != n) throw domain_error("convex_hull: mixed dimensions");
    if (is_zero(r)) throw domain_error("convex_hull: zero ray");
    r = primitive(std::move(r));
  }

  detail::HullContext ctx;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  ctx.pts = points;
  ctx.rys = rays;
  ctx.p0 = points[0];

  // affine hull
  std::vector<QVec> dirs;
  for (std::size_t i = 1; i < ctx.pts.size(); ++i) {
    QVec delta(n);
    for (int j = 0; j < n; ++j) delta[j] = ctx.pts[i][j] - ctx.p0[j];
    dirs.push_back(std::move(delta));
  }
  for (const IVec& r : ctx.rys) dirs.push_back(to_qvec(r));
  for (int idx : linalg::independent_subset(dirs)) ctx.basis.push_back(dirs[idx]);
  ctx.d = static_cast<int>(ctx.basis.size());

  Polytope P;
  P.ambient_dim = n;
  P.dim = ctx.d;

  {
    QMat span_rows = ctx.basis;
    std::vector<IVec> eq_normals =
        span_rows.empty()
            ? [&] {
                QMat zero(1, QVec(n, Rat(0)));
                return linalg::nullspace_primitive(zero, n);
              }()
            : linalg::nullspace_primitive(span_rows, n);
    for (IVec& a : eq_normals) {
      Rat off = dot(a, ctx.p0);
      P.equations.push_back(Hyperplane{std::move(a), std::move(off)});
    }
    std::sort(P.equations.begin(), P.equations.end(), [](const Hyperplane& a, const Hyperplane& b) {
      if (a.normal != b.normal) return a.normal < b.normal;
      return a.offset < b.offset;
    });
  }

  // homogenized generators in coordinate space: points (c, 1), rays (c, 0)
  std::vector<QVec> homog;
  const std::size_t np = ctx.pts.size();
  for (const QVec& p : ctx.pts) {
    QVec h = ctx.coords(p, true);
    h.push_back(Rat(1));
    homog.push_back(std::move(h));
  }
  for (const IVec& r : ctx.rys) {
    QVec h = ctx.coords(to_qvec(r), false);
    h.push_back(Rat(0));
    homog.push_back(std::move(h));
  }
  const std::size_t m = homog.size();
  const int d = ctx.d;

  // facet enumeration: every facet is spanned by d homogenized generators
  std::set<detail::CoordFacet> found;
  if (d >= 1) {
    std::vector<int> pick(d);
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) comb[i] = i;
    auto advance = [&]() -> bool {
      int i = d - 1;
      while (i >= 0 && comb[i] == m - d + i) --i;
      if (i < 0) return false;
      ++comb[i];
      for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    };
    if (m >= static_cast<std::size_t>(d)) {
      do {
        QMat sub;
        for (int i = 0; i < d; ++i) sub.push_back(homog[comb[i]]);
        std::vector<IVec> ker = linalg::nullspace_primitive(sub, d + 1);
        if (ker.size() != 1) continue;  // not a spanning set
        IVec nu(ker[0].begin(), ker[0].begin() + d);
        Rat beta = -Rat(ker[0][d]);
        if (is_zero(nu)) continue;  // hyperplane at infinity
        // orient: all generators on the >= side
        int pos = 0, neg = 0;
        for (std::size_t i = 0; i < m; ++i) {
          Rat val = 0;
          for (int j = 0; j < d; ++j) val += Rat(nu[j]) * homog[i][j];
          val -= beta * homog[i][d];
          if (val > 0) ++pos;
          if (val < 0) ++neg;
        }
        if (pos && neg) continue;
        if (neg) {
          for (Int& x : nu) x = -x;
          beta = -beta;
        }
        found.insert(detail::CoordFacet{primitive(std::move(nu)), beta});
      } while (advance());
    }
    // re-normalize offsets after making normals primitive
    std::set<detail::CoordFacet> fixed;
    for (const auto& f : found) {
      // recompute the offset against a tight generator
      Rat best;
      bool first = true;
      for (std::size_t i = 0; i < np; ++i) {
        Rat val = 0;
        for (int j = 0; j < d; ++j) val += Rat(f.normal[j]) * homog[i][j];
        if (first || val < best) best = val, first = false;
      }
      fixed.insert(detail::CoordFacet{f.normal, best});
    }
    found = std::move(fixed);
  }

  std::vector<detail::CoordFacet> cfacets(found.begin(), found.end());

  // vertices: points whose tight facet normals span the coordinate space
  std::vector<int> vertex_of(np, 0);
  std::vector<std::vector<int>> tight_at(np);
  for (std::size_t i = 0; i < np; ++i) {
    QMat normals;
    for (std::size_t j = 0; j < cfacets.size(); ++j) {
      Rat val = 0;
      for (int k = 0; k < d; ++k) val += Rat(cfacets[j].normal[k]) * homog[i][k];
      if (val == cfacets[j].offset) {
        tight_at[i].push_back(static_cast<int>(j));
        normals.push_back(to_qvec(cfacets[j].normal));
      }
    }
    vertex_of[i] = (d == 0) || (linalg::rank(std::move(normals)) == d);
  }
  std::vector<QVec> final_vertices;
  std::vector<std::size_t> vert_src;
  for (std::size_t i = 0; i < np; ++i)
    if (vertex_of[i]) {
      final_vertices.push_back(ctx.pts[i]);
      vert_src.push_back(i);
    }
  if (final_vertices.empty())
    throw domain_error("convex_hull: polyhedron has no vertices (recession cone not pointed)");

  // extreme rays of the recession cone
  std::vector<IVec> final_rays;
  std::vector<std::size_t> ray_src;
  for (std::size_t i = 0; i < ctx.rys.size(); ++i) {
    QVec rc = ctx.coords(to_qvec(ctx.rys[i]), false);
    QMat normals;
    for (const auto& f : cfacets) {
      Rat val = 0;
      for (int k = 0; k < d; ++k) val += Rat(f.normal[k]) * rc[k];
      if (val == 0) normals.push_back(to_qvec(f.normal));
    }
    if (linalg::rank(std::move(normals)) == d - 1) {
      final_rays.push_back(ctx.rys[i]);
      ray_src.push_back(i + np);
    }
  }

  P.vertices = final_vertices;  // already lex sorted (subset of sorted pts)
  P.rays = final_rays;

  // lift facets to ambient space
  for (const auto& f : cfacets) {
    QVec ambient(n, Rat(0));
    if (d > 0) {
      // solve Gram system: u = B^T w with B B^T w = nu
      QMat gram(d, QVec(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) gram[i][j] = dot(ctx.basis[i], ctx.basis[j]);
      auto w = linalg::solve(gram, to_qvec(f.normal));
      if (!w) throw invariant_error("convex_hull: singular Gram matrix");
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) ambient[j] += (*w)[i] * ctx.basis[i][j];
    }
    IVec u = detail::primitive_integer_direction(ambient);
    // offset from any tight vertex
    Rat b;
    bool first = true;
    for (const QVec& v : P.vertices) {
      Rat val = dot(u, v);
      if (first || val < b) b = val, first = false;
    }
    P.facets.push_back(Halfspace{std::move(u), std::move(b)});
  }
  std::sort(P.facets.begin(), P.facets.end(), [](const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });

  // face lattice: closure of facet generator sets under intersection
  using GenSet = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<GenSet> fgens;
  for (const Halfspace& h : P.facets) {
    GenSet g;
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
      if (dot(h.normal, P.vertices[i]) == h.offset) g.first.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < P.rays.size(); ++i)
      if (dot(h.normal, P.rays[i]) == 0) g.second.push_back(static_cast<int>(i));
    fgens.push_back(std::move(g));
  }
  std::set<GenSet> gensets;
  GenSet all;
  for (std::size_t i = 0; i < P.vertices.size(); ++i) all.first.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < P.rays.size(); ++i) all.second.push_back(static_cast<int>(i));
  gensets.insert(all);
  std::vector<GenSet> worklist;
  for (const GenSet& g : fgens)
    if (!g.first.empty() && gensets.insert(g).second) worklist.push_back(g);
  std::vector<GenSet> closed(gensets.begin(), gensets.end());
  while (!worklist.empty()) {
    GenSet g = worklist.back();
    worklist.pop_back();
    std::vector<GenSet> snapshot(gensets.begin(), gensets.end());
    for (const GenSet& h : snapshot) {
      GenSet meet;
      std::set_intersection(g.first.begin(), g.first.end(), h.first.begin(), h.first.end(),
                            std::back_inserter(meet.first));
      if (meet.first.empty()) continue;
      std::set_intersection(g.second.begin(), g.second.end(), h.second.begin(), h.second.end(),
                            std::back_inserter(meet.second));
      if (gensets.insert(meet).second) worklist.push_back(meet);
    }
  }

  // materialize faces
  QVec origin(n, Rat(0));
  std::vector<Face> faces;
  for (const GenSet& g : gensets) {
    Face f;
    f.vertex_ids = g.first;
    f.ray_ids = g.second;
    std::vector<IVec> dirset;
    const QVec& base = P.vertices[f.vertex_ids[0]];
    std::vector<QVec> qdirs;
    for (std::size_t i = 1; i < f.vertex_ids.size(); ++i) {
      QVec delta(n);
      for (int j = 0; j < n; ++j) delta[j] = P.vertices[f.vertex_ids[i]][j] - base[j];
      qdirs.push_back(std::move(delta));
    }
    for (int r : f.ray_ids) qdirs.push_back(to_qvec(P.rays[r]));
    f.dim = static_cast<int>(linalg::independent_subset(qdirs).size());
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertex_ids != b.vertex_ids) return a.vertex_ids < b.vertex_ids;
    return a.ray_ids < b.ray_ids;
  });
  for (std::size_t i = 0; i < faces.size(); ++i) {
    faces[i].id = static_cast<int>(i);
    for (std::size_t j = 0; j < P.facets.size(); ++j) {
      if (std::includes(fgens[j].first.begin(), fgens[j].first.end(), faces[i].vertex_ids.begin(),
                        faces[i].vertex_ids.end()) &&
          std::includes(fgens[j].second.begin(), fgens[j].second.end(), faces[i].ray_ids.begin(),
                        faces[i].ray_ids.end()))
        faces[i].facet_ids.push_back(static_cast<int>(j));
    }
    if (faces[i].vertex_ids == all.first && faces[i].ray_ids == all.second)
      P.top_id = static_cast<int>(i);
  }
  P.faces = std::move(faces);
  P.build_face_index();
  for (Face& f : P.faces) f.contains_origin = P.face_contains(f, origin);
  if (P.top_id < 0) throw invariant_error("convex_hull: improper face missing");
  return P;
}

inline Polytope convex_hull_int(const std::vector<IVec>& points, std::vector<IVec> rays = {},
                                int dim_cap = 8) {
  std::vector<QVec> q;
  q.reserve(points.size());
  for (const IVec& p : points) q.push_back(to_qvec(p));
  return convex_hull(std::move(q), std::move(rays), dim_cap);
}

}  // namespace nmono

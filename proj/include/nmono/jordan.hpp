#pragma once

#include <nmono/zeta.hpp>

namespace nmono {

// Cone_infinity(f) = R_+ Gamma_infinity(f), as primitive extreme rays plus the
// facet inequalities used for strict interiority tests.
struct ConeAtInfinity {
  Cone cone;
  std::vector<Halfspace> facets;  // <normal, x> >= 0 cuts of the cone

  bool strictly_interior(const QVec& x) const {
    for (const Halfspace& h : facets)
      if (dot(h.normal, x) <= h.offset) return false;
    return true;
  }
};

inline ConeAtInfinity cone_infinity(const NewtonAtInfinity& N) {
  N.require_full_dim();
  std::vector<IVec> gens;
  for (const QVec& v : N.P.vertices) {
    IVec w = to_ivec(v);
    if (!is_zero(w)) gens.push_back(primitive(std::move(w)));
  }
  Polytope C = convex_hull(std::vector<QVec>{QVec(N.n(), Rat(0))}, gens);
  if (C.dim != N.n()) throw invariant_error("cone_infinity: cone is not full-dimensional");
  ConeAtInfinity out;
  out.cone.generators = C.rays;
  out.cone.dim = C.dim;
  out.facets = C.facets;
  for (const Halfspace& h : out.facets)
    if (h.offset != 0) throw invariant_error("cone_infinity: facet not through the origin");
  return out;
}

struct InteriorVertex {
  int face_id;
  IVec q;
  long long d;  // lattice distance = gcd of the coordinates
};

struct InteriorEdge {
  int face_id;
  std::vector<IVec> ends;
  long long e;                 // lattice distance of the edge
  LatticeDistance dist;        // functional for heights
  std::vector<IVec> interior;  // Z^n in rel.int(Delta_i)
};

// 0-dimensional faces at infinity lying strictly inside Cone_infinity(f).
inline std::vector<InteriorVertex> interior_vertices(const NewtonAtInfinity& N) {
  ConeAtInfinity C = cone_infinity(N);
  std::vector<InteriorVertex> out;
  for (int id : faces_at_infinity(N)) {
    const Face& f = N.P.faces[id];
    if (f.dim != 0) continue;
    const QVec& q = N.P.vertices[f.vertex_ids[0]];
    if (!C.strictly_interior(q)) continue;
    IVec qi = to_ivec(q);
    out.push_back(InteriorVertex{id, qi, to_i64(gcd(qi))});
  }
  return out;
}

// 1-dimensional faces at infinity whose relative interior lies strictly inside
// the cone; by convexity the midpoint decides.
inline std::vector<InteriorEdge> interior_edges(const NewtonAtInfinity& N) {
  ConeAtInfinity C = cone_infinity(N);
  std::vector<InteriorEdge> out;
  for (int id : faces_at_infinity(N)) {
    const Face& f = N.P.faces[id];
    if (f.dim != 1) continue;
    QVec mid(N.n());
    for (int j = 0; j < N.n(); ++j)
      mid[j] = (N.P.vertices[f.vertex_ids[0]][j] + N.P.vertices[f.vertex_ids[1]][j]) / 2;
    if (!C.strictly_interior(mid)) continue;
    InteriorEdge e;
    e.face_id = id;
    e.ends = N.P.face_vertices_int(f);
    e.dist = *N.cls[id].dist;
    e.e = to_i64(e.dist.d);
    std::vector<IVec> delta_pts = e.ends;
    delta_pts.push_back(IVec(N.n(), Int(0)));
    e.interior = lattice_points(convex_hull_int(delta_pts), true);
    out.push_back(std::move(e));
  }
  return out;
}

// n(lambda)_i: lattice points of rel.int(Delta_i) at heights k and e_i - k,
// where k is minimal positive with lambda = zeta_{e_i}^k. The two counts are
// added even when k = e_i - k (the coincident case is flagged upstream).
inline long long n_lambda(const InteriorEdge& edge, const RootOfUnity& lambda) {
  if (lambda.is_one()) throw domain_error("n_lambda: lambda = 1 is excluded");
  if (edge.e % lambda.d != 0) throw domain_error("n_lambda: lambda^e != 1");
  const long long k = lambda.k * (edge.e / lambda.d);
  long long count = 0;
  for (const IVec& v : edge.interior) {
    Int h = height(v, edge.dist);
    if (h == k) ++count;
    if (h == edge.e - k) ++count;
  }
  return count;
}

struct JordanRow {
  RootOfUnity lambda;
  long long blocks_size_n = 0;
  long long blocks_size_n_minus_1 = 0;
  bool coincident = false;  // some contributing edge has k = e_i - k
};

struct JordanReport {
  int n = 0;
  std::vector<InteriorVertex> vertices;
  std::vector<InteriorEdge> edges;
  std::vector<JordanRow> rows;  // sorted by (order, numerator); excludes A_f
  EigenvalueSet excluded;       // = A_f
};

// Jordan blocks of the two largest sizes in Phi_{n-1}^infinity for every
// candidate eigenvalue outside A_f: size n counts interior vertices with
// lambda^{d_i} = 1, size n-1 sums n(lambda)_i over interior edges with
// lambda^{e_i} = 1.
inline JordanReport jordan_table(const NewtonAtInfinity& N) {
  N.require_full_dim();
  JordanReport rep;
  rep.n = N.n();
  rep.vertices = interior_vertices(N);
  rep.edges = interior_edges(N);
  rep.excluded = atypical_eigenvalues(N);

  std::set<long long> divisors;
  for (const InteriorVertex& v : rep.vertices)
    for (long long d = 2; d <= v.d; ++d)
      if (v.d % d == 0) divisors.insert(d);
  for (const InteriorEdge& e : rep.edges)
    for (long long d = 2; d <= e.e; ++d)
      if (e.e % d == 0) divisors.insert(d);

  for (long long d : divisors) {
    for (long long k = 1; k < d; ++k) {
      if (std::gcd(k, d) != 1) continue;
      RootOfUnity lambda{k, d};
      if (rep.excluded.contains(lambda)) continue;
      JordanRow row;
      row.lambda = lambda;
      for (const InteriorVertex& v : rep.vertices)
        if (v.d % d == 0) ++row.blocks_size_n;
      for (const InteriorEdge& e : rep.edges) {
        if (e.e % d != 0) continue;
        row.blocks_size_n_minus_1 += n_lambda(e, lambda);
        if (k * (e.e / d) * 2 == e.e) row.coincident = true;
      }
      rep.rows.push_back(row);
    }
  }
  return rep;
}

}  // namespace nmono

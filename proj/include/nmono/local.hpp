#pragma once

#include <nmono/nondeg.hpp>

namespace nmono {

// The declared geometry at a bifurcation point: local defining polynomials at
// the interior singular points p_1..p_l and at the boundary points
// p_{l+1}..p_{l+r}, where the divisor at infinity is D = { y_n = 0 } in the
// boundary charts. The scene is input data; finding the points is out of scope.
struct LocalScene {
  int n = 0;
  std::vector<Polynomial> interior;
  std::vector<Polynomial> boundary;
};

// Gamma_+(f) = conv(supp f) + R^n_+, the local Newton polyhedron at y = 0.
inline Polytope gamma_plus(const Polynomial& f) {
  if (f.is_zero()) throw domain_error("gamma_plus: zero polynomial");
  if (f.laurent) throw domain_error("gamma_plus: Laurent input not allowed here");
  if (f.has_constant_term())
    throw domain_error("gamma_plus: constant term present (the origin would not lie on the "
                       "hypersurface)");
  std::vector<IVec> rays;
  for (int i = 0; i < f.ambient_dim; ++i) {
    IVec e(f.ambient_dim, Int(0));
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  return convex_hull_int(f.support_int(), std::move(rays));
}

// Gamma_+^o: the slice by { v_n = 0 }. Everything lives in R^n_+, so the slice
// is the supporting face of e_n when the minimum of v_n is 0, and empty when
// every monomial involves y_n.
inline std::optional<Polytope> gamma_plus_circ(const Polytope& gp) {
  const int n = gp.ambient_dim;
  IVec en(n, Int(0));
  en[n - 1] = 1;
  Rat mn = dot(en, gp.vertices[0]);
  for (const QVec& v : gp.vertices) mn = std::min(mn, dot(en, v));
  if (mn > 0) return std::nullopt;
  const Face& slice = gp.supporting_face(en);
  std::vector<QVec> pts;
  for (int vid : slice.vertex_ids) pts.push_back(gp.vertices[vid]);
  std::vector<IVec> rays;
  for (int rid : slice.ray_ids) rays.push_back(gp.rays[rid]);
  return convex_hull(std::move(pts), std::move(rays));
}

inline std::vector<int> compact_faces(const Polytope& P) {
  std::vector<int> out;
  for (const Face& f : P.faces)
    if (f.bounded()) out.push_back(f.id);
  return out;
}

// Alternative compactness criterion: a face of conv(S) + R^n_+ is compact iff
// its normal cone meets the strictly positive orthant, iff the sum of the
// incident facet normals is strictly positive (all normals are >= 0 here).
inline std::vector<int> compact_faces_by_positive_support(const Polytope& P) {
  std::vector<int> out;
  for (const Face& f : P.faces) {
    IVec sum(P.ambient_dim, Int(0));
    for (int j : f.facet_ids)
      for (int i = 0; i < P.ambient_dim; ++i) {
        if (P.facets[j].normal[i] < 0)
          throw domain_error("compact_faces_by_positive_support: a facet normal has a negative "
                             "entry; not a Gamma_+ polyhedron");
        sum[i] += P.facets[j].normal[i];
      }
    bool positive = true;
    for (const Int& x : sum)
      if (x <= 0) positive = false;
    if (positive) out.push_back(f.id);
  }
  return out;
}

// Gamma_+ meets the positive part of every axis; with nonnegative supports
// this reduces to having a support point on each axis.
inline bool locally_convenient(const Polynomial& f) {
  for (int i = 0; i < f.ambient_dim; ++i) {
    bool hit = false;
    for (const auto& [e, c] : f.terms) {
      bool axis = e[i] > 0;
      for (int j = 0; j < f.ambient_dim && axis; ++j)
        if (j != i && e[j] != 0) axis = false;
      if (axis) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

// A^o_{f,b}: 1 together with every lambda with lambda^{d_gamma} = 1 for some
// compact face gamma of a boundary slice Gamma_+^o(f_i).
inline EigenvalueSet atypical_eigenvalues_local(const LocalScene& scene) {
  EigenvalueSet A;
  for (const Polynomial& f : scene.boundary) {
    if (f.ambient_dim != scene.n)
      throw domain_error("atypical_eigenvalues_local: dimension mismatch in scene");
    Polytope gp = gamma_plus(f);
    auto slice = gamma_plus_circ(gp);
    if (!slice) continue;
    for (int id : compact_faces(*slice)) {
      const Face& g = slice->faces[id];
      if (g.contains_origin)
        throw invariant_error("atypical_eigenvalues_local: slice face through the origin");
      A.orders.insert(to_i64(lattice_distance(*slice, g).d));
    }
  }
  return A;
}

struct LocalPolyDiag {
  bool is_boundary = false;
  std::string text;
  bool convenient = false;
  Verdict overall = Verdict::NonDegenerateCertified;
  std::vector<FaceCheck> faces;           // nondegeneracy checks on compact faces
  std::vector<long long> slice_orders;    // boundary only: d_gamma per compact slice face
  bool slice_empty = false;               // boundary only
};

struct LocalReport {
  int n = 0;
  EigenvalueSet A_circ;
  std::vector<LocalPolyDiag> polys;  // interior first, then boundary
  std::vector<std::string> warnings;
};

// Hypothesis diagnostics per local polynomial: convenience of Gamma_+ and
// non-degeneracy on its compact faces. Advisory only; A^o is computed either way.
inline LocalReport check_local_hypotheses(const LocalScene& scene,
                                          const NondegOptions& opt = {}) {
  LocalReport rep;
  rep.n = scene.n;
  rep.A_circ = atypical_eigenvalues_local(scene);
  auto diagnose = [&](const Polynomial& f, bool is_boundary) {
    LocalPolyDiag d;
    d.is_boundary = is_boundary;
    d.text = to_string(f);
    d.convenient = locally_convenient(f);
    Polytope gp = gamma_plus(f);
    for (int id : compact_faces(gp)) {
      const Face& face = gp.faces[id];
      if (face.contains_origin)
        throw invariant_error("check_local_hypotheses: compact face through the origin");
      d.faces.push_back(check_face(f, gp, face, opt));
      d.overall = worst(d.overall, d.faces.back().verdict);
    }
    if (is_boundary) {
      auto slice = gamma_plus_circ(gp);
      if (!slice) {
        d.slice_empty = true;
      } else {
        for (int id : compact_faces(*slice))
          d.slice_orders.push_back(to_i64(lattice_distance(*slice, slice->faces[id]).d));
        std::sort(d.slice_orders.begin(), d.slice_orders.end());
      }
    }
    if (!d.convenient)
      rep.warnings.push_back("local polynomial '" + d.text + "' is not convenient");
    if (d.overall == Verdict::DegenerateCertified)
      rep.warnings.push_back("local polynomial '" + d.text + "' is degenerate at y = 0");
    rep.polys.push_back(std::move(d));
  };
  for (const Polynomial& f : scene.interior) diagnose(f, false);
  for (const Polynomial& f : scene.boundary) diagnose(f, true);
  rep.warnings.push_back(
      "A_{f,b} is contained in the reported A^o_{f,b}; computing A_{f,b} itself needs "
      "Varchenko's formula and is not implemented");
  return rep;
}

}  // namespace nmono

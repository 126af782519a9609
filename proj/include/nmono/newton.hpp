#pragma once

#include <nmono/lattice.hpp>
#include <nmono/poly.hpp>

#include <optional>
#include <set>

namespace nmono {

// { 1 } union the d-th roots of unity over the recorded orders.
struct EigenvalueSet {
  std::set<long long> orders;  // D; membership of k/d <=> d divides some element
  bool includes_one = true;

  bool contains(const RootOfUnity& l) const {
    if (l.is_one()) return includes_one;
    for (long long o : orders)
      if (o % l.d == 0) return true;
    return false;
  }
  bool only_one() const {
    for (long long o : orders)
      if (o > 1) return false;
    return true;
  }
  // every member, as a sorted list of reduced fractions
  std::vector<RootOfUnity> explicit_list() const {
    std::set<RootOfUnity> s;
    if (includes_one) s.insert(RootOfUnity{0, 1});
    for (long long o : orders)
      for (long long k = 0; k < o; ++k) s.insert(RootOfUnity::reduce(k, o));
    return {s.begin(), s.end()};
  }
};

struct FaceClass {
  bool at_infinity = false;
  bool atypical = false;    // only faces containing the origin can be atypical
  bool admissible = false;  // only meaningful for faces at infinity
  int s_gamma = -1;         // dimension of the minimal coordinate subspace
  int m_gamma = -1;         // s_gamma - dim gamma - 1
  std::optional<LatticeDistance> dist;  // d_gamma and its functional
  std::optional<Int> vol;               // normalized volume (bounded faces at infinity)
};

// Gamma_infinity(f) with its classified faces. Classification data is filled
// only when the polyhedron is full-dimensional; the classified accessors below
// refuse otherwise. Immutable after construction.
struct NewtonAtInfinity {
  Polynomial poly;
  Polytope P;
  bool torus_mode = false;  // Laurent rule: atypical <=> proper face containing 0
  bool full_dim = false;
  bool convenient = false;
  std::vector<FaceClass> cls;  // by face id
  std::vector<Cone> fan;       // by face id

  int n() const { return P.ambient_dim; }
  void require_full_dim() const {
    if (!full_dim)
      throw domain_error("operation requires dim Gamma_infinity(f) = n; this polyhedron is "
                         "lower-dimensional");
  }
  const FaceClass& face_class(int id) const {
    require_full_dim();
    return cls[id];
  }
};

// Gamma_infinity intersects the positive part of axis i; exact 1-d feasibility
// of { t > 0 : t*e_axis satisfies the H-representation }.
inline bool meets_positive_axis(const Polytope& P, int axis) {
  Rat lo = 0;  // non-strict lower bound accumulated from constraints; t > 0 on top
  bool has_hi = false, infeasible = false;
  Rat hi = 0;
  auto tighten = [&](const Rat& a, const Rat& b, bool equality) {
    // constraint a * t >= b (and also <= b when equality)
    for (int pass = 0; pass < (equality ? 2 : 1); ++pass) {
      Rat aa = pass ? Rat(-a) : a, bb = pass ? Rat(-b) : b;
      if (aa == 0) {
        if (bb > 0) infeasible = true;
        continue;
      }
      Rat bound = bb / aa;
      if (aa > 0) {
        lo = std::max(lo, bound);
      } else if (!has_hi || bound < hi) {
        has_hi = true;
        hi = bound;
      }
    }
  };
  for (const Hyperplane& e : P.equations) tighten(Rat(e.normal[axis]), e.offset, true);
  for (const Halfspace& h : P.facets) tighten(Rat(h.normal[axis]), h.offset, false);
  if (infeasible) return false;
  if (!has_hi) return true;
  if (hi <= 0) return false;
  if (lo <= 0) return true;  // the interval (0, hi] is nonempty
  return lo <= hi;
}

inline bool is_convenient(const Polytope& P) {
  for (int i = 0; i < P.ambient_dim; ++i)
    if (!meets_positive_axis(P, i)) return false;
  return true;
}

namespace detail {

inline int s_gamma_of(const Polytope& P, const Face& f) {
  std::set<int> coords;
  for (int vid : f.vertex_ids) {
    const QVec& v = P.vertices[vid];
    for (int j = 0; j < P.ambient_dim; ++j)
      if (v[j] != 0) coords.insert(j);
  }
  for (int rid : f.ray_ids)
    for (int j = 0; j < P.ambient_dim; ++j)
      if (P.rays[rid][j] != 0) coords.insert(j);
  return static_cast<int>(coords.size());
}

inline bool cone_in_positive_orthant(const Cone& c) {
  for (const IVec& g : c.generators)
    for (const Int& x : g)
      if (x < 0) return false;
  return true;
}

inline void classify(NewtonAtInfinity& N) {
  const Polytope& P = N.P;
  N.fan.resize(P.faces.size());
  N.cls.resize(P.faces.size());
  for (const Face& f : P.faces) N.fan[f.id] = P.normal_cone(f);
  for (const Face& f : P.faces) {
    FaceClass& c = N.cls[f.id];
    c.at_infinity = !f.contains_origin;
    if (f.contains_origin) {
      c.atypical = N.torus_mode ? (f.id != P.top_id)
                                : !cone_in_positive_orthant(N.fan[f.id]);
    }
  }
  for (const Face& f : P.faces) {
    FaceClass& c = N.cls[f.id];
    if (!c.at_infinity) continue;
    c.admissible = true;
    for (const Face& g : P.faces)
      if (N.cls[g.id].atypical && P.face_subset(f, g)) {
        c.admissible = false;
        break;
      }
    c.s_gamma = s_gamma_of(P, f);
    c.m_gamma = c.s_gamma - f.dim - 1;
    if (c.m_gamma < 0)
      throw invariant_error("classify: m_gamma negative on a face at infinity");
    c.dist = lattice_distance(P, f);
    c.vol = normalized_volume(P, f);
  }
}

}  // namespace detail

// Build Gamma_infinity(f) = conv({0} union NP(f)) and classify its faces.
inline NewtonAtInfinity gamma_infinity(const Polynomial& f) {
  if (f.is_zero()) throw domain_error("gamma_infinity: zero polynomial");
  if (f.laurent)
    throw domain_error("gamma_infinity: Laurent input; use gamma_infinity_torus");
  NewtonAtInfinity N;
  N.poly = f;
  std::vector<IVec> pts = f.support_int();
  pts.push_back(IVec(f.ambient_dim, Int(0)));
  N.P = convex_hull_int(pts);
  N.full_dim = (N.P.dim == N.P.ambient_dim);
  N.convenient = is_convenient(N.P);
  if (N.full_dim) detail::classify(N);
  return N;
}

// Laurent variant: same polyhedron, torus classification rule (every proper
// face containing the origin is atypical).
inline NewtonAtInfinity gamma_infinity_torus(const Polynomial& f) {
  if (f.is_zero()) throw domain_error("gamma_infinity_torus: zero polynomial");
  NewtonAtInfinity N;
  N.poly = f;
  N.torus_mode = true;
  std::vector<IVec> pts = f.support_int();
  pts.push_back(IVec(f.ambient_dim, Int(0)));
  N.P = convex_hull_int(pts);
  N.full_dim = (N.P.dim == N.P.ambient_dim);
  N.convenient = is_convenient(N.P);
  if (N.full_dim) detail::classify(N);
  return N;
}

inline std::vector<int> atypical_faces(const NewtonAtInfinity& N) {
  N.require_full_dim();
  std::vector<int> out;
  for (const Face& f : N.P.faces)
    if (N.cls[f.id].atypical) out.push_back(f.id);
  return out;
}

inline std::vector<int> admissible_faces(const NewtonAtInfinity& N) {
  N.require_full_dim();
  std::vector<int> out;
  for (const Face& f : N.P.faces)
    if (N.cls[f.id].at_infinity && N.cls[f.id].admissible) out.push_back(f.id);
  return out;
}

inline std::vector<int> faces_at_infinity(const NewtonAtInfinity& N) {
  N.require_full_dim();
  std::vector<int> out;
  for (const Face& f : N.P.faces)
    if (N.cls[f.id].at_infinity) out.push_back(f.id);
  return out;
}

inline std::pair<int, int> s_and_m(const NewtonAtInfinity& N, int face_id) {
  const FaceClass& c = N.face_class(face_id);
  if (!c.at_infinity) throw domain_error("s_and_m: face contains the origin");
  return {c.s_gamma, c.m_gamma};
}

inline EigenvalueSet atypical_eigenvalues(const NewtonAtInfinity& N) {
  N.require_full_dim();
  EigenvalueSet A;
  for (const Face& f : N.P.faces) {
    const FaceClass& c = N.cls[f.id];
    if (c.at_infinity && !c.admissible) A.orders.insert(to_i64(c.dist->d));
  }
  return A;
}

// Cross-check route for atypicality, straight from the definition: a face
// containing 0 is atypical iff some facet containing it has an inner conormal
// outside the positive orthant. The facet normal is recomputed from the
// facet's vertex set, independently of the stored H-representation.
inline bool atypical_by_facet_conormals(const NewtonAtInfinity& N, int face_id) {
  N.require_full_dim();
  const Polytope& P = N.P;
  const Face& f = P.faces[face_id];
  if (!f.contains_origin) return false;
  for (const Face& g : P.faces) {
    if (g.dim != P.dim - 1 || !P.face_subset(f, g)) continue;
    // hyperplane through g's vertices
    QMat diffs;
    const QVec& base = P.vertices[g.vertex_ids[0]];
    for (std::size_t i = 1; i < g.vertex_ids.size(); ++i) {
      QVec d(P.ambient_dim);
      for (int j = 0; j < P.ambient_dim; ++j)
        d[j] = P.vertices[g.vertex_ids[i]][j] - base[j];
      diffs.push_back(std::move(d));
    }
    std::vector<IVec> ker = linalg::nullspace_primitive(diffs, P.ambient_dim);
    if (ker.size() != 1) throw invariant_error("facet hyperplane is not unique");
    IVec u = ker[0];
    // orient inward: some vertex off the facet must give a positive value
    Rat base_val = dot(u, base);
    bool oriented = false;
    for (const QVec& v : P.vertices) {
      Rat val = dot(u, v) - base_val;
      if (val == 0) continue;
      if (val < 0)
        for (Int& x : u) x = -x;
      oriented = true;
      break;
    }
    if (!oriented) throw invariant_error("degenerate facet");
    for (const Int& x : u)
      if (x < 0) return true;
  }
  return false;
}

struct Add1Check {
  int face_id = -1;
  bool ok = false;
  std::string detail;
};
struct Add1Report {
  bool ok = true;
  std::vector<Add1Check> checks;
};

// Diagnostic for the coordinate-facet structure of non-atypical faces through
// the origin: dim gamma = |S| and the facets containing gamma are exactly the
// n - |S| coordinate slices Gamma_infinity intersect {v_i = 0}, i outside S.
inline Add1Report verify_prop_add1(const NewtonAtInfinity& N) {
  N.require_full_dim();
  const Polytope& P = N.P;
  Add1Report rep;
  for (const Face& f : P.faces) {
    if (!f.contains_origin || N.cls[f.id].atypical) continue;
    Add1Check chk;
    chk.face_id = f.id;
    std::set<int> S;
    for (int vid : f.vertex_ids) {
      const QVec& v = P.vertices[vid];
      for (int j = 0; j < P.ambient_dim; ++j)
        if (v[j] != 0) S.insert(j);
    }
    if (f.dim != static_cast<int>(S.size())) {
      chk.detail = "dim gamma != |S|";
      rep.checks.push_back(chk);
      rep.ok = false;
      continue;
    }
    std::set<int> expected;
    bool good = true;
    for (int i = 0; i < P.ambient_dim && good; ++i) {
      if (S.count(i)) continue;
      IVec ei(P.ambient_dim, Int(0));
      ei[i] = 1;
      const Face& slice = P.supporting_face(ei);
      if (slice.dim != P.dim - 1) {
        chk.detail = "coordinate slice v_" + std::to_string(i + 1) + " = 0 is not a facet";
        good = false;
        break;
      }
      if (!P.face_subset(f, slice)) {
        chk.detail = "coordinate facet v_" + std::to_string(i + 1) + " = 0 does not contain gamma";
        good = false;
        break;
      }
      expected.insert(slice.id);
    }
    if (good) {
      std::set<int> actual;
      for (const Face& g : P.faces)
        if (g.dim == P.dim - 1 && P.face_subset(f, g)) actual.insert(g.id);
      if (actual != expected) {
        chk.detail = "facets containing gamma are not exactly the coordinate slices";
        good = false;
      }
    }
    chk.ok = good;
    if (good) chk.detail = "ok";
    rep.checks.push_back(chk);
    rep.ok = rep.ok && good;
  }
  return rep;
}

}  // namespace nmono

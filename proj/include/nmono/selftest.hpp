#pragma once

#include <nmono/report.hpp>

#include <functional>
#include <iostream>

namespace nmono {

struct Fixture {
  std::string name;
  std::function<bool()> run;
};

namespace detail {

inline NewtonAtInfinity fixture_newton(std::vector<std::vector<long long>> pts) {
  Polynomial f;
  f.ambient_dim = static_cast<int>(pts[0].size());
  for (const auto& p : pts) f.terms[ExponentVector(p.begin(), p.end())] = 1;
  return gamma_infinity(f);
}

inline int fixture_face(const Polytope& P, std::vector<std::vector<long long>> verts) {
  std::vector<int> vids;
  for (const auto& w : verts) {
    QVec q(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) q[i] = Rat(Int(w[i]));
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
      if (P.vertices[i] == q) vids.push_back(static_cast<int>(i));
  }
  std::sort(vids.begin(), vids.end());
  for (const Face& f : P.faces)
    if (f.vertex_ids == vids && f.ray_ids.empty()) return f.id;
  return -1;
}

}  // namespace detail

// The built-in fixture suite behind `selftest`: the worked examples plus a few
// oracle-backed spot checks, small enough to run on every invocation.
inline std::vector<Fixture> selftest_fixtures() {
  using detail::fixture_face;
  using detail::fixture_newton;
  std::vector<Fixture> fx;

  fx.push_back({"atypical-faces-example-1", [] {
    NewtonAtInfinity N = fixture_newton({{2, 0, 0}, {2, 2, 0}, {2, 2, 3}});
    int seg = fixture_face(N.P, {{0, 0, 0}, {2, 2, 0}});
    int tri = fixture_face(N.P, {{0, 0, 0}, {2, 0, 0}, {2, 2, 0}});
    return seg >= 0 && tri >= 0 && N.cls[seg].atypical && !N.cls[tri].atypical;
  }});

  fx.push_back({"atypical-faces-example-2", [] {
    NewtonAtInfinity N = fixture_newton({{2, 0, 0}, {0, 2, 0}, {1, 1, 2}});
    int seg = fixture_face(N.P, {{0, 0, 0}, {2, 0, 0}});
    return seg >= 0 && N.cls[seg].atypical;
  }});

  fx.push_back({"atypical-eigenvalues-quadrilateral", [] {
    NewtonAtInfinity N = fixture_newton({{1, 3}, {3, 0}, {3, 2}});
    EigenvalueSet A = atypical_eigenvalues(N);
    int seg = fixture_face(N.P, {{0, 0}, {1, 3}});
    return A.only_one() && seg >= 0 && N.cls[seg].atypical && !N.convenient;
  }});

  fx.push_back({"non-admissible-zeta-contribution", [] {
    NewtonAtInfinity N = fixture_newton({{2, 0, 0}, {0, 2, 0}, {1, 1, 1}});
    int v = fixture_face(N.P, {{2, 0, 0}});
    if (v < 0 || N.cls[v].admissible || N.cls[v].m_gamma != 0) return false;
    bool in_zeta = false;
    for (const ZetaTerm& t : zeta_contributions(N))
      if (t.face_id == v && t.d == 2 && t.e == 1) in_zeta = true;
    for (const ZetaTerm& t : multiplicity_contributions(N))
      if (t.face_id == v) return false;
    return in_zeta;
  }});

  fx.push_back({"zeta-x2-y3", [] {
    FactoredZeta z = zeta_at_infinity(fixture_newton({{2, 0}, {0, 3}}));
    return z.factors == std::map<long long, long long>{{2, 1}, {3, 1}, {6, -1}};
  }});

  fx.push_back({"zeta-quadrilateral", [] {
    FactoredZeta z = zeta_at_infinity(fixture_newton({{1, 3}, {3, 0}, {3, 2}}));
    return z.factors == std::map<long long, long long>{{3, -1}, {7, -1}};
  }});

  fx.push_back({"multiplicities-x2-y3", [] {
    NewtonAtInfinity N = fixture_newton({{2, 0}, {0, 3}});
    return multiplicity(N, RootOfUnity{1, 6}) == 1 && multiplicity(N, RootOfUnity{5, 6}) == 1 &&
           multiplicity(N, RootOfUnity{1, 2}) == 0 && multiplicity(N, RootOfUnity{1, 3}) == 0;
  }});

  fx.push_back({"jordan-x2-y3", [] {
    JordanReport rep = jordan_table(fixture_newton({{2, 0}, {0, 3}}));
    int checked = 0;
    for (const JordanRow& r : rep.rows) {
      if (r.lambda.d == 6 && (r.blocks_size_n != 0 || r.blocks_size_n_minus_1 != 1)) return false;
      if (r.lambda.d != 6 && (r.blocks_size_n != 0 || r.blocks_size_n_minus_1 != 0)) return false;
      ++checked;
    }
    return checked == 5 && rep.vertices.empty() && rep.edges.size() == 1;
  }});

  fx.push_back({"jordan-interior-vertex", [] {
    JordanReport rep = jordan_table(fixture_newton({{5, 0}, {0, 5}, {3, 3}}));
    for (const JordanRow& r : rep.rows)
      if (r.lambda.d == 3 && r.blocks_size_n != 1) return false;
    return rep.vertices.size() == 1 && rep.vertices[0].d == 3;
  }});

  fx.push_back({"torus-zeta-1d", [] {
    Polynomial f;
    f.ambient_dim = 1;
    f.laurent = true;
    f.terms[ExponentVector{1}] = 1;
    f.terms[ExponentVector{-1}] = 1;
    return zeta_torus_at_infinity(f).factors == std::map<long long, long long>{{1, 2}};
  }});

  fx.push_back({"nondeg-squared-edge", [] {
    Polynomial f = parse_polynomial("x^2 + 2*x*y + y^2", 2, false);
    NewtonAtInfinity N = gamma_infinity(f);
    return check_all(f, N).overall == Verdict::DegenerateCertified;
  }});

  fx.push_back({"local-Ao-basic", [] {
    LocalScene scene;
    scene.n = 2;
    scene.boundary.push_back(parse_polynomial("x1^2 + x2", 2, false));
    EigenvalueSet A = atypical_eigenvalues_local(scene);
    return A.explicit_list() ==
           std::vector<RootOfUnity>{RootOfUnity{0, 1}, RootOfUnity{1, 2}};
  }});

  fx.push_back({"local-Ao-empty-slice", [] {
    LocalScene scene;
    scene.n = 2;
    scene.boundary.push_back(parse_polynomial("x*y", 2, false));
    return atypical_eigenvalues_local(scene).only_one();
  }});

  fx.push_back({"prop-add1-fixtures", [] {
    return verify_prop_add1(fixture_newton({{2, 0}, {0, 3}})).ok &&
           verify_prop_add1(fixture_newton({{2, 0, 0}, {2, 2, 0}, {2, 2, 3}})).ok;
  }});

  fx.push_back({"lattice-distance-gcd", [] {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long long> coord(-9, 9);
    for (int i = 0; i < 50; ++i) {
      int n = 1 + static_cast<int>(rng() % 4);
      IVec v(n);
      for (int j = 0; j < n; ++j) v[j] = coord(rng);
      if (is_zero(v)) continue;
      if (lattice_distance({v}).d != gcd(v)) return false;
    }
    return true;
  }});

  fx.push_back({"pick-volume", [] {
    Polytope tri = convex_hull_int({{Int(0), Int(0)}, {Int(2), Int(0)}, {Int(0), Int(3)}});
    Int I = Int(lattice_points(tri, true).size());
    Int B = Int(lattice_points(tri, false).size()) - I;
    return normalized_volume(tri, tri.top()) == 2 * I + B - 2;
  }});

  fx.push_back({"dual-fan-equivalence", [] {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long long> coord(0, 5);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 2 + static_cast<int>(rng() % 2);
      std::vector<std::vector<long long>> pts;
      for (int i = 0; i < 5; ++i) {
        std::vector<long long> p(n);
        bool zero = true;
        for (int j = 0; j < n; ++j) {
          p[j] = coord(rng);
          if (p[j]) zero = false;
        }
        if (!zero) pts.push_back(p);
      }
      std::vector<IVec> ivpts;
      for (auto& p : pts) ivpts.push_back(IVec(p.begin(), p.end()));
      if (pts.empty() || linalg::rank(ivpts) < n) continue;
      NewtonAtInfinity N = detail::fixture_newton(pts);
      for (const Face& f : N.P.faces)
        if (f.contains_origin &&
            N.cls[f.id].atypical != atypical_by_facet_conormals(N, f.id))
          return false;
    }
    return true;
  }});

  return fx;
}

struct SelftestResult {
  int passed = 0;
  int failed = 0;
  std::vector<std::pair<std::string, bool>> lines;
};

inline SelftestResult run_selftest(const std::string& filter = "") {
  SelftestResult res;
  for (const Fixture& fx : selftest_fixtures()) {
    if (!filter.empty() && fx.name.find(filter) == std::string::npos) continue;
    bool ok = false;
    try {
      ok = fx.run();
    } catch (const std::exception&) {
      ok = false;
    }
    res.lines.emplace_back(fx.name, ok);
    (ok ? res.passed : res.failed)++;
  }
  return res;
}

}  // namespace nmono

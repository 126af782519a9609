// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is checked exactly (integer equality, no
// tolerances); runtimes are printed for the timed ones.

#include <nmono/jordan.hpp>
#include <nmono/local.hpp>
#include <nmono/nondeg.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace nmono;

namespace {

Polynomial poly_from_support(const std::vector<IVec>& pts) {
  Polynomial f;
  f.ambient_dim = static_cast<int>(pts[0].size());
  for (const IVec& p : pts) {
    ExponentVector e(f.ambient_dim);
    for (int j = 0; j < f.ambient_dim; ++j) e[j] = to_i64(p[j]);
    f.terms[e] = 1;
  }
  return f;
}

NewtonAtInfinity newton_of(const std::vector<IVec>& pts) {
  return gamma_infinity(poly_from_support(pts));
}

std::vector<IVec> random_support(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> npts(3, 8);
  std::uniform_int_distribution<int> coord(0, 6);
  while (true) {
    std::vector<IVec> pts;
    int k = npts(rng);
    for (int i = 0; i < k; ++i) {
      IVec v(n);
      bool all_zero = true;
      for (int j = 0; j < n; ++j) {
        v[j] = coord(rng);
        if (v[j] != 0) all_zero = false;
      }
      if (!all_zero) pts.push_back(v);
    }
    if (pts.empty()) continue;
    if (linalg::rank(pts) == n) return pts;
  }
}

int find_face(const Polytope& P, const std::vector<IVec>& verts) {
  std::vector<int> vids;
  for (const IVec& w : verts)
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
      if (P.vertices[i] == to_qvec(w)) vids.push_back(static_cast<int>(i));
  std::sort(vids.begin(), vids.end());
  if (vids.size() != verts.size()) return -1;
  for (const Face& f : P.faces)
    if (f.vertex_ids == vids && f.ray_ids.empty()) return f.id;
  return -1;
}

IVec iv(std::initializer_list<long long> xs) { return IVec(xs.begin(), xs.end()); }

// the 200 shared random fixtures for criteria 5, 7, 8
std::vector<NewtonAtInfinity> shared_fixtures() {
  std::vector<NewtonAtInfinity> out;
  std::mt19937_64 rng(20240901);
  const int dims[] = {2, 3, 4};
  for (int i = 0; i < 200; ++i) out.push_back(newton_of(random_support(rng, dims[i % 3])));
  return out;
}

// criterion 7 oracle: barycentric enumeration and height bucketing, sharing
// nothing with lattice_points/height
long long n_lambda_oracle(const NewtonAtInfinity& N, const InteriorEdge& edge,
                          const RootOfUnity& lambda) {
  const int n = N.n();
  const IVec& a = edge.ends[0];
  const IVec& b = edge.ends[1];
  const long long e = edge.e;
  const long long k = lambda.k * (e / lambda.d);
  IVec lo(n, Int(0)), hi(n, Int(0));
  for (const IVec* p : {&a, &b})
    for (int j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], (*p)[j]);
      hi[j] = std::max(hi[j], (*p)[j]);
    }
  std::map<long long, long long> buckets;
  IVec cur = lo;
  while (true) {
    // x = alpha a + beta b with alpha, beta > 0, alpha + beta < 1 puts x in
    // rel.int(Delta); the height is then e * (1 - alpha - beta)
    QMat sys(n, QVec(2));
    QVec rhs(n);
    for (int j = 0; j < n; ++j) {
      sys[j][0] = Rat(a[j]);
      sys[j][1] = Rat(b[j]);
      rhs[j] = Rat(cur[j]);
    }
    auto sol = linalg::solve(sys, rhs);
    if (sol) {
      // solve() can return a non-witness when the system is underdetermined,
      // but {a, b} are linearly independent here so the solution is unique
      bool consistent = true;
      for (int j = 0; j < n; ++j)
        if ((*sol)[0] * Rat(a[j]) + (*sol)[1] * Rat(b[j]) != Rat(cur[j])) consistent = false;
      Rat al = (*sol)[0], be = (*sol)[1];
      if (consistent && al > 0 && be > 0 && al + be < 1) {
        Rat h = Rat(Int(e)) * (Rat(1) - al - be);
        if (is_integer(h)) buckets[to_i64(num(h))]++;
      }
    }
    int j = n - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  long long out = 0;
  if (buckets.count(k)) out += buckets.at(k);
  if (buckets.count(e - k)) out += buckets.at(e - k);
  return out;
}

struct Criterion {
  int id;
  std::string label;
  std::function<bool()> run;
};

}  // namespace

int main() {
  std::vector<NewtonAtInfinity> fixtures;  // built lazily inside criterion 5
  bool c4 = false, c7 = false, c8 = false;

  std::vector<Criterion> criteria;

  criteria.push_back({1, "paper-example atypical faces (two 3-d fixtures)", [&] {
    NewtonAtInfinity N1 = newton_of({iv({2, 0, 0}), iv({2, 2, 0}), iv({2, 2, 3})});
    int seg = find_face(N1.P, {iv({0, 0, 0}), iv({2, 2, 0})});
    int tri = find_face(N1.P, {iv({0, 0, 0}), iv({2, 0, 0}), iv({2, 2, 0})});
    if (seg < 0 || tri < 0) return false;
    if (!N1.cls[seg].atypical || N1.cls[tri].atypical) return false;
    NewtonAtInfinity N2 = newton_of({iv({2, 0, 0}), iv({0, 2, 0}), iv({1, 1, 2})});
    int seg2 = find_face(N2.P, {iv({0, 0, 0}), iv({2, 0, 0})});
    return seg2 >= 0 && N2.cls[seg2].atypical;
  }});

  criteria.push_back({2, "paper-example A_f = {1} for support {(1,3),(3,0),(3,2)}", [&] {
    EigenvalueSet A = atypical_eigenvalues(newton_of({iv({1, 3}), iv({3, 0}), iv({3, 2})}));
    return A.only_one() &&
           A.explicit_list() == std::vector<RootOfUnity>{RootOfUnity{0, 1}};
  }});

  criteria.push_back({3, "non-admissible face contributes to zeta but not to multiplicity", [&] {
    NewtonAtInfinity N = newton_of({iv({2, 0, 0}), iv({0, 2, 0}), iv({1, 1, 1})});
    int v = find_face(N.P, {iv({2, 0, 0})});
    if (v < 0) return false;
    const FaceClass& c = N.cls[v];
    if (c.admissible || c.m_gamma != 0 || c.s_gamma != 1) return false;
    bool zeta_has = false;
    for (const ZetaTerm& t : zeta_contributions(N))
      if (t.face_id == v && t.d == 2 && t.e == 1) zeta_has = true;
    for (const ZetaTerm& t : multiplicity_contributions(N))
      if (t.face_id == v) return false;
    return zeta_has;
  }});

  criteria.push_back({4, "convenient cross-check for f = x^2 + y^3 (zeta, mult, jordan)", [&] {
    NewtonAtInfinity N = newton_of({iv({2, 0}), iv({0, 3})});
    FactoredZeta z = zeta_at_infinity(N);
    if (z.factors != std::map<long long, long long>{{2, 1}, {3, 1}, {6, -1}}) return false;
    // det(1 - t Phi_1) = (1-t) / zeta = t^2 - t + 1, degree 2 = (2-1)(3-1):
    // its factor map must be exactly {1: 1} minus the zeta factors
    if (multiplicity(N, RootOfUnity{1, 6}) != 1) return false;
    if (multiplicity(N, RootOfUnity{5, 6}) != 1) return false;
    if (multiplicity(N, RootOfUnity{1, 2}) != 0) return false;
    if (multiplicity(N, RootOfUnity{1, 3}) != 0) return false;
    if (multiplicity(N, RootOfUnity{2, 3}) != 0) return false;
    JordanReport rep = jordan_table(N);
    if (!rep.vertices.empty()) return false;
    for (const JordanRow& r : rep.rows) {
      if (r.blocks_size_n != 0) return false;
      long long want = (r.lambda.d == 6) ? 1 : 0;
      if (r.blocks_size_n_minus_1 != want) return false;
    }
    c4 = true;
    return true;
  }});

  criteria.push_back({5, "dual-fan vs facet-conormal atypicality on 200 random fixtures", [&] {
    fixtures = shared_fixtures();
    for (const NewtonAtInfinity& N : fixtures) {
      if (!N.full_dim) return false;
      for (const Face& f : N.P.faces) {
        if (!f.contains_origin) continue;
        if (N.cls[f.id].atypical != atypical_by_facet_conormals(N, f.id)) return false;
      }
    }
    return true;
  }});

  criteria.push_back({6, "lattice oracles (gcd x1000, simplex |det|, Pick x200)", [&] {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> coord(-9, 9);
    for (int i = 0; i < 1000; ++i) {
      int n = 1 + static_cast<int>(rng() % 5);
      IVec v(n);
      for (int j = 0; j < n; ++j) v[j] = coord(rng);
      if (is_zero(v)) continue;
      if (lattice_distance({v}).d != gcd(v)) return false;
    }
    int done = 0;
    while (done < 200) {
      int k = 2 + static_cast<int>(rng() % 3);
      std::vector<IVec> pts;
      for (int i = 0; i <= k; ++i) {
        IVec v(k);
        for (int j = 0; j < k; ++j) v[j] = coord(rng);
        pts.push_back(v);
      }
      IMat edges;
      for (int i = 1; i <= k; ++i) {
        IVec e(k);
        for (int j = 0; j < k; ++j) e[j] = pts[i][j] - pts[0][j];
        edges.push_back(e);
      }
      Int d = linalg::det(edges);
      if (d == 0) continue;
      if (normalized_volume(pts) != (d < 0 ? -d : d)) return false;
      ++done;
    }
    std::uniform_int_distribution<int> pcoord(0, 9);
    std::uniform_int_distribution<int> pnum(3, 8);
    done = 0;
    while (done < 200) {
      std::vector<IVec> pts;
      for (int i = pnum(rng); i > 0; --i) pts.push_back({Int(pcoord(rng)), Int(pcoord(rng))});
      if (linalg::rank(pts) < 2) continue;
      Polytope P = convex_hull_int(pts);
      if (P.dim != 2) continue;
      ++done;
      Int I = Int(lattice_points(P, true).size());
      Int B = Int(lattice_points(P, false).size()) - I;
      if (normalized_volume(P, P.top()) != 2 * I + B - 2) return false;
    }
    return true;
  }});

  criteria.push_back({7, "n(lambda)_i equals the enumeration-and-bucket oracle", [&] {
    int edges_seen = 0;
    std::vector<const NewtonAtInfinity*> all;
    for (const NewtonAtInfinity& N : fixtures) all.push_back(&N);
    NewtonAtInfinity special1 = newton_of({iv({2, 0}), iv({0, 3})});
    NewtonAtInfinity special2 = newton_of({iv({5, 0}), iv({0, 5}), iv({3, 3})});
    all.push_back(&special1);
    all.push_back(&special2);
    for (const NewtonAtInfinity* N : all) {
      for (const InteriorEdge& e : interior_edges(*N)) {
        ++edges_seen;
        for (long long d = 2; d <= e.e; ++d) {
          if (e.e % d != 0) continue;
          for (long long k = 1; k < d; ++k) {
            if (std::gcd(k, d) != 1) continue;
            RootOfUnity l{k, d};
            if (n_lambda(e, l) != n_lambda_oracle(*N, e, l)) return false;
          }
        }
      }
    }
    c7 = edges_seen > 0;
    return c7;
  }});

  criteria.push_back({8, "dimension bound n*b_n + (n-1)*b_{n-1} <= multiplicity(lambda)", [&] {
    for (const NewtonAtInfinity& N : fixtures) {
      JordanReport rep = jordan_table(N);
      for (const JordanRow& r : rep.rows) {
        long long mult = multiplicity(N, r.lambda);  // independent code path
        if (rep.n * r.blocks_size_n + (rep.n - 1) * r.blocks_size_n_minus_1 > mult) return false;
      }
    }
    c8 = true;
    return true;
  }});

  criteria.push_back({9, "section-6 A_circ fixtures and union semantics", [&] {
    LocalScene s1;
    s1.n = 2;
    s1.boundary.push_back(parse_polynomial("x1^2 + x2", 2, false));
    EigenvalueSet A1 = atypical_eigenvalues_local(s1);
    if (A1.explicit_list() !=
        std::vector<RootOfUnity>{RootOfUnity{0, 1}, RootOfUnity{1, 2}})
      return false;

    LocalScene s2;
    s2.n = 2;
    s2.boundary.push_back(parse_polynomial("x*y", 2, false));
    if (!atypical_eigenvalues_local(s2).only_one()) return false;

    // union over boundary polynomials, checked against hand-enumerated compact
    // faces: the slice of x^2 + y^3 + z has faces {(2,0,0)}, {(0,3,0)} and the
    // edge between them, with d = 2, 3, 6
    LocalScene s3;
    s3.n = 3;
    s3.boundary.push_back(parse_polynomial("x^2 + y^3 + z", 3, false));
    s3.boundary.push_back(parse_polynomial("x1^5 + x3", 3, false));  // adds d = 5
    EigenvalueSet A3 = atypical_eigenvalues_local(s3);
    std::set<long long> want = {1, 2, 3, 5, 6};
    if (A3.orders != want) return false;
    for (long long d : {2, 3, 5, 6})
      if (!A3.contains(RootOfUnity{1, d})) return false;
    if (A3.contains(RootOfUnity{1, 4}) || A3.contains(RootOfUnity{1, 30})) return false;
    return true;
  }});

  criteria.push_back({10, "no monodromy matrices anywhere: concentration/JNF accepted "
                          "via criteria 4, 7, 8 and the documented scope",
                      [&] { return c4 && c7 && c8; }});

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("%s  %2d  %s  (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.label.c_str(), secs);
    if (!err.empty()) std::printf("          exception: %s\n", err.c_str());
    all_ok &= ok;
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
  return all_ok ? 0 : 1;
}

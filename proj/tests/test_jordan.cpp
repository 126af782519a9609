#include <nmono/jordan.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace nmono;
using namespace nmono::testing;

namespace {

NewtonAtInfinity from_support(std::vector<IVec> pts) {
  Polynomial f;
  f.ambient_dim = static_cast<int>(pts[0].size());
  for (const IVec& p : pts) {
    ExponentVector e(f.ambient_dim);
    for (int j = 0; j < f.ambient_dim; ++j) e[j] = to_i64(p[j]);
    f.terms[e] = 1;
  }
  return gamma_infinity(f);
}

// independent oracle: enumerate the box around Delta_i, keep points strictly
// inside by exact facet inequalities, and bucket by height
long long n_lambda_oracle(const Polytope& parent, const Face& edge, const RootOfUnity& lambda) {
  std::vector<IVec> pts = parent.face_vertices_int(edge);
  auto ld = lattice_distance(pts);
  pts.push_back(IVec(parent.ambient_dim, Int(0)));
  Polytope delta = convex_hull_int(pts);
  long long e = to_i64(ld.d);
  long long k = lambda.k * (e / lambda.d);
  std::map<long long, long long> buckets;
  for (const IVec& v : lattice_points(delta, true)) buckets[to_i64(height(v, ld))]++;
  long long out = 0;
  if (buckets.count(k)) out += buckets[k];
  if (buckets.count(e - k)) out += buckets[e - k];
  return out;
}

const JordanRow* row_of(const JordanReport& rep, long long k, long long d) {
  for (const JordanRow& r : rep.rows)
    if (r.lambda.k == k && r.lambda.d == d) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("cone at infinity: spec examples") {
  ConeAtInfinity c1 = cone_infinity(from_support(ivs({{2, 0}, {0, 3}})));
  CHECK(c1.cone.generators == ivs({{0, 1}, {1, 0}}));

  ConeAtInfinity c2 = cone_infinity(from_support(ivs({{1, 3}, {3, 0}, {3, 2}})));
  CHECK(c2.cone.generators == ivs({{1, 0}, {1, 3}}));

  ConeAtInfinity c3 = cone_infinity(from_support(ivs({{2, 0, 0}, {2, 2, 0}, {2, 2, 3}})));
  CHECK(c3.cone.generators == ivs({{1, 0, 0}, {1, 1, 0}, {2, 2, 3}}));
}

TEST_CASE("interior vertices") {
  auto iv1 = interior_vertices(from_support(ivs({{5, 0}, {0, 5}, {3, 3}})));
  REQUIRE(iv1.size() == 1);
  CHECK(iv1[0].q == iv({3, 3}));
  CHECK(iv1[0].d == 3);

  CHECK(interior_vertices(from_support(ivs({{2, 0}, {0, 3}}))).empty());
  CHECK(interior_vertices(from_support(ivs({{2, 0, 0}, {2, 2, 0}, {2, 2, 3}}))).empty());
}

TEST_CASE("interior edges") {
  auto e1 = interior_edges(from_support(ivs({{2, 0}, {0, 3}})));
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].e == 6);
  CHECK(e1[0].ends == ivs({{0, 3}, {2, 0}}));
  REQUIRE(e1[0].interior.size() == 1);
  CHECK(e1[0].interior[0] == iv({1, 1}));

  auto e2 = interior_edges(from_support(ivs({{5, 0}, {0, 5}, {3, 3}})));
  CHECK(e2.size() == 2);
  for (const auto& e : e2) CHECK(e.e == 15);

  CHECK(interior_edges(from_support(ivs({{2, 0, 0}, {2, 2, 0}, {2, 2, 3}}))).empty());
}

TEST_CASE("n_lambda on the (2,3) triangle edge") {
  auto edges = interior_edges(from_support(ivs({{2, 0}, {0, 3}})));
  REQUIRE(edges.size() == 1);
  const InteriorEdge& e = edges[0];
  CHECK(n_lambda(e, RootOfUnity{1, 6}) == 1);  // ht 1 once, ht 5 never
  CHECK(n_lambda(e, RootOfUnity{5, 6}) == 1);  // k = 5: 0 + 1
  CHECK(n_lambda(e, RootOfUnity{1, 2}) == 0);  // k = 3 = e - k: 0 + 0
  CHECK_THROWS_AS(n_lambda(e, RootOfUnity{0, 1}), domain_error);
  CHECK_THROWS_AS(n_lambda(e, RootOfUnity{1, 4}), domain_error);
}

TEST_CASE("jordan table for x^2 + y^3") {
  JordanReport rep = jordan_table(from_support(ivs({{2, 0}, {0, 3}})));
  CHECK(rep.n == 2);
  CHECK(rep.vertices.empty());
  REQUIRE(rep.edges.size() == 1);
  CHECK(rep.excluded.only_one());
  REQUIRE(rep.rows.size() == 5);  // 1/2, 1/3, 2/3, 1/6, 5/6
  const JordanRow* z6 = row_of(rep, 1, 6);
  REQUIRE(z6);
  CHECK(z6->blocks_size_n == 0);
  CHECK(z6->blocks_size_n_minus_1 == 1);
  const JordanRow* z6c = row_of(rep, 5, 6);
  REQUIRE(z6c);
  CHECK(z6c->blocks_size_n_minus_1 == 1);
  for (auto [k, d] : {std::pair<long long, long long>{1, 2}, {1, 3}, {2, 3}}) {
    const JordanRow* r = row_of(rep, k, d);
    REQUIRE(r);
    CHECK(r->blocks_size_n == 0);
    CHECK(r->blocks_size_n_minus_1 == 0);
  }
  // -1 with even e exercises the k = e - k reading
  CHECK(row_of(rep, 1, 2)->coincident);
}

TEST_CASE("jordan table with an interior vertex") {
  JordanReport rep = jordan_table(from_support(ivs({{5, 0}, {0, 5}, {3, 3}})));
  const JordanRow* z3 = row_of(rep, 1, 3);
  REQUIRE(z3);
  CHECK(z3->blocks_size_n == 1);  // q = (3,3), d = 3
  CHECK(row_of(rep, 2, 3)->blocks_size_n == 1);
  // primitive 15th roots get one size-1 block from each edge: ht 1 point (4,1)
  const JordanRow* z15 = row_of(rep, 1, 15);
  REQUIRE(z15);
  CHECK(z15->blocks_size_n == 0);
  CHECK(z15->blocks_size_n_minus_1 == 2);
}

TEST_CASE("atypical eigenvalues are excluded from the table") {
  JordanReport rep = jordan_table(from_support(ivs({{2, 0, 0}, {0, 2, 0}, {1, 1, 1}})));
  CHECK(rep.excluded.contains(RootOfUnity{1, 2}));
  for (const JordanRow& r : rep.rows) CHECK_FALSE(rep.excluded.contains(r.lambda));
}

TEST_CASE("n_lambda equals the brute-force oracle on random fixtures") {
  std::mt19937_64 rng(71);
  int fixtures_with_edges = 0;
  for (int trial = 0; trial < 60 && fixtures_with_edges < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    NewtonAtInfinity N = from_support(random_support(rng, n));
    auto edges = interior_edges(N);
    if (edges.empty()) continue;
    ++fixtures_with_edges;
    for (const InteriorEdge& e : edges) {
      for (long long d = 2; d <= e.e; ++d) {
        if (e.e % d != 0) continue;
        for (long long k = 1; k < d; ++k) {
          if (std::gcd(k, d) != 1) continue;
          RootOfUnity l{k, d};
          CHECK(n_lambda(e, l) == n_lambda_oracle(N.P, N.P.faces[e.face_id], l));
        }
      }
    }
  }
  CHECK(fixtures_with_edges > 0);
}

TEST_CASE("dimension bound: n*b_n + (n-1)*b_{n-1} <= multiplicity") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    NewtonAtInfinity N = from_support(random_support(rng, n));
    JordanReport rep = jordan_table(N);
    for (const JordanRow& r : rep.rows) {
      long long mult = multiplicity(N, r.lambda);
      CHECK(rep.n * r.blocks_size_n + (rep.n - 1) * r.blocks_size_n_minus_1 <= mult);
    }
  }
}

TEST_CASE("interior faces avoid atypical closures") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    NewtonAtInfinity N = from_support(random_support(rng, n));
    auto at = atypical_faces(N);
    auto contained_in_atypical = [&](int id) {
      for (int a : at)
        if (N.P.face_subset(N.P.faces[id], N.P.faces[a])) return true;
      return false;
    };
    for (const InteriorVertex& v : interior_vertices(N)) {
      CHECK(N.cls[v.face_id].admissible);
      CHECK_FALSE(contained_in_atypical(v.face_id));
    }
    for (const InteriorEdge& e : interior_edges(N)) {
      CHECK(N.cls[e.face_id].admissible);
      CHECK_FALSE(contained_in_atypical(e.face_id));
    }
  }
}

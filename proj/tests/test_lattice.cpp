#include <nmono/lattice.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace nmono;
using namespace nmono::testing;

namespace {

// brute-force search over small integer functionals: the lattice distance of
// an edge is the constant value of the unique primitive functional on M_gamma
// that is constant and positive on gamma
std::optional<Int> edge_distance_oracle(const IVec& a, const IVec& b, int radius) {
  const int n = static_cast<int>(a.size());
  IMat basis = linalg::lattice_span_basis({a, b}, n);
  IVec u(n, Int(-radius));
  std::optional<Int> best;
  while (true) {
    if (!is_zero(u)) {
      Int va = dot(u, a), vb = dot(u, b);
      if (va == vb && va > 0) {
        IVec w(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) w[j] = dot(u, basis[j]);
        if (gcd(w) == 1 && (!best || va < *best)) best = va;
      }
    }
    int j = n - 1;
    while (j >= 0 && u[j] == radius) {
      u[j] = -radius;
      --j;
    }
    if (j < 0) break;
    ++u[j];
  }
  return best;
}

}  // namespace

TEST_CASE("lattice distance of vertices equals the gcd of coordinates") {
  CHECK(lattice_distance({iv({2, 2, 0})}).d == 2);
  CHECK(lattice_distance({iv({1, 1, 1})}).d == 1);
  CHECK(lattice_distance({iv({4, 6})}).d == 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> coord(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    IVec v(n);
    for (int j = 0; j < n; ++j) v[j] = coord(rng);
    if (is_zero(v)) continue;
    CHECK(lattice_distance({v}).d == gcd(v));
  }
}

TEST_CASE("lattice distance of edges") {
  // [(1,3),(3,2)]: primitive normal (1,2) gives value 7
  auto ld = lattice_distance({iv({1, 3}), iv({3, 2})});
  CHECK(ld.d == 7);
  CHECK(dot(ld.functional, iv({1, 3})) == 7);
  CHECK(dot(ld.functional, iv({3, 2})) == 7);
  auto oracle = edge_distance_oracle(iv({1, 3}), iv({3, 2}), 6);
  REQUIRE(oracle);
  CHECK(*oracle == 7);

  // [(2,0),(0,3)]: u = (3,2), d = 6
  auto ld2 = lattice_distance({iv({2, 0}), iv({0, 3})});
  CHECK(ld2.d == 6);
  CHECK(*edge_distance_oracle(iv({2, 0}), iv({0, 3}), 6) == 6);

  // [(3,0),(3,2)]: u = (1,0), d = 3
  CHECK(lattice_distance({iv({3, 0}), iv({3, 2})}).d == 3);
}

TEST_CASE("lattice distance rejects faces through the origin") {
  CHECK_THROWS_AS(lattice_distance({iv({0, 0})}), domain_error);
  CHECK_THROWS_AS(lattice_distance({iv({1, 1}), iv({2, 2})}), domain_error);
  CHECK_THROWS_AS(lattice_distance(std::vector<IVec>{}), domain_error);
}

TEST_CASE("heights against the edge of the (2,3) triangle") {
  std::vector<IVec> edge = {iv({2, 0}), iv({0, 3})};
  auto ld = lattice_distance(edge);
  CHECK(height(iv({0, 0}), ld) == ld.d);  // ht(0, gamma) = d_gamma
  CHECK(height(iv({1, 1}), edge) == 1);   // 6 - <(3,2),(1,1)>
  CHECK(height(iv({2, 0}), ld) == 0);     // v on gamma
  CHECK_THROWS_AS(height(iv({1, 1, 1}), std::vector<IVec>{iv({2, 2, 0})}), domain_error);
}

TEST_CASE("normalized volume of edges is the lattice length") {
  CHECK(normalized_volume({iv({3, 0}), iv({3, 2})}) == 2);
  CHECK(normalized_volume({iv({1, 3}), iv({3, 2})}) == 1);
  CHECK(normalized_volume({iv({5, 7})}) == 1);  // point convention
}

TEST_CASE("normalized volume of lattice simplices is |det| of the edge matrix") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> coord(-5, 5);
  int done = 0;
  while (done < 100) {
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
    CHECK(normalized_volume(pts) == (d < 0 ? -d : d));
    ++done;
  }
}

TEST_CASE("normalized volume matches Pick on random 2d polytopes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IVec> pts = random_support(rng, 2, 7, 9);
    Polytope P = convex_hull_int(pts);
    if (P.dim != 2) continue;
    Int vol = normalized_volume(P, P.top());
    auto all = lattice_points(P, false);
    auto interior = lattice_points(P, true);
    Int I = Int(interior.size()), B = Int(all.size()) - I;
    // Pick: A = I + B/2 - 1, and vol = 2A
    CHECK(vol == 2 * I + B - 2);
  }
}

TEST_CASE("lattice points: spec fixtures") {
  Polytope tri = convex_hull_int(ivs({{0, 0}, {2, 0}, {0, 3}}));
  auto interior = lattice_points(tri, true);
  REQUIRE(interior.size() == 1);
  CHECK(interior[0] == iv({1, 1}));

  Polytope seg = convex_hull_int(ivs({{0, 0, 0}, {2, 2, 0}}));
  auto seg_int = lattice_points(seg, true);
  REQUIRE(seg_int.size() == 1);
  CHECK(seg_int[0] == iv({1, 1, 0}));

  // Pick: conv{0,(2,0),(0,2)} has area 2 and boundary 6, so no interior points
  Polytope tri2 = convex_hull_int(ivs({{0, 0}, {2, 0}, {0, 2}}));
  CHECK(lattice_points(tri2, true).empty());
  CHECK(lattice_points(tri2, false).size() == 6);

  CHECK_THROWS_AS(lattice_points(convex_hull(qvs({{0, 0}}), {iv({1, 0})}), false), domain_error);
}

TEST_CASE("lattice points agree with a naive extreme-point-oracle scan") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<IVec> pts = random_support(rng, n, 5, 4);
    pts.push_back(IVec(n, Int(0)));
    Polytope P = convex_hull_int(pts);
    auto mine = lattice_points(P, false);
    std::set<IVec> got(mine.begin(), mine.end());
    IVec lo(n, Int(0)), hi(n, Int(0));
    for (const IVec& p : pts)
      for (int j = 0; j < n; ++j) {
        lo[j] = std::min(lo[j], p[j]);
        hi[j] = std::max(hi[j], p[j]);
      }
    IVec cur = lo;
    while (true) {
      std::vector<QVec> aug;
      for (const IVec& p : pts) aug.push_back(to_qvec(p));
      aug.push_back(to_qvec(cur));
      bool inside = !extreme_point_oracle(aug, aug.size() - 1);
      for (const IVec& p : pts) inside |= (cur == p);
      CHECK(inside == (got.count(cur) != 0));
      int j = n - 1;
      while (j >= 0 && cur[j] == hi[j]) {
        cur[j] = lo[j];
        --j;
      }
      if (j < 0) break;
      ++cur[j];
    }
  }
}

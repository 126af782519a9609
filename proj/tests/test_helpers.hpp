#pragma once

#include <nmono/polytope.hpp>

#include <random>

namespace nmono::testing {

inline IVec iv(std::initializer_list<long long> xs) {
  IVec v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

inline QVec qv(std::initializer_list<long long> xs) {
  QVec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

inline std::vector<IVec> ivs(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IVec> out;
  for (auto& r : rows) out.push_back(iv(r));
  return out;
}

inline std::vector<QVec> qvs(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<QVec> out;
  for (auto& r : rows) out.push_back(qv(r));
  return out;
}

// brute-force extreme-point oracle: p is extreme in conv(points) iff it is not
// a convex combination of the others (exact LP-free test in small dimension by
// enumerating barycentric solves over subsets)
inline bool extreme_point_oracle(const std::vector<QVec>& points, std::size_t idx) {
  const int n = static_cast<int>(points[0].size());
  std::vector<QVec> others;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (i != idx) others.push_back(points[i]);
  // p in conv(others) iff some affinely independent subset of size <= n+1
  // contains it with nonnegative barycentric coordinates
  const std::size_t m = others.size();
  std::vector<int> mask(m, 0);
  std::function<bool(std::size_t, std::vector<int>&)> rec = [&](std::size_t start,
                                                                std::vector<int>& chosen) -> bool {
    if (!chosen.empty()) {
      // solve sum l_i q_i = p, sum l_i = 1, l_i >= 0
      QMat a(n + 1, QVec(chosen.size()));
      QVec b(n + 1);
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        for (int i = 0; i < n; ++i) a[i][j] = others[chosen[j]][i];
        a[n][j] = 1;
      }
      for (int i = 0; i < n; ++i) b[i] = points[idx][i];
      b[n] = 1;
      auto sol = linalg::solve(a, b);
      if (sol) {
        bool nonneg = true;
        for (const Rat& l : *sol)
          if (l < 0) nonneg = false;
        // solve() zeroes free variables, which keeps the test conservative;
        // subsets of every size are tried so a witness is never missed
        if (nonneg) return true;
      }
    }
    if (chosen.size() == static_cast<std::size_t>(n) + 1) return false;
    for (std::size_t i = start; i < m; ++i) {
      chosen.push_back(static_cast<int>(i));
      if (rec(i + 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::vector<int> chosen;
  return !rec(0, chosen);
}

// random full-dimensional Gamma_infinity-style support in dimension n
inline std::vector<IVec> random_support(std::mt19937_64& rng, int n, int max_points = 8,
                                        int max_coord = 6) {
  std::uniform_int_distribution<int> npts(3, max_points);
  std::uniform_int_distribution<int> coord(0, max_coord);
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

}  // namespace nmono::testing

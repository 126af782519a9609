#pragma once

#include <nmono/numeric.hpp>

#include <optional>

namespace nmono {

using QMat = std::vector<QVec>;  // row-major
using IMat = std::vector<IVec>;

namespace linalg {

// Reduce to row echelon form in place; returns pivot column per reduced row.
inline std::vector<int> echelon(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

inline int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

inline int rank(const std::vector<IVec>& vecs) {
  QMat m;
  m.reserve(vecs.size());
  for (const IVec& v : vecs) m.push_back(to_qvec(v));
  return rank(std::move(m));
}

// Greedy maximal linearly independent subset, in input order.
inline std::vector<int> independent_subset(const std::vector<QVec>& vecs) {
  std::vector<int> picked;
  QMat acc;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    acc.push_back(vecs[i]);
    QMat copy = acc;
    if (static_cast<int>(echelon(copy).size()) == static_cast<int>(acc.size()))
      picked.push_back(static_cast<int>(i));
    else
      acc.pop_back();
  }
  return picked;
}

// Any solution of A x = b (free variables set to 0), or nullopt if inconsistent.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  QMat aug(rows, QVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = echelon(aug);
  for (int p : pivots)
    if (p == static_cast<int>(cols)) return std::nullopt;
  QVec x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

// Coefficients c with sum_i c_i basis_i = x, or nullopt if x is outside the span.
inline std::optional<QVec> coords_in_basis(const std::vector<QVec>& basis, const QVec& x) {
  const std::size_t n = x.size();
  QMat a(n, QVec(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = basis[j][i];
  return solve(a, x);
}

// Basis of { x : M x = 0 }, each vector scaled to a primitive integer vector
// with positive first nonzero entry. Deterministic.
inline std::vector<IVec> nullspace_primitive(QMat m, std::size_t cols) {
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<IVec> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    QVec x(cols, Rat(0));
    x[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][fc];
    Int scale = 1;
    for (const Rat& v : x) scale = lcm(scale, den(v));
    IVec w(cols);
    for (std::size_t i = 0; i < cols; ++i) w[i] = num(x[i] * Rat(scale));
    w = primitive(std::move(w));
    for (const Int& v : w) {
      if (v == 0) continue;
      if (v < 0)
        for (Int& y : w) y = -y;
      break;
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

// Row-style Hermite normal form: returns H with T*M = H for unimodular T.
// Pivots positive, entries above each pivot reduced into [0, pivot).
inline IMat hnf_rows(IMat m, IMat* transform = nullptr) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  IMat t(rows, IVec(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) t[i][i] = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd elimination below row r in column c
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        if (best == rows || abs(m[i][c]) < abs(m[best][c])) best = i;
      }
      if (best == rows) break;
      std::swap(m[r], m[best]);
      std::swap(t[r], t[best]);
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        for (std::size_t j = 0; j < rows; ++j) t[i][j] -= q * t[r][j];
        if (m[i][c] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) {
      for (Int& v : m[r]) v = -v;
      for (Int& v : t[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = m[i][c] / m[r][c];
      if (m[i][c] - q * m[r][c] < 0) --q;  // floor division
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
      for (std::size_t j = 0; j < rows; ++j) t[i][j] -= q * t[r][j];
    }
    ++r;
  }
  if (transform) *transform = std::move(t);
  return m;
}

inline IMat transpose(const IMat& m) {
  if (m.empty()) return {};
  IMat t(m[0].size(), IVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

// Column-style HNF: A * U = H with U unimodular.
inline IMat hnf_cols(const IMat& a, IMat* u = nullptr) {
  IMat t;
  IMat h = hnf_rows(transpose(a), u ? &t : nullptr);
  if (u) *u = transpose(t);
  return transpose(h);
}

// Basis of the integer kernel { x in Z^m : A x = 0 }. The kernel of a map to
// Z^k is automatically saturated.
inline IMat int_kernel(const IMat& a) {
  if (a.empty()) return {};
  const std::size_t m = a[0].size();
  IMat u;
  IMat h = hnf_cols(a, &u);
  IMat basis;
  for (std::size_t j = 0; j < m; ++j) {
    bool zero_col = true;
    for (std::size_t i = 0; i < a.size() && zero_col; ++i)
      if (h[i][j] != 0) zero_col = false;
    if (!zero_col) continue;
    IVec v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = u[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Basis of the saturated lattice Z^n intersected with the rational span of gens.
inline IMat lattice_span_basis(const std::vector<IVec>& gens, int n) {
  QMat rows;
  for (const IVec& g : gens)
    if (!is_zero(g)) rows.push_back(to_qvec(g));
  if (rows.empty()) return {};
  std::vector<IVec> eqs = nullspace_primitive(rows, static_cast<std::size_t>(n));
  if (eqs.empty()) {
    IMat id(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  return int_kernel(eqs);
}

// Fraction-free determinant (Bareiss).
inline Int det(IMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Integer coefficients of x in a saturated lattice basis, or nullopt if x is
// outside the rational span. Non-integer coordinates raise invariant_error
// (they signal a non-saturated basis, i.e. a bug).
inline std::optional<IVec> integer_coords(const std::vector<IVec>& basis, const IVec& x) {
  std::vector<QVec> qb;
  qb.reserve(basis.size());
  for (const IVec& b : basis) qb.push_back(to_qvec(b));
  auto c = coords_in_basis(qb, to_qvec(x));
  if (!c) return std::nullopt;
  IVec out(c->size());
  for (std::size_t i = 0; i < c->size(); ++i) {
    if (!is_integer((*c)[i]))
      throw invariant_error("integer_coords: non-integer coordinate in saturated basis");
    out[i] = num((*c)[i]);
  }
  return out;
}

// u in Z^n with <u, basis_j> = w_j for all j; requires the basis to span a
// saturated lattice (so the restriction map on duals is onto).
inline IVec dual_solve(const std::vector<IVec>& basis, const IVec& w) {
  if (basis.empty()) throw domain_error("dual_solve: empty basis");
  const std::size_t n = basis[0].size();
  IMat a(basis.size(), IVec(n));
  for (std::size_t i = 0; i < basis.size(); ++i) a[i] = basis[i];
  IMat u;
  IMat h = hnf_cols(a, &u);
  // saturation makes the leading block of H the identity
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (h[i][j] != (i == j ? 1 : 0))
        throw invariant_error("dual_solve: basis does not span a saturated lattice");
  IVec x(n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) x[i] += u[i][j] * w[j];
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (dot(x, basis[j]) != w[j]) throw invariant_error("dual_solve: verification failed");
  return x;
}

}  // namespace linalg
}  // namespace nmono

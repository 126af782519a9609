#pragma once

#include <nmono/newton.hpp>

namespace nmono {

// prod_d (1 - t^d)^{e_d} with integer exponents, merged additively
struct FactoredZeta {
  std::map<long long, long long> factors;

  void mul(long long d, long long e) {
    if (e == 0) return;
    long long& slot = factors[d];
    slot += e;
    if (slot == 0) factors.erase(d);
  }
  void mul(const FactoredZeta& o) {
    for (const auto& [d, e] : o.factors) mul(d, e);
  }

  // multiplicity of the factor (1 - lambda*t) for a reduced root of unity of
  // order d0: each (1 - t^d) contributes once when d0 | d
  long long multiplicity_of_order(long long d0) const {
    long long m = 0;
    for (const auto& [d, e] : factors)
      if (d % d0 == 0) m += e;
    return m;
  }

  std::string str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [d, e] : factors) {
      s += "(1-t^" + std::to_string(d) + ")";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }
};

struct ZetaTerm {
  int face_id;
  long long d;
  long long e;
};

// Faces entering the zeta product at infinity: every face at infinity with
// m_gamma = 0, admissible or not, contributing (1 - t^d)^{(-1)^(s-1) Vol}.
inline std::vector<ZetaTerm> zeta_contributions(const NewtonAtInfinity& N) {
  N.require_full_dim();
  std::vector<ZetaTerm> out;
  for (int id : faces_at_infinity(N)) {
    const FaceClass& c = N.cls[id];
    if (c.m_gamma != 0) continue;
    long long e = to_i64(*c.vol);
    if ((c.s_gamma - 1) % 2 != 0) e = -e;
    out.push_back(ZetaTerm{id, to_i64(c.dist->d), e});
  }
  return out;
}

inline FactoredZeta zeta_at_infinity(const NewtonAtInfinity& N) {
  FactoredZeta z;
  for (const ZetaTerm& t : zeta_contributions(N)) z.mul(t.d, t.e);
  return z;
}

// Torus variant: only the (n-1)-dimensional faces at infinity contribute,
// each with exponent (-1)^(n-1) Vol.
inline std::vector<ZetaTerm> torus_zeta_contributions(const NewtonAtInfinity& N) {
  N.require_full_dim();
  std::vector<ZetaTerm> out;
  for (int id : faces_at_infinity(N)) {
    const Face& f = N.P.faces[id];
    if (f.dim != N.n() - 1) continue;
    const FaceClass& c = N.cls[id];
    long long e = to_i64(*c.vol);
    if ((N.n() - 1) % 2 != 0) e = -e;
    out.push_back(ZetaTerm{id, to_i64(c.dist->d), e});
  }
  return out;
}

inline FactoredZeta zeta_torus_at_infinity(const NewtonAtInfinity& N) {
  FactoredZeta z;
  for (const ZetaTerm& t : torus_zeta_contributions(N)) z.mul(t.d, t.e);
  return z;
}

inline FactoredZeta zeta_torus_at_infinity(const Polynomial& laurent_poly) {
  return zeta_torus_at_infinity(gamma_infinity_torus(laurent_poly));
}

// Faces entering the multiplicity product: admissible faces at infinity with
// m_gamma = 0, with exponent (-1)^(n-s) Vol.
inline std::vector<ZetaTerm> multiplicity_contributions(const NewtonAtInfinity& N) {
  N.require_full_dim();
  std::vector<ZetaTerm> out;
  for (int id : admissible_faces(N)) {
    const FaceClass& c = N.cls[id];
    if (c.m_gamma != 0) continue;
    long long e = to_i64(*c.vol);
    if ((N.n() - c.s_gamma) % 2 != 0) e = -e;
    out.push_back(ZetaTerm{id, to_i64(c.dist->d), e});
  }
  return out;
}

// Multiplicity of a non-atypical eigenvalue lambda in Phi_{n-1}^infinity.
// Refuses lambda in A_f: the concentration backing this formula is only
// asserted away from the atypical eigenvalues.
inline long long multiplicity(const NewtonAtInfinity& N, const RootOfUnity& lambda) {
  N.require_full_dim();
  if (atypical_eigenvalues(N).contains(lambda))
    throw domain_error("multiplicity: atypical eigenvalue, formula not applicable");
  long long m = 0;
  for (const ZetaTerm& t : multiplicity_contributions(N))
    if (t.d % lambda.d == 0) m += t.e;
  if (m < 0) throw invariant_error("multiplicity: negative value");
  return m;
}

// Candidate orders for the multiplicity table: divisors (> 1) of the d's that
// actually appear in the multiplicity product.
inline std::vector<long long> multiplicity_candidate_orders(const NewtonAtInfinity& N) {
  std::set<long long> orders;
  for (const ZetaTerm& t : multiplicity_contributions(N))
    for (long long d = 2; d <= t.d; ++d)
      if (t.d % d == 0) orders.insert(d);
  return {orders.begin(), orders.end()};
}

}  // namespace nmono

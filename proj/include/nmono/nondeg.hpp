#pragma once

#include <nmono/newton.hpp>

#include <array>
#include <random>

namespace nmono {

// Verdicts, worst first. Exact procedures exist for faces of dimension <= 1;
// higher-dimensional faces get a randomized modular search, so their verdicts
// are honest probabilistic statements, never certificates.
enum class Verdict {
  DegenerateCertified,
  LikelyDegenerate,
  ProbablyNonDegenerate,
  NonDegenerateCertified,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::DegenerateCertified: return "DegenerateCertified";
    case Verdict::LikelyDegenerate: return "LikelyDegenerate";
    case Verdict::ProbablyNonDegenerate: return "ProbablyNonDegenerate";
    case Verdict::NonDegenerateCertified: return "NonDegenerateCertified";
  }
  return "?";
}

struct NondegOptions {
  int trials = 64;
  std::uint64_t seed = 0;
  int prime_count = 4;
};

struct ModularWitness {
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> point;  // common zero of the face system in (F_p^*)^k
  int trial = -1;
};

struct FaceCheck {
  int face_id = -1;
  Verdict verdict = Verdict::ProbablyNonDegenerate;
  std::string detail;
  int trials_run = 0;
  std::optional<ModularWitness> witness;
};

struct NondegStatus {
  std::vector<FaceCheck> faces;  // by face id order over the faces at infinity
  Verdict overall = Verdict::NonDegenerateCertified;
};

namespace qpoly {

using QPoly = std::vector<Rat>;  // ascending coefficients

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(Int(i)));
  trim(d);
  return d;
}

inline QPoly rem(QPoly a, const QPoly& b) {
  while (deg(a) >= deg(b)) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

inline std::string to_string(const QPoly& p, const char* var = "t") {
  if (p.empty()) return "0";
  std::string s;
  for (int i = deg(p); i >= 0; --i) {
    if (p[i] == 0) continue;
    Rat a = p[i] < 0 ? Rat(-p[i]) : p[i];
    if (s.empty())
      s += p[i] < 0 ? "-" : "";
    else
      s += p[i] < 0 ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? var : std::string(var) + "^" + std::to_string(i));
    if (mono.empty())
      s += str(a);
    else if (a == 1)
      s += mono;
    else
      s += str(a) + "*" + mono;
  }
  return s;
}

}  // namespace qpoly

namespace modp {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

using Poly = std::vector<std::uint64_t>;  // ascending

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly rem(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  while (deg(a) >= deg(b)) {
    std::uint64_t f = mulmod(a.back(), invmod(b.back(), p), p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = (a[i + shift] + p - mulmod(f, b[i], p)) % p;
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(c);
  return c;
}

// base^e mod (m, p)
inline Poly powmod_poly(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r = {1};
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) r = rem(mul(r, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// all roots of a product of distinct linear factors (an equal-degree split)
inline std::vector<std::uint64_t> roots_of_split(Poly r, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<std::uint64_t> out;
  std::vector<Poly> stack = {std::move(r)};
  while (!stack.empty()) {
    Poly f = stack.back();
    stack.pop_back();
    trim(f);
    if (deg(f) <= 0) continue;
    if (deg(f) == 1) {
      // f = c1 x + c0 -> root -c0/c1
      out.push_back(mulmod(p - f[0] % p, invmod(f[1], p), p));
      continue;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (true) {
      std::uint64_t c = dist(rng);
      Poly base = {c, 1};  // x + c
      Poly b = powmod_poly(base, (p - 1) / 2, f, p);
      if (b.empty())
        b = {p - 1};
      else
        b[0] = (b[0] + p - 1) % p;  // b - 1
      trim(b);
      Poly g = gcd(f, b, p);
      if (deg(g) >= 1 && deg(g) < deg(f)) {
        // divide f by g
        Poly q;
        Poly a = f;
        trim(a);
        while (deg(a) >= deg(g)) {
          std::uint64_t lead = mulmod(a.back(), invmod(g.back(), p), p);
          std::size_t shift = a.size() - g.size();
          if (q.size() < shift + 1) q.resize(shift + 1, 0);
          q[shift] = lead;
          for (std::size_t i = 0; i < g.size(); ++i)
            a[i + shift] = (a[i + shift] + p - mulmod(lead, g[i], p)) % p;
          trim(a);
        }
        stack.push_back(std::move(g));
        stack.push_back(std::move(q));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modp

namespace detail {

constexpr std::array<std::uint64_t, 8> kNondegPrimes = {
    2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL,
    2147483563ULL, 2147483549ULL, 2147483543ULL, 2147483497ULL,
};

// terms of f lying on the face, as (exponent, coefficient) pairs
inline std::vector<std::pair<IVec, Rat>> face_terms(const Polynomial& f, const Polytope& P,
                                                    const Face& gamma) {
  std::vector<std::pair<IVec, Rat>> out;
  for (const auto& [e, c] : f.terms) {
    QVec q(e.size());
    IVec w(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      q[i] = Rat(e[i]);
      w[i] = e[i];
    }
    if (P.face_contains(gamma, q)) out.emplace_back(std::move(w), c);
  }
  return out;
}

// exact square-free test for an edge: in monomial coordinates along the edge,
// f_gamma = (monomial) * g(t) with g univariate and g(0) != 0
inline FaceCheck check_edge(const Polynomial& f, const Polytope& P, const Face& gamma) {
  FaceCheck out;
  out.face_id = gamma.id;
  IVec a = P.vertex_int(gamma.vertex_ids[0]);
  IVec b = P.vertex_int(gamma.vertex_ids[1]);
  IVec w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = b[i] - a[i];
  w = primitive(std::move(w));
  Int len = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) {
      len = (b[i] - a[i]) / w[i];
      break;
    }
  qpoly::QPoly g(to_i64(len) + 1, Rat(0));
  for (const auto& [e, c] : face_terms(f, P, gamma)) {
    Int j;
    bool set = false;
    for (std::size_t i = 0; i < w.size() && !set; ++i)
      if (w[i] != 0) {
        j = (e[i] - a[i]) / w[i];
        set = true;
      }
    for (std::size_t i = 0; i < w.size(); ++i)
      if (e[i] != a[i] + j * w[i]) throw invariant_error("check_edge: term off the edge");
    g[to_i64(j)] = c;
  }
  if (g.front() == 0 || g.back() == 0)
    throw invariant_error("check_edge: endpoint coefficient vanishes");
  qpoly::QPoly d = qpoly::derivative(g);
  qpoly::QPoly h = qpoly::gcd(g, d);
  if (qpoly::deg(h) >= 1) {
    out.verdict = Verdict::DegenerateCertified;
    out.detail = "repeated factor on the edge: gcd(g, g') = " + qpoly::to_string(h);
  } else {
    out.verdict = Verdict::NonDegenerateCertified;
    out.detail = "edge polynomial is square-free";
  }
  return out;
}

struct ModTerm {
  std::vector<long long> exp;  // exponents in the face's lattice coordinates
  Rat coeff;
};

// randomized search for singular torus points of the face part, reduced to
// the face's own lattice coordinates (dimension k = dim gamma)
inline FaceCheck check_high_dim(const Polynomial& f, const Polytope& P, const Face& gamma,
                                const NondegOptions& opt) {
  FaceCheck out;
  out.face_id = gamma.id;
  const int n = P.ambient_dim;
  const int k = gamma.dim;
  auto terms = face_terms(f, P, gamma);
  IVec base = terms.front().first;
  std::vector<IVec> dirs;
  for (const auto& [e, c] : terms) {
    IVec d(n);
    for (int i = 0; i < n; ++i) d[i] = e[i] - base[i];
    dirs.push_back(std::move(d));
  }
  IMat basis = linalg::lattice_span_basis(dirs, n);
  if (static_cast<int>(basis.size()) != k)
    throw invariant_error("check_high_dim: face dimension mismatch");

  std::vector<ModTerm> mt;
  std::vector<long long> shift(k, 0);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    auto c = linalg::integer_coords(basis, dirs[t]);
    if (!c) throw invariant_error("check_high_dim: exponent outside face lattice");
    ModTerm m;
    for (const Int& x : *c) m.exp.push_back(to_i64(x));
    m.coeff = terms[t].second;
    mt.push_back(std::move(m));
  }
  for (auto& m : mt)
    for (int i = 0; i < k; ++i) shift[i] = std::min(shift[i], m.exp[i]);
  for (auto& m : mt)
    for (int i = 0; i < k; ++i) m.exp[i] -= shift[i];

  // the singular system: h and its logarithmic derivatives t_i dh/dt_i
  auto log_deriv_coeff = [&](const ModTerm& m, int i) { return Rat(Int(m.exp[i])) * m.coeff; };

  std::mt19937_64 rng(opt.seed ^ ((static_cast<std::uint64_t>(gamma.id) + 1) * 0x9e3779b97f4a7c15ULL));
  const int nprimes = std::max(1, std::min<int>(opt.prime_count, kNondegPrimes.size()));

  for (int trial = 0; trial < opt.trials; ++trial) {
    const std::uint64_t p = kNondegPrimes[trial % nprimes];
    std::uniform_int_distribution<std::uint64_t> unit(1, p - 1);
    std::uniform_int_distribution<long long> expo(-3, 3);
    std::vector<std::uint64_t> a(k);
    std::vector<long long> b(k);
    for (int i = 0; i < k; ++i) {
      a[i] = unit(rng);
      b[i] = expo(rng);
    }
    // reduce coefficients mod p; skip the trial if a denominator vanishes
    bool bad_prime = false;
    auto reduce = [&](const Rat& q) -> std::uint64_t {
      Int dn = den(q) % p;
      if (dn == 0) {
        bad_prime = true;
        return 0;
      }
      Int nm = num(q) % p;
      if (nm < 0) nm += p;
      return modp::mulmod(static_cast<std::uint64_t>(nm),
                          modp::invmod(static_cast<std::uint64_t>(dn < 0 ? dn + p : dn), p), p);
    };
    // substitute t_i = a_i s^{b_i} into each system polynomial
    auto substitute = [&](int deriv) -> modp::Poly {
      long long lo = 0, hi = 0;
      for (const ModTerm& m : mt) {
        long long e = 0;
        for (int i = 0; i < k; ++i) e += b[i] * m.exp[i];
        lo = std::min(lo, e);
        hi = std::max(hi, e);
      }
      modp::Poly poly(hi - lo + 1, 0);
      for (const ModTerm& m : mt) {
        Rat c = deriv < 0 ? m.coeff : log_deriv_coeff(m, deriv);
        std::uint64_t cv = reduce(c);
        if (bad_prime) return {};
        long long e = 0;
        for (int i = 0; i < k; ++i) {
          e += b[i] * m.exp[i];
          std::uint64_t av = m.exp[i] >= 0
                                 ? modp::powmod(a[i], m.exp[i], p)
                                 : modp::invmod(modp::powmod(a[i], -m.exp[i], p), p);
          cv = modp::mulmod(cv, av, p);
        }
        poly[e - lo] = (poly[e - lo] + cv) % p;
      }
      modp::trim(poly);
      return poly;
    };
    modp::Poly g = substitute(-1);
    for (int i = 0; i < k && !bad_prime; ++i) g = modp::gcd(g, substitute(i), p);
    if (bad_prime) continue;
    out.trials_run = trial + 1;
    modp::trim(g);
    if (g.empty()) {
      // the whole system vanished along the curve; try s = 1 directly
      g = {p - 1, 1};  // s - 1
    }
    // remove roots at s = 0 and keep roots in F_p^*
    std::size_t v = 0;
    while (v < g.size() && g[v] == 0) ++v;
    g.erase(g.begin(), g.begin() + v);
    if (modp::deg(g) < 1) continue;
    modp::Poly xp = modp::powmod_poly({0, 1}, p - 1, g, p);
    if (xp.empty())
      xp = {p - 1};
    else
      xp[0] = (xp[0] + p - 1) % p;
    modp::trim(xp);
    modp::Poly split = modp::gcd(g, xp, p);
    if (modp::deg(split) < 1) continue;
    for (std::uint64_t s0 : modp::roots_of_split(split, p, rng)) {
      if (s0 == 0) continue;
      std::vector<std::uint64_t> point(k);
      for (int i = 0; i < k; ++i) {
        std::uint64_t sp = b[i] >= 0 ? modp::powmod(s0, b[i], p)
                                     : modp::invmod(modp::powmod(s0, -b[i], p), p);
        point[i] = modp::mulmod(a[i], sp, p);
      }
      // verify the witness by direct evaluation of the whole system
      bool zero = true;
      for (int d = -1; d < k && zero; ++d) {
        std::uint64_t acc = 0;
        bool bad = false;
        for (const ModTerm& m : mt) {
          Rat c = d < 0 ? m.coeff : log_deriv_coeff(m, d);
          std::uint64_t cv = reduce(c);
          if (bad_prime) {
            bad = true;
            break;
          }
          for (int i = 0; i < k; ++i) {
            std::uint64_t tv = m.exp[i] >= 0
                                   ? modp::powmod(point[i], m.exp[i], p)
                                   : modp::invmod(modp::powmod(point[i], -m.exp[i], p), p);
            cv = modp::mulmod(cv, tv, p);
          }
          acc = (acc + cv) % p;
        }
        if (bad || acc != 0) zero = false;
      }
      if (zero) {
        out.verdict = Verdict::LikelyDegenerate;
        out.witness = ModularWitness{p, point, trial};
        out.detail = "modular singular point found (trial " + std::to_string(trial) + ", p = " +
                     std::to_string(p) + ")";
        return out;
      }
    }
  }
  out.verdict = Verdict::ProbablyNonDegenerate;
  out.trials_run = opt.trials;
  out.detail = "no modular singular point after " + std::to_string(opt.trials) + " trials";
  return out;
}

}  // namespace detail

// Per-face non-degeneracy verdict for a face at infinity (or any bounded face
// not containing the origin, e.g. a compact face of a local Newton polyhedron).
inline FaceCheck check_face(const Polynomial& f, const Polytope& P, const Face& gamma,
                            const NondegOptions& opt = {}) {
  if (gamma.contains_origin) throw domain_error("check_face: face contains the origin");
  if (!gamma.bounded()) throw domain_error("check_face: unbounded face");
  if (gamma.dim == 0) {
    FaceCheck out;
    out.face_id = gamma.id;
    out.verdict = Verdict::NonDegenerateCertified;
    out.detail = "a single monomial never vanishes on the torus";
    return out;
  }
  if (gamma.dim == 1) return detail::check_edge(f, P, gamma);
  return detail::check_high_dim(f, P, gamma, opt);
}

inline Verdict worst(Verdict a, Verdict b) { return std::min(a, b); }

// Aggregate over all faces at infinity; the overall verdict is the weakest one
// present. Whatever the verdict, downstream formulas still run; reports carry
// the verdict so the hypothesis status is visible.
inline NondegStatus check_all(const Polynomial& f, const NewtonAtInfinity& N,
                              const NondegOptions& opt = {}) {
  N.require_full_dim();
  NondegStatus status;
  for (int id : faces_at_infinity(N)) {
    status.faces.push_back(check_face(f, N.P, N.P.faces[id], opt));
    status.overall = worst(status.overall, status.faces.back().verdict);
  }
  return status;
}

}  // namespace nmono

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmono {

// All geometry in this library is exact: arbitrary-precision integers for
// lattice data, rationals for hull coordinates. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// domain_error: bad input or a violated precondition.
// invariant_error: an internal consistency check failed (a bug, not bad input).
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : error {
  using error::error;
};
struct invariant_error : error {
  using error::error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int floor_rat(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int gcd(const IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}
inline bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

// v / gcd(v); rejects the zero vector
inline IVec primitive(IVec v) {
  Int g = gcd(v);
  if (g == 0) throw domain_error("primitive: zero vector");
  for (Int& x : v) x /= g;
  return v;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Rat dot(const IVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}
inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

inline IVec to_ivec(const QVec& v) {
  IVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw domain_error("to_ivec: non-integer coordinate");
    w[i] = num(v[i]);
  }
  return w;
}

inline long long to_i64(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw domain_error("integer too large for 64-bit conversion");
  return static_cast<long long>(x);
}

inline std::string str(const Int& x) { return x.str(); }
inline std::string str(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}
template <class Vec>
std::string str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += str(v[i]);
  }
  return s + ")";
}

// reduced fraction k/d representing the root of unity exp(2*pi*i*k/d)
struct RootOfUnity {
  long long k = 0;
  long long d = 1;

  static RootOfUnity reduce(long long k, long long d) {
    if (d <= 0) throw domain_error("root of unity: order must be positive");
    k %= d;
    if (k < 0) k += d;
    long long g = std::gcd(k, d);
    if (k == 0) return {0, 1};
    return {k / g, d / g};
  }
  bool is_one() const { return k == 0; }
  auto operator<=>(const RootOfUnity& o) const {
    if (d != o.d) return d <=> o.d;
    return k <=> o.k;
  }
  bool operator==(const RootOfUnity&) const = default;
  std::string to_string() const {
    if (is_one()) return "1";
    return std::to_string(k) + "/" + std::to_string(d);
  }
};

}  // namespace nmono

#pragma once

#include <nmono/polytope.hpp>

#include <cctype>
#include <map>

namespace nmono {

// exponent vector of a monomial; length = ambient dimension
using ExponentVector = std::vector<long long>;

struct Polynomial {
  int ambient_dim = 0;
  bool laurent = false;
  std::map<ExponentVector, Rat> terms;  // no zero coefficients stored

  bool is_zero() const { return terms.empty(); }

  bool has_constant_term() const {
    return terms.count(ExponentVector(ambient_dim, 0)) != 0;
  }

  std::vector<ExponentVector> support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms.size());
    for (const auto& [e, c] : terms) s.push_back(e);
    return s;
  }

  std::vector<IVec> support_int() const {
    std::vector<IVec> s;
    for (const auto& [e, c] : terms) {
      IVec v(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i];
      s.push_back(std::move(v));
    }
    return s;
  }
};

struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, int n, bool laurent)
      : s_(text), n_(n), laurent_(laurent) {}

  Polynomial run() {
    Polynomial p;
    p.ambient_dim = n_;
    p.laurent = laurent_;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = (get() == '-') ? -1 : 1;
    parse_term(p, sign);
    skip_ws();
    while (pos_ < s_.size()) {
      char c = get();
      if (c != '+' && c != '-') throw parse_error("expected '+' or '-'", pos_ - 1);
      parse_term(p, c == '-' ? -1 : 1);
      skip_ws();
    }
    if (p.terms.empty()) throw parse_error("empty polynomial after cancellation", s_.size());
    return p;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int n_;
  bool laurent_;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    skip_ws();
    if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
    return s_[pos_++];
  }

  Int parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error("expected an integer", start);
    return Int(s_.substr(start, pos_ - start));
  }

  long long parse_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      get();
      neg = true;
    }
    Int v = parse_uint();
    return to_i64(neg ? -v : v);
  }

  // var := "x" int | "x" | "y" | "z"
  int parse_var() {
    std::size_t at = pos_;
    char c = get();
    if (c == 'x') {
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        Int idx = parse_uint();
        if (idx < 1 || idx > n_)
          throw parse_error("variable index out of range (n = " + std::to_string(n_) + ")", at);
        return static_cast<int>(idx) - 1;
      }
      return 0;
    }
    if (c == 'y' || c == 'z') {
      int idx = (c == 'y') ? 1 : 2;
      if (idx >= n_)
        throw parse_error("variable index out of range (n = " + std::to_string(n_) + ")", at);
      return idx;
    }
    throw parse_error("expected a variable", at);
  }

  // factor := var ("^" int)?
  void parse_factor(ExponentVector& e) {
    std::size_t at = pos_;
    int v = parse_var();
    long long exp = 1;
    if (peek() == '^') {
      get();
      exp = parse_int();
    }
    if (exp < 0 && !laurent_)
      throw parse_error("negative exponent requires the Laurent flag", at);
    e[v] += exp;
  }

  // term := coeff ("*" factor)* | factor ("*" factor)*
  void parse_term(Polynomial& p, int sign) {
    Rat coeff = sign;
    ExponentVector e(n_, 0);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int numv = parse_uint();
      Int denv = 1;
      if (peek() == '/') {
        get();
        std::size_t at = pos_;
        denv = parse_uint();
        if (denv == 0) throw parse_error("zero denominator", at);
      }
      coeff *= Rat(numv, denv);
    } else {
      parse_factor(e);
    }
    while (peek() == '*') {
      get();
      parse_factor(e);
    }
    for (long long x : e)
      if (x < 0 && !laurent_)
        throw parse_error("negative exponent requires the Laurent flag", pos_);
    Rat& slot = p.terms[e];
    slot += coeff;
    if (slot == 0) p.terms.erase(e);
  }
};

inline std::string monomial_string(const ExponentVector& e, int n) {
  static const char* alias[3] = {"x", "y", "z"};
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += (n <= 3) ? alias[i] : ("x" + std::to_string(i + 1));
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace detail

// Grammar: poly := term (("+"|"-") term)*; term := coeff ("*" factor)* |
// factor ("*" factor)*; factor := var ("^" int)?; var := "x" int | "x"|"y"|"z";
// coeff := int ("/" int)?. Whitespace insignificant.
inline Polynomial parse_polynomial(const std::string& text, int ambient_dim, bool laurent = false) {
  if (ambient_dim < 1) throw domain_error("parse_polynomial: ambient dimension must be positive");
  return detail::PolyParser(text, ambient_dim, laurent).run();
}

// Canonical printing: graded lexicographic, highest first; reparses to the
// same term map.
inline std::string to_string(const Polynomial& p) {
  std::vector<ExponentVector> exps = p.support();
  std::sort(exps.begin(), exps.end(), [](const ExponentVector& a, const ExponentVector& b) {
    long long da = 0, db = 0;
    for (long long x : a) da += x;
    for (long long x : b) db += x;
    if (da != db) return da > db;
    return a > b;
  });
  std::string out;
  for (const ExponentVector& e : exps) {
    Rat c = p.terms.at(e);
    std::string mono = detail::monomial_string(e, p.ambient_dim);
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += str(a);
    else if (a == 1)
      out += mono;
    else
      out += str(a) + "*" + mono;
  }
  return out;
}

inline std::vector<ExponentVector> support(const Polynomial& p) { return p.support(); }

// f_gamma: the sub-polynomial of terms whose exponents lie on the face.
inline Polynomial face_part(const Polynomial& p, const Polytope& P, const Face& gamma) {
  if (P.ambient_dim != p.ambient_dim)
    throw domain_error("face_part: face does not belong to this polynomial's polytope");
  Polynomial out;
  out.ambient_dim = p.ambient_dim;
  out.laurent = p.laurent;
  for (const auto& [e, c] : p.terms) {
    QVec q(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) q[i] = Rat(e[i]);
    if (P.face_contains(gamma, q)) out.terms[e] = c;
  }
  return out;
}

}  // namespace nmono

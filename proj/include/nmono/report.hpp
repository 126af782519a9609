#pragma once

#include <nmono/jordan.hpp>
#include <nmono/local.hpp>

#include <json.hpp>

#include <sstream>

namespace nmono {

struct AnalysisOptions {
  int n = 0;
  bool laurent = false;
  bool skip_nondeg = false;
  NondegOptions nondeg;
};

// Everything the CLI prints. Report generation composes module results and
// performs no computation of its own.
struct AnalysisReport {
  std::string input_text;
  std::string canonical;
  AnalysisOptions opt;
  NewtonAtInfinity N;
  std::vector<int> atypical;
  EigenvalueSet A;
  std::optional<NondegStatus> nondeg;
  std::optional<FactoredZeta> zeta;
  std::vector<ZetaTerm> zeta_terms;
  std::vector<std::pair<RootOfUnity, long long>> multiplicities;
  std::optional<JordanReport> jordan;
  std::vector<std::string> warnings;
  bool hypothesis_failure = false;
};

inline AnalysisReport analyze(const std::string& poly_text, const AnalysisOptions& opt) {
  AnalysisReport rep;
  rep.input_text = poly_text;
  rep.opt = opt;
  Polynomial f = parse_polynomial(poly_text, opt.n, opt.laurent);
  rep.canonical = to_string(f);
  rep.N = opt.laurent ? gamma_infinity_torus(f) : gamma_infinity(f);

  if (!rep.N.full_dim) {
    rep.warnings.push_back("dim Gamma_infinity(f) = " + std::to_string(rep.N.P.dim) + " < n = " +
                           std::to_string(opt.n) +
                           "; the classification and all downstream formulas assume a "
                           "full-dimensional Newton polyhedron, so they are not computed");
    rep.hypothesis_failure = true;
    return rep;
  }

  rep.atypical = atypical_faces(rep.N);
  rep.A = atypical_eigenvalues(rep.N);

  if (!opt.skip_nondeg) {
    rep.nondeg = check_all(f, rep.N, opt.nondeg);
    if (rep.nondeg->overall == Verdict::DegenerateCertified) {
      rep.hypothesis_failure = true;
      rep.warnings.push_back(
          "f is degenerate at infinity (certified); the zeta, multiplicity and Jordan "
          "formulas below assume non-degeneracy and are reported for the combinatorial "
          "data only");
    } else if (rep.nondeg->overall != Verdict::NonDegenerateCertified) {
      rep.warnings.push_back(std::string("non-degeneracy status: ") +
                             to_string(rep.nondeg->overall) +
                             "; the formulas assume non-degeneracy at infinity");
    }
  } else {
    rep.warnings.push_back("non-degeneracy checks skipped; the formulas assume "
                           "non-degeneracy at infinity");
  }

  if (opt.laurent) {
    rep.zeta_terms = torus_zeta_contributions(rep.N);
    FactoredZeta z;
    for (const ZetaTerm& t : rep.zeta_terms) z.mul(t.d, t.e);
    rep.zeta = z;
    rep.warnings.push_back("Laurent input: the zeta function is the torus variant; the "
                           "multiplicity and Jordan tables apply to polynomial maps on "
                           "C^n and are not computed");
  } else {
    rep.zeta_terms = zeta_contributions(rep.N);
    rep.zeta = zeta_at_infinity(rep.N);
    for (long long d : multiplicity_candidate_orders(rep.N)) {
      for (long long k = 1; k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        RootOfUnity l{k, d};
        if (rep.A.contains(l)) continue;
        rep.multiplicities.emplace_back(l, multiplicity(rep.N, l));
      }
    }
    rep.jordan = jordan_table(rep.N);
    for (const JordanRow& r : rep.jordan->rows)
      if (r.coincident)
        rep.warnings.push_back("eigenvalue " + r.lambda.to_string() +
                               " has k = e_i - k on some interior edge; the two height "
                               "counts are added literally");
  }

  if (opt.n == 2 && !opt.laurent) {
    Int g = 0;
    for (const QVec& v : rep.N.P.vertices) g = gcd(g, gcd(to_ivec(v)));
    if (g >= 2)
      rep.warnings.push_back(
          "Gamma_infinity(f) = " + str(g) +
          " * P for a lattice polytope P; the n = 2 connectedness argument (which rules "
          "out decompositions f = g(h)) is inapplicable as stated");
  }
  return rep;
}

namespace detail {

inline nlohmann::ordered_json face_vertices_json(const Polytope& P, const Face& f) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int vid : f.vertex_ids) {
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    for (const Rat& x : P.vertices[vid]) v.push_back(to_i64(num(x)));
    arr.push_back(v);
  }
  return arr;
}

inline nlohmann::ordered_json polytope_json(const Polytope& P) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const QVec& v : P.vertices) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const Rat& x : v) row.push_back(to_i64(num(x)));
    verts.push_back(row);
  }
  j["vertices"] = verts;
  nlohmann::ordered_json facets = nlohmann::ordered_json::array();
  for (const Halfspace& h : P.facets) {
    nlohmann::ordered_json fj;
    nlohmann::ordered_json normal = nlohmann::ordered_json::array();
    for (const Int& x : h.normal) normal.push_back(to_i64(x));
    fj["normal"] = normal;
    fj["offset"] = str(h.offset);
    facets.push_back(fj);
  }
  j["facets"] = facets;
  return j;
}

inline nlohmann::ordered_json eigenset_json(const EigenvalueSet& A) {
  nlohmann::ordered_json j;
  j["orders"] = std::vector<long long>(A.orders.begin(), A.orders.end());
  std::vector<std::string> xs;
  for (const RootOfUnity& l : A.explicit_list()) xs.push_back(l.to_string());
  j["eigenvalues"] = xs;
  return j;
}

inline nlohmann::ordered_json nondeg_json(const Polytope& P, const NondegStatus& s) {
  nlohmann::ordered_json j;
  j["overall"] = to_string(s.overall);
  nlohmann::ordered_json faces = nlohmann::ordered_json::array();
  for (const FaceCheck& c : s.faces) {
    nlohmann::ordered_json fj;
    fj["vertices"] = face_vertices_json(P, P.faces[c.face_id]);
    fj["verdict"] = to_string(c.verdict);
    fj["detail"] = c.detail;
    if (c.trials_run > 0) fj["trials"] = c.trials_run;
    if (c.witness) {
      nlohmann::ordered_json w;
      w["prime"] = c.witness->prime;
      w["point"] = c.witness->point;
      w["trial"] = c.witness->trial;
      fj["witness"] = w;
    }
    faces.push_back(fj);
  }
  j["faces"] = faces;
  return j;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const AnalysisReport& rep) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = 1;
  ordered_json input;
  input["text"] = rep.input_text;
  input["canonical"] = rep.canonical;
  input["n"] = rep.opt.n;
  input["laurent"] = rep.opt.laurent;
  input["seed"] = rep.opt.nondeg.seed;
  input["nondeg_trials"] = rep.opt.nondeg.trials;
  j["input"] = input;

  ordered_json gj = detail::polytope_json(rep.N.P);
  gj["dim"] = rep.N.P.dim;
  gj["full_dim"] = rep.N.full_dim;
  gj["convenient"] = rep.N.convenient;
  j["gamma_infinity"] = gj;

  ordered_json at = ordered_json::array();
  for (int id : rep.atypical) {
    ordered_json f;
    f["vertices"] = detail::face_vertices_json(rep.N.P, rep.N.P.faces[id]);
    f["dim"] = rep.N.P.faces[id].dim;
    at.push_back(f);
  }
  j["atypical_faces"] = at;

  ordered_json adm = ordered_json::array();
  if (rep.N.full_dim) {
    for (int id : faces_at_infinity(rep.N)) {
      const FaceClass& c = rep.N.cls[id];
      ordered_json f;
      f["vertices"] = detail::face_vertices_json(rep.N.P, rep.N.P.faces[id]);
      f["dim"] = rep.N.P.faces[id].dim;
      f["s"] = c.s_gamma;
      f["m"] = c.m_gamma;
      f["d"] = to_i64(c.dist->d);
      f["vol"] = to_i64(*c.vol);
      f["admissible"] = c.admissible;
      adm.push_back(f);
    }
  }
  j["admissible_faces"] = adm;

  j["A_f"] = rep.N.full_dim ? detail::eigenset_json(rep.A) : nlohmann::ordered_json();

  if (rep.nondeg)
    j["nondegeneracy"] = detail::nondeg_json(rep.N.P, *rep.nondeg);
  else {
    ordered_json nd;
    nd["skipped"] = true;
    j["nondegeneracy"] = nd;
  }

  if (rep.zeta) {
    ordered_json z;
    z["variant"] = rep.opt.laurent ? "torus" : "affine";
    ordered_json factors = ordered_json::array();
    for (const auto& [d, e] : rep.zeta->factors) {
      ordered_json fe;
      fe["d"] = d;
      fe["e"] = e;
      factors.push_back(fe);
    }
    z["factors"] = factors;
    z["string"] = rep.zeta->str();
    j["zeta"] = z;
  } else {
    j["zeta"] = nullptr;
  }

  ordered_json mult = ordered_json::array();
  for (const auto& [l, m] : rep.multiplicities) {
    ordered_json row;
    row["eigenvalue"] = l.to_string();
    row["multiplicity"] = m;
    mult.push_back(row);
  }
  j["multiplicities"] = mult;

  if (rep.jordan) {
    ordered_json jj;
    ordered_json ivs = ordered_json::array();
    for (const InteriorVertex& v : rep.jordan->vertices) {
      ordered_json row;
      ordered_json q = ordered_json::array();
      for (const Int& x : v.q) q.push_back(to_i64(x));
      row["q"] = q;
      row["d"] = v.d;
      ivs.push_back(row);
    }
    jj["interior_vertices"] = ivs;
    ordered_json ies = ordered_json::array();
    for (const InteriorEdge& e : rep.jordan->edges) {
      ordered_json row;
      ordered_json ends = ordered_json::array();
      for (const IVec& p : e.ends) {
        ordered_json pt = ordered_json::array();
        for (const Int& x : p) pt.push_back(to_i64(x));
        ends.push_back(pt);
      }
      row["vertices"] = ends;
      row["e"] = e.e;
      ies.push_back(row);
    }
    jj["interior_edges"] = ies;
    ordered_json rows = ordered_json::array();
    for (const JordanRow& r : rep.jordan->rows) {
      ordered_json row;
      row["eigenvalue"] = r.lambda.to_string();
      row["size_n"] = r.blocks_size_n;
      row["size_n_minus_1"] = r.blocks_size_n_minus_1;
      if (r.coincident) row["coincident"] = true;
      rows.push_back(row);
    }
    jj["rows"] = rows;
    jj["excluded"] = detail::eigenset_json(rep.jordan->excluded);
    j["jordan"] = jj;
  } else {
    j["jordan"] = nullptr;
  }

  j["warnings"] = rep.warnings;
  return j;
}

inline std::string to_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "input: " << rep.canonical << "  (n = " << rep.opt.n
     << (rep.opt.laurent ? ", Laurent" : "") << ")\n";
  const Polytope& P = rep.N.P;
  os << "Gamma_infinity: dim " << P.dim << (rep.N.full_dim ? " (full)" : " (NOT full)")
     << ", vertices";
  for (const QVec& v : P.vertices) os << " " << str(v);
  os << "\nconvenient: " << (rep.N.convenient ? "yes" : "no") << "\n";
  if (!rep.N.full_dim) {
    for (const std::string& w : rep.warnings) os << "warning: " << w << "\n";
    return os.str();
  }
  os << "atypical faces:";
  if (rep.atypical.empty()) os << " none";
  for (int id : rep.atypical) {
    os << " {";
    bool first = true;
    for (int vid : P.faces[id].vertex_ids) {
      if (!first) os << ", ";
      os << str(P.vertices[vid]);
      first = false;
    }
    os << "}";
  }
  os << "\nfaces at infinity (vertices | dim s m d vol admissible):\n";
  for (int id : faces_at_infinity(rep.N)) {
    const FaceClass& c = rep.N.cls[id];
    os << "  {";
    bool first = true;
    for (int vid : P.faces[id].vertex_ids) {
      if (!first) os << ", ";
      os << str(P.vertices[vid]);
      first = false;
    }
    os << "} | " << P.faces[id].dim << " " << c.s_gamma << " " << c.m_gamma << " "
       << str(c.dist->d) << " " << str(*c.vol) << " " << (c.admissible ? "yes" : "no") << "\n";
  }
  os << "A_f orders: {";
  bool first = true;
  for (long long o : rep.A.orders) {
    if (!first) os << ", ";
    os << o;
    first = false;
  }
  os << "}; eigenvalues:";
  for (const RootOfUnity& l : rep.A.explicit_list()) os << " " << l.to_string();
  os << "\n";
  if (rep.nondeg) {
    os << "non-degeneracy: " << to_string(rep.nondeg->overall) << "\n";
    for (const FaceCheck& c : rep.nondeg->faces)
      if (c.verdict == Verdict::DegenerateCertified || c.verdict == Verdict::LikelyDegenerate)
        os << "  " << to_string(c.verdict) << ": " << c.detail << "\n";
  }
  if (rep.zeta)
    os << "zeta_" << (rep.opt.laurent ? "torus" : "f") << "^infinity(t) = " << rep.zeta->str()
       << "\n";
  if (!rep.multiplicities.empty()) {
    os << "multiplicities (lambda outside A_f):";
    for (const auto& [l, m] : rep.multiplicities) os << "  " << l.to_string() << " -> " << m;
    os << "\n";
  }
  if (rep.jordan) {
    os << "jordan blocks (size " << rep.jordan->n << " / size " << rep.jordan->n - 1 << "):\n";
    if (rep.jordan->rows.empty()) os << "  (no candidate eigenvalues outside A_f)\n";
    for (const JordanRow& r : rep.jordan->rows)
      os << "  " << r.lambda.to_string() << ": " << r.blocks_size_n << " / "
         << r.blocks_size_n_minus_1 << (r.coincident ? "  [k = e-k]" : "") << "\n";
  }
  for (const std::string& w : rep.warnings) os << "warning: " << w << "\n";
  return os.str();
}

// ---- local (section 6) reports ----

inline LocalScene parse_scene(const nlohmann::json& j) {
  LocalScene scene;
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw domain_error("scene: expected an object with an integer field \"n\"");
  scene.n = j["n"].get<int>();
  if (scene.n < 1) throw domain_error("scene: n must be positive");
  auto read_list = [&](const char* key, std::vector<Polynomial>& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) throw domain_error(std::string("scene: \"") + key + "\" must be an array");
    for (const auto& item : j[key]) {
      if (!item.is_string())
        throw domain_error(std::string("scene: entries of \"") + key + "\" must be strings");
      Polynomial f = parse_polynomial(item.get<std::string>(), scene.n, false);
      if (f.has_constant_term())
        throw domain_error("scene: local polynomial '" + item.get<std::string>() +
                           "' has a constant term");
      out.push_back(std::move(f));
    }
  };
  read_list("interior", scene.interior);
  read_list("boundary", scene.boundary);
  if (!scene.boundary.empty() && scene.n < 2)
    throw domain_error("scene: boundary polynomials need n >= 2 (D = {y_n = 0})");
  return scene;
}

inline nlohmann::ordered_json to_json(const LocalReport& rep) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = 1;
  j["n"] = rep.n;
  j["A_circ"] = detail::eigenset_json(rep.A_circ);
  ordered_json polys = ordered_json::array();
  for (const LocalPolyDiag& d : rep.polys) {
    ordered_json p;
    p["poly"] = d.text;
    p["kind"] = d.is_boundary ? "boundary" : "interior";
    p["convenient"] = d.convenient;
    p["nondegeneracy"] = to_string(d.overall);
    if (d.is_boundary) {
      p["slice_empty"] = d.slice_empty;
      p["slice_orders"] = d.slice_orders;
    }
    polys.push_back(p);
  }
  j["polynomials"] = polys;
  j["warnings"] = rep.warnings;
  return j;
}

inline std::string to_text(const LocalReport& rep) {
  std::ostringstream os;
  os << "local scene, n = " << rep.n << "\n";
  os << "A^o_{f,b} orders: {";
  bool first = true;
  for (long long o : rep.A_circ.orders) {
    if (!first) os << ", ";
    os << o;
    first = false;
  }
  os << "}; eigenvalues:";
  for (const RootOfUnity& l : rep.A_circ.explicit_list()) os << " " << l.to_string();
  os << "\n";
  for (const LocalPolyDiag& d : rep.polys) {
    os << "  [" << (d.is_boundary ? "boundary" : "interior") << "] " << d.text
       << ": convenient " << (d.convenient ? "yes" : "no") << ", "
       << to_string(d.overall);
    if (d.is_boundary) {
      if (d.slice_empty)
        os << ", empty slice";
      else {
        os << ", slice orders {";
        for (std::size_t i = 0; i < d.slice_orders.size(); ++i)
          os << (i ? ", " : "") << d.slice_orders[i];
        os << "}";
      }
    }
    os << "\n";
  }
  for (const std::string& w : rep.warnings) os << "note: " << w << "\n";
  return os.str();
}

}  // namespace nmono

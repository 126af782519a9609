// nmono: Newton-polyhedron invariants of the monodromy at infinity.
//
// Subcommands:
//   analyze   full report for one polynomial (atypical faces, A_f, zeta,
//             multiplicities, Jordan blocks of the two largest sizes)
//   local     A^o_{f,b} and hypothesis diagnostics for a declared scene at a
//             bifurcation point
//   selftest  built-in fixture suite
//
// Exit codes: 0 ok, 1 invalid input, 2 hypothesis failure (report still
// emitted), 3 selftest failure.

#include <nmono/selftest.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int run_analyze(const std::string& poly, const std::string& file, nmono::AnalysisOptions opt,
                bool json) {
  std::string text = poly;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open " << file << "\n";
      return 1;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    nmono::AnalysisReport rep = nmono::analyze(text, opt);
    if (json)
      std::cout << nmono::to_json(rep).dump(2) << "\n";
    else
      std::cout << nmono::to_text(rep);
    return rep.hypothesis_failure ? 2 : 0;
  } catch (const nmono::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const nmono::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_local(const std::string& scene_path, const nmono::NondegOptions& nopt, bool json) {
  std::ifstream in(scene_path);
  if (!in) {
    std::cerr << "error: cannot open " << scene_path << "\n";
    return 1;
  }
  try {
    nlohmann::json sj = nlohmann::json::parse(in);
    nmono::LocalScene scene = nmono::parse_scene(sj);
    nmono::LocalReport rep = nmono::check_local_hypotheses(scene, nopt);
    if (json)
      std::cout << nmono::to_json(rep).dump(2) << "\n";
    else
      std::cout << nmono::to_text(rep);
    return 0;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed scene file: " << e.what() << "\n";
    return 1;
  } catch (const nmono::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_selftest(const std::string& filter) {
  nmono::SelftestResult res = nmono::run_selftest(filter);
  for (const auto& [name, ok] : res.lines)
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
  std::cout << res.passed << " passed, " << res.failed << " failed\n";
  return res.failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton-polyhedron invariants of the monodromy at infinity"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze one polynomial");
  std::string poly, file;
  nmono::AnalysisOptions opt;
  bool json = false;
  auto* poly_opt = analyze->add_option("--poly", poly, "polynomial expression");
  auto* file_opt = analyze->add_option("--file", file, "file containing the polynomial");
  poly_opt->excludes(file_opt);
  analyze->add_option("--n", opt.n, "ambient dimension")->required();
  analyze->add_flag("--laurent", opt.laurent, "allow negative exponents; torus analysis");
  analyze->add_flag("--json", json, "machine-readable output");
  analyze->add_flag("--skip-nondeg", opt.skip_nondeg, "skip non-degeneracy checks");
  analyze->add_option("--nondeg-trials", opt.nondeg.trials, "modular trials per face (default 64)");
  analyze->add_option("--seed", opt.nondeg.seed, "RNG seed for the modular search");
  analyze->add_option("--primes", opt.nondeg.prime_count, "number of primes in the pool");

  auto* local = app.add_subcommand("local", "analyze a bifurcation-point scene");
  std::string scene_path;
  bool local_json = false;
  nmono::NondegOptions nopt;
  local->add_option("--scene", scene_path, "scene JSON file")->required();
  local->add_flag("--json", local_json, "machine-readable output");
  local->add_option("--nondeg-trials", nopt.trials, "modular trials per face (default 64)");
  local->add_option("--seed", nopt.seed, "RNG seed for the modular search");

  auto* selftest = app.add_subcommand("selftest", "run the built-in fixture suite");
  std::string filter;
  selftest->add_option("--filter", filter, "only fixtures whose name contains this substring");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    if (poly.empty() && file.empty()) {
      std::cerr << "error: one of --poly or --file is required\n";
      return 1;
    }
    return run_analyze(poly, file, opt, json);
  }
  if (local->parsed()) return run_local(scene_path, nopt, local_json);
  return run_selftest(filter);
}

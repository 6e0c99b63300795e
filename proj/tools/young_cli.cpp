// young-lab: command-line front end for the Young inequality workbench.
//
// Subcommands:
//   verify    check the four equality conditions for a stored (a, b) pair
//   campaign  run one of the named instance suites and report failures
//   generate  write a sample pair (plus manifest) to a directory
//   search    hunt for a counterexample to the necessity conjecture
//
// Exit codes: 0 on success, 1 on input/solver-setup errors, 2 when the
// mathematics disagrees with the claim being checked (inconsistent
// equivalence report, suite failures, or a search witness).

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "young/campaign.hpp"
#include "young/conjecture.hpp"
#include "young/generators.hpp"
#include "young/io.hpp"
#include "young/verify.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  for (const std::string& item : split_csv(text)) {
    try {
      dims.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw young::ParseError("--dims: '" + item + "' is not an integer");
    }
    if (dims.back() < 1) throw young::ParseError("--dims: dimensions must be positive");
  }
  if (dims.empty()) throw young::ParseError("--dims: empty list");
  return dims;
}

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> ps;
  for (const std::string& item : split_csv(text)) {
    try {
      ps.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw young::ParseError("--p-list: '" + item + "' is not a number");
    }
  }
  if (ps.empty()) throw young::ParseError("--p-list: empty list");
  return ps;
}

std::vector<young::NormDescriptor> parse_norm_list(const std::string& text) {
  std::vector<young::NormDescriptor> norms;
  for (const std::string& item : split_csv(text)) {
    norms.push_back(young::parse_norm(item));
  }
  if (norms.empty()) throw young::ParseError("--norms: empty list");
  return norms;
}

std::pair<young::DecayKind, double> parse_decay(const std::string& text) {
  if (text == "none") return {young::DecayKind::None, 0.0};
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string kind = text.substr(0, colon);
    double value = 0.0;
    try {
      value = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw young::ParseError("--decay: '" + text.substr(colon + 1) + "' is not a number");
    }
    if (kind == "geometric") return {young::DecayKind::Geometric, value};
    if (kind == "powerlaw") return {young::DecayKind::PowerLaw, value};
  }
  throw young::ParseError("--decay: expected none, geometric:<ratio>, or powerlaw:<exponent>, "
                          "got '" + text + "'");
}

nlohmann::json suite_to_json(const young::SuiteResult& r, const young::RunManifest& m) {
  return nlohmann::json{{"manifest", young::manifest_to_json(m)},
                        {"suite", r.suite},
                        {"trials", r.trials},
                        {"failures", r.failures},
                        {"worstResidual", r.worst_residual},
                        {"seconds", r.seconds},
                        {"failureNotes", r.failure_notes}};
}

void print_suite(const young::SuiteResult& r) {
  std::cout << "suite=" << r.suite << " trials=" << r.trials << " failures=" << r.failures
            << " worst_residual=" << r.worst_residual << " seconds=" << r.seconds << "\n";
  for (const std::string& note : r.failure_notes) {
    std::cout << "  failure: " << note << "\n";
  }
}

void print_condition(const char* label, const young::ConditionVerdict& v) {
  std::cout << "  " << label << ": residual=" << v.residual << " scale=" << v.scale
            << " -> " << (v.verdict ? "equal" : "different") << "\n";
}

int cmd_verify(const std::string& a_path, const std::string& b_path, double p,
               const std::string& norms_csv, double tol_rel, double tol_abs,
               const std::string& out_path) {
  const young::Tolerance tol{tol_rel, tol_abs};
  const young::ComplexMatrix a = young::load_matrix(a_path);
  const young::ComplexMatrix b = young::load_matrix(b_path);
  const std::vector<young::NormDescriptor> norms = parse_norm_list(norms_csv);
  const young::ConjugatePair cp(p);
  const young::EquivalenceReport report = young::check_equivalence(a, b, cp, norms, tol);

  std::cout << "equality conditions for p=" << cp.p << ", q=" << cp.q << ":\n";
  print_condition("cond1 |a|^p = |b|^q          ", report.cond1);
  print_condition("cond2 z|ab*|z* = young mean  ", report.cond2);
  for (const young::NormEqualityVerdict& nv : report.cond3) {
    std::cout << "  cond3 " << nv.norm.name() << ": |gamma|=" << nv.lhs << " |delta|=" << nv.rhs
              << " -> " << (nv.verdict ? "equal" : "different")
              << (nv.norm.strictly_increasing ? "" : " (not strictly increasing; advisory)")
              << "\n";
  }
  print_condition("cond4 gamma_k = delta_k      ", report.cond4);
  std::cout << (report.overall_consistent ? "conditions agree\n"
                                          : "CONDITIONS DISAGREE - numerical red flag\n");

  if (!out_path.empty()) {
    const young::RunManifest manifest = young::make_manifest(
        "verify",
        {{"a", a_path}, {"b", b_path}, {"p", std::to_string(p)}, {"norms", norms_csv}}, 0);
    young::save_text(out_path, young::equivalence_report_to_json(report, manifest).dump(2));
  }
  return report.overall_consistent ? 0 : 2;
}

int cmd_campaign(const std::string& suite, long trials, std::uint64_t seed,
                 const std::string& dims_csv, bool dims_given, const std::string& p_csv,
                 bool p_given, double tol_rel, double tol_abs, const std::string& out_path,
                 const std::string& csv_path) {
  const young::Tolerance tol{tol_rel, tol_abs};
  const std::vector<int> dims = parse_dims(dims_csv);
  const std::vector<double> ps = parse_p_list(p_csv);

  young::SuiteResult result;
  if (suite == "efz-inequality") {
    result = young::run_efz_suite(seed, trials > 0 ? trials : 500, dims, ps, tol);
  } else if (suite == "equality-roundtrip") {
    result = young::run_equality_suite(seed, trials > 0 ? trials : 200, dims, ps, tol);
  } else if (suite == "lemma-checks") {
    const long n = trials > 0 ? trials : 500;
    result = young::run_lemma_suite(seed, n, 2 * n, n, tol);
  } else if (suite == "norm-axioms") {
    result = young::run_norm_suite(seed, trials > 0 ? trials : 200, tol);
  } else if (suite == "conjecture-search") {
    const int dim = dims_given ? dims.front() : 4;
    const double p = p_given ? ps.front() : 2.0;
    result = young::run_conjecture_suite(seed, 200, trials > 0 ? trials : 1000, dim, p, tol);
  } else {
    throw young::UnknownSuite("campaign: unknown suite '" + suite +
                              "' (expected efz-inequality, equality-roundtrip, lemma-checks, "
                              "norm-axioms, or conjecture-search)");
  }

  print_suite(result);

  const young::RunManifest manifest = young::make_manifest(
      "campaign",
      {{"suite", suite}, {"trials", std::to_string(result.trials)}, {"dims", dims_csv},
       {"p-list", p_csv}}, seed);
  if (!out_path.empty()) {
    young::save_text(out_path, suite_to_json(result, manifest).dump(2));
  }
  if (!csv_path.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"suite", "trials", "failures", "worstResidual", "seconds"});
    rows.push_back({result.suite, std::to_string(result.trials),
                    std::to_string(result.failures), std::to_string(result.worst_residual),
                    std::to_string(result.seconds)});
    young::save_text(csv_path, young::to_csv(rows));
  }
  return result.passed() ? 0 : 2;
}

int cmd_generate(const std::string& family, int dim, double p, std::uint64_t seed,
                 const std::string& decay_text, const std::string& out_dir) {
  const auto [decay, decay_parameter] = parse_decay(decay_text);

  young::ComplexMatrix a, b;
  double effective_p = p;
  if (family == "random") {
    const young::GeneratorConfig cfg(seed, dim, p, decay, decay_parameter);
    std::tie(a, b) = young::random_pair(cfg);
  } else if (family == "equality") {
    const young::GeneratorConfig cfg(seed, dim, p, decay, decay_parameter);
    std::tie(a, b) = young::equality_family(cfg);
  } else if (family == "opnorm-counterexample") {
    const young::CounterexampleInstance instance = young::opnorm_counterexample(dim);
    a = instance.a;
    b = instance.b;
    effective_p = instance.p;
  } else {
    throw young::ParseError("generate: unknown family '" + family +
                            "' (expected random, equality, or opnorm-counterexample)");
  }

  std::filesystem::create_directories(out_dir);
  young::save_matrix(out_dir + "/a.json", a);
  young::save_matrix(out_dir + "/b.json", b);
  const young::RunManifest manifest = young::make_manifest(
      "generate",
      {{"family", family}, {"dim", std::to_string(dim)}, {"p", std::to_string(effective_p)},
       {"decay", decay_text}}, seed);
  young::save_text(out_dir + "/manifest.json", young::manifest_to_json(manifest).dump(2));
  std::cout << "wrote " << out_dir << "/a.json, b.json, manifest.json (p=" << effective_p
            << ")\n";
  return 0;
}

int cmd_search(long trials, std::uint64_t seed, int dim, double p,
               const std::string& decay_text, const std::string& out_path) {
  const auto [decay, decay_parameter] = parse_decay(decay_text);
  const young::GeneratorConfig cfg(seed, dim, p, decay, decay_parameter);
  const young::SearchResult result = young::search_necessity_counterexample(cfg, trials);

  std::cout << "search: trials=" << result.trials << " candidates=" << result.candidates
            << " best_objective=" << result.best_objective << "\n";
  if (result.has_witness) {
    std::cout << "WITNESS FOUND: condition residual " << result.witness_violation
              << " at equality residual " << result.witness_equality_residual << "\n"
              << "This would contradict the necessity conjecture; save the instance and\n"
              << "re-check with tightened tolerances before believing it.\n";
  } else {
    std::cout << "no witness: every equality point also satisfied the three conditions\n";
  }

  if (!out_path.empty()) {
    const young::RunManifest manifest = young::make_manifest(
        "search",
        {{"trials", std::to_string(trials)}, {"dim", std::to_string(dim)},
         {"p", std::to_string(p)}, {"decay", decay_text}}, seed);
    young::save_text(out_path, young::search_result_to_json(result, manifest).dump(2));
  }
  return result.has_witness ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for Young's inequality on matrices"};
  app.require_subcommand(1);

  // verify
  std::string a_path, b_path, out_path;
  std::string norms_csv = "op,schatten:1,schatten:2,dyadic";
  double p = 2.0, tol_rel = 1e-9, tol_abs = 1e-12;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the equality conditions for a stored matrix pair");
  verify->add_option("a", a_path, "Path to the left matrix (JSON)")->required();
  verify->add_option("b", b_path, "Path to the right matrix (JSON)")->required();
  verify->add_option("--p", p, "Young exponent p > 1 (q is implied)");
  verify->add_option("--norms", norms_csv,
                     "Comma list of norms: op, schatten:<p>, kyfan:<k>, dyadic");
  verify->add_option("--tol-rel", tol_rel, "Relative tolerance for decompositions");
  verify->add_option("--tol-abs", tol_abs, "Absolute tolerance for decompositions");
  verify->add_option("--out", out_path, "Write the full report as JSON");

  // campaign
  std::string suite, dims_csv = "2,3,4,5,6,7,8", p_csv = "1.5,2,3", csv_path;
  long trials = 0;
  std::uint64_t seed = 1;
  CLI::App* campaign = app.add_subcommand("campaign", "Run a named instance suite");
  campaign->add_option("--suite", suite,
                       "efz-inequality | equality-roundtrip | lemma-checks | norm-axioms | "
                       "conjecture-search")
      ->required();
  campaign->add_option("--trials", trials, "Trial count (0 picks the suite default)");
  campaign->add_option("--seed", seed, "Base seed; trial t uses seed+t");
  campaign->add_option("--dims", dims_csv, "Comma list of dimensions to cycle through");
  campaign->add_option("--p-list", p_csv, "Comma list of Young exponents to cycle through");
  campaign->add_option("--tol-rel", tol_rel, "Relative tolerance for decompositions");
  campaign->add_option("--tol-abs", tol_abs, "Absolute tolerance for decompositions");
  campaign->add_option("--out", out_path, "Write the suite summary as JSON");
  campaign->add_option("--csv", csv_path, "Write the suite summary as CSV");

  // generate
  std::string family = "random", decay_text = "none", out_dir;
  int dim = 4;
  CLI::App* generate = app.add_subcommand("generate", "Write a sample pair to a directory");
  generate->add_option("--family", family, "random | equality | opnorm-counterexample");
  generate->add_option("--dim", dim, "Matrix dimension");
  generate->add_option("--p", p, "Young exponent p > 1");
  generate->add_option("--seed", seed, "Generator seed");
  generate->add_option("--decay", decay_text,
                       "Singular-value profile: none, geometric:<ratio>, powerlaw:<exponent>");
  generate->add_option("--out-dir", out_dir, "Directory for a.json, b.json, manifest.json")
      ->required();

  // search
  CLI::App* search = app.add_subcommand(
      "search", "Coordinate-descent hunt for a necessity counterexample");
  search->add_option("--trials", trials, "Number of descent restarts (default 1000)");
  search->add_option("--seed", seed, "Base seed for the restarts");
  search->add_option("--dim", dim, "Matrix dimension");
  search->add_option("--p", p, "Young exponent p > 1");
  search->add_option("--decay", decay_text, "Profile for the starting b draws");
  search->add_option("--out", out_path, "Write the search summary as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(a_path, b_path, p, norms_csv, tol_rel, tol_abs, out_path);
    }
    if (campaign->parsed()) {
      return cmd_campaign(suite, trials, seed, dims_csv, campaign->count("--dims") > 0, p_csv,
                          campaign->count("--p-list") > 0, tol_rel, tol_abs, out_path,
                          csv_path);
    }
    if (generate->parsed()) {
      return cmd_generate(family, dim, p, seed, decay_text, out_dir);
    }
    if (search->parsed()) {
      return cmd_search(trials > 0 ? trials : 1000, seed, dim, p, decay_text, out_path);
    }
  } catch (const young::NoConvergence& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 2;
  } catch (const young::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

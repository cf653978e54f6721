#include "wakimoto/cli.hpp"

#include "wakimoto/lemma_catalog.hpp"
#include "wakimoto/report.hpp"
#include "wakimoto/verifier.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

namespace wakimoto {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_lambda(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<LieParams> resolve_grid(const RunConfig& cfg) {
  if (cfg.max_mode < 1) throw ConfigError("max-mode must be at least 1");
  if (cfg.max_degree < 1) throw ConfigError("max-degree must be at least 1");
  if (cfg.num_vectors < 1) throw ConfigError("num-vectors must be at least 1");
  static const char* suites[] = {"relations", "lemmas", "borel", "characters", "all"};
  if (std::find(std::begin(suites), std::end(suites), cfg.suite) == std::end(suites))
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  if (cfg.output != "json" && cfg.output != "text")
    throw ConfigError("output must be json or text");
  if (cfg.grid) return default_grid(cfg.seed);

  if (!cfg.n || !cfg.r || cfg.gamma_sq.empty() || cfg.lambda.empty())
    throw ConfigError("--n, --r, --gamma-sq and --lambda are required without --grid");
  if (*cfg.n < 1) throw ConfigError("n must be a positive integer");
  if (*cfg.r < 0 || *cfg.r > *cfg.n) throw ConfigError("r must satisfy 0 ≤ r ≤ n");
  try {
    Rational g = parse_rational(cfg.gamma_sq);
    auto lam = parse_lambda(cfg.lambda);
    if (static_cast<int>(lam.size()) != *cfg.n)
      throw ConfigError("lambda must have exactly n comma-separated entries");
    return {LieParams(*cfg.n, *cfg.r, g, std::move(lam))};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

RunDocument run_point(const RunConfig& cfg, const LieParams& p) {
  RunDocument doc{p, cfg.suite, {}, {}};
  if (p.is_level_zero())
    doc.warnings.push_back("gamma_sq = r+1 gives level zero (n=" + std::to_string(p.n()) +
                           ", r=" + std::to_string(p.r()) + ")");

  const bool all = cfg.suite == "all";
  auto spec = [&](const std::string& id) {
    CheckSpec s{id, {p}};
    s.max_mode = cfg.max_mode;
    s.triple_mode = std::max(1, cfg.max_mode - 1);
    s.num_vectors = cfg.num_vectors;
    s.max_degree = cfg.max_degree;
    s.seed = cfg.seed;
    return s;
  };
  if (all || cfg.suite == "relations")
    for (const auto& id : relation_ids())
      for (auto& r : check_relation(spec(id))) doc.checks.push_back(std::move(r));
  if (all || cfg.suite == "lemmas")
    for (const auto& id : lemma_ids())
      for (auto& r : check_lemma(spec(id))) doc.checks.push_back(std::move(r));
  if (all || cfg.suite == "borel") doc.checks.push_back(check_highest_weight(p, cfg.max_mode + 1));
  if (all || cfg.suite == "characters")
    doc.checks.push_back(
        check_character(p, {-(cfg.max_mode + 1), cfg.max_mode + 1}, cfg.max_degree));
  return doc;
}

}  // namespace

int run_suite(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<LieParams> grid;
  try {
    grid = resolve_grid(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<RunDocument> docs;
  for (const auto& p : grid) docs.push_back(run_point(cfg, p));

  bool authoritative_fail = false;
  bool diagnostic_fail = false;
  for (const auto& d : docs) {
    for (const auto& w : d.warnings) err << "warning: " << w << "\n";
    for (const auto& c : d.checks)
      if (c.verdict == Verdict::Fail) (c.authoritative ? authoritative_fail : diagnostic_fail) = true;
  }

  out << (cfg.output == "json" ? render_json(docs, cfg.grid) : render_text(docs));
  if (authoritative_fail) return kExitFail;
  if (diagnostic_fail) return kExitDiagnostic;
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact verification of intermediate Wakimoto modules of affine sl(n+1)",
               "wakimoto-verify"};
  int n = 0, r = 0;
  auto* n_opt = app.add_option("--n", n, "rank n >= 1");
  auto* r_opt = app.add_option("--r", r, "split point, 0 <= r <= n");
  app.add_option("--gamma-sq", cfg.gamma_sq, "gamma^2 as p/q or integer");
  app.add_option("--lambda", cfg.lambda, "comma-separated rationals lambda_1..lambda_n");
  app.add_option("--max-mode", cfg.max_mode, "mode window [-M, M]")->capture_default_str();
  app.add_option("--max-degree", cfg.max_degree, "test vector degree bound")
      ->capture_default_str();
  app.add_option("--num-vectors", cfg.num_vectors, "test vectors per point")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--suite", cfg.suite, "relations|lemmas|borel|characters|all")
      ->capture_default_str();
  app.add_flag("--grid", cfg.grid, "run the built-in parameter grid");
  app.add_option("--output", cfg.output, "json|text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  if (n_opt->count()) cfg.n = n;
  if (r_opt->count()) cfg.r = r;
  int status = run_suite(cfg, out, err);
  if (status == kExitUsage) err << app.help();
  return status;
}

}  // namespace wakimoto

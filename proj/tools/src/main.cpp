#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fxc/error.hpp"
#include "fxc/mc_arfima.hpp"
#include "fxc/scale_grid.hpp"
#include "fxc/serialize.hpp"
#include "manifest.hpp"

namespace {

using nlohmann::json;
using fxc::cli::Manifest;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;

constexpr std::uint64_t kBenchmarkSeed = 20190312;

json column_json(const std::string& text) {
  const bool numeric = !text.empty() && std::all_of(text.begin(), text.end(),
                                                    [](unsigned char c) { return std::isdigit(c); });
  if (numeric) return std::stoull(text);
  return text;
}

struct PairOptions {
  std::string x_path;
  std::string y_path;
  std::string column = "0";
  std::optional<std::string> x_column;
  std::optional<std::string> y_column;
  std::optional<std::string> time_column;
  std::string returns = "log";
};

struct GridOptions {
  double theta = 0.5;
  std::vector<double> qs{2.0, 4.0};
  std::string scales{fxc::kDefaultScaleGrid};
};

struct Common {
  std::optional<std::uint64_t> seed;
  std::string format = "both";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Master seed (default: FRACTAL_XCORR_SEED, then built-in)");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json", "both"}));
}

void add_input_options(CLI::App* app, PairOptions& p) {
  app->add_option("--column", p.column, "Value column (header name or 0-based index) for every input");
  app->add_option("--time-col", p.time_column, "Timestamp column; both inputs must share timestamps");
  app->add_option("--returns", p.returns, "log: inputs are prices; raw: inputs are already returns")
      ->check(CLI::IsMember({"log", "raw"}));
}

void add_pair_options(CLI::App* app, PairOptions& p) {
  app->add_option("x", p.x_path, "First series (hedge asset for portfolio)")->required()->check(CLI::ExistingFile);
  app->add_option("y", p.y_path, "Second series")->required()->check(CLI::ExistingFile);
  add_input_options(app, p);
  app->add_option("--x-column", p.x_column, "Value column of x, overriding --column");
  app->add_option("--y-column", p.y_column, "Value column of y, overriding --column");
}

void add_grid_options(CLI::App* app, GridOptions& g) {
  app->add_option("--theta", g.theta, "Moving-average window position in [0, 1]")->check(CLI::Range(0.0, 1.0));
  app->add_option("--q", g.qs, "Fluctuation order, repeatable")->take_all();
  app->add_option("--scales", g.scales, "Scale grid: log:LO:HI:COUNT or a comma list");
}

void put_input_config(json& cfg, const PairOptions& p) {
  cfg["returns"] = p.returns;
  cfg["time_column"] = p.time_column ? column_json(*p.time_column) : json(nullptr);
}

void put_grid_config(json& cfg, const GridOptions& g) {
  cfg["theta"] = g.theta;
  cfg["qs"] = g.qs;
  cfg["scales"] = fxc::parse_scale_grid(g.scales);
}

Manifest base_manifest(const std::string& cmd, const Common& c, std::uint64_t default_seed) {
  Manifest m;
  m.subcommand = cmd;
  m.tool_version = FXC_VERSION;
  m.master_seed = fxc::cli::resolve_seed(c.seed, default_seed);
  m.config["format"] = c.format;
  return m;
}

void add_pair_inputs(Manifest& m, const PairOptions& p) {
  m.add_input("x", p.x_path);
  m.inputs.back()["column"] = column_json(p.x_column.value_or(p.column));
  m.add_input("y", p.y_path);
  m.inputs.back()["column"] = column_json(p.y_column.value_or(p.column));
}

int run(int argc, char** argv) {
  CLI::App app{"Scale- and order-dependent cross-correlation analysis of paired time series"};
  app.set_version_flag("--version", std::string(FXC_VERSION));
  app.require_subcommand(0, 1);
  app.fallthrough();

  fxc::cli::RunContext ctx;
  ctx.log = &std::cerr;
  std::string out_dir = ".";
  std::optional<std::string> from_manifest;
  app.add_option("--out-dir", out_dir, "Directory for result files");
  app.add_option("--threads", ctx.threads, "Worker threads, 0 = all cores");
  app.add_option("--from-manifest", from_manifest, "Re-run the configuration recorded in a manifest.json")
      ->check(CLI::ExistingFile);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "rho(s) profiles for every order q");
  PairOptions an_pair;
  GridOptions an_grid;
  Common an_common;
  std::string an_method = "q-DMCA";
  add_pair_options(analyze, an_pair);
  add_grid_options(analyze, an_grid);
  add_common(analyze, an_common);
  analyze->add_option("--method", an_method, "q-DMCA, q-DCCA or DMCA");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Generate a mixed-correlated ARFIMA pair (x.csv, y.csv)");
  Common sim_common;
  std::optional<std::string> sim_spec_path;
  std::optional<double> d1, d2, d3, d4, cross_corr;
  std::optional<std::size_t> length, truncation;
  std::vector<double> weights, sds;
  add_common(simulate, sim_common);
  simulate->add_option("--spec", sim_spec_path, "JSON process specification; flags override it")
      ->check(CLI::ExistingFile);
  simulate->add_option("--d1", d1);
  simulate->add_option("--d2", d2);
  simulate->add_option("--d3", d3);
  simulate->add_option("--d4", d4);
  simulate->add_option("--weights", weights, "Mixing weights alpha beta gamma delta")->expected(4);
  simulate->add_option("--sd", sds, "Innovation standard deviations")->expected(4);
  simulate->add_option("--cross-corr", cross_corr, "Correlation of innovations 2 and 3");
  simulate->add_option("--length", length, "Output length N");
  simulate->add_option("--truncation", truncation, "MA truncation lag n_max");

  // benchmark
  auto* benchmark = app.add_subcommand("benchmark", "Monte Carlo bias/SD/MSE tables of both estimators");
  Common bm_common;
  fxc::BenchmarkConfig bm;
  std::vector<std::size_t> stability;
  add_common(benchmark, bm_common);
  benchmark->add_option("--reps", bm.replications, "Replications per cell");
  benchmark->add_option("--lengths", bm.lengths, "Sample lengths")->take_all();
  benchmark->add_option("--corrs", bm.cross_corrs, "Innovation correlations")->take_all();
  benchmark->add_option("--q", bm.qs, "Fluctuation orders")->take_all();
  benchmark->add_option("--n-min", bm.dcca_n_min, "DCCA lower fit bounds")->take_all();
  benchmark->add_option("--s-max", bm.dmca_s_max, "DMCA upper fit bounds")->take_all();
  benchmark->add_option("--theta", bm.theta)->check(CLI::Range(0.0, 1.0));
  benchmark->add_option("--truncation", bm.truncation);
  benchmark->add_option("--fit-points", bm.fit_points, "Scales per fit range");
  benchmark->add_option("--stability", stability, "Also sweep these lengths at the strongest correlation")
      ->take_all();

  // test
  auto* test = app.add_subcommand("test", "IAAFT surrogate significance test and hedge classification");
  PairOptions ts_pair;
  GridOptions ts_grid;
  Common ts_common;
  std::size_t n_surrogates = 1000;
  double alpha = 0.05;
  fxc::IaaftConfig iaaft;
  add_pair_options(test, ts_pair);
  add_grid_options(test, ts_grid);
  add_common(test, ts_common);
  test->add_option("--surrogates", n_surrogates, "Surrogate pairs")->check(CLI::Range(fxc::kMinSurrogates, std::size_t{1} << 24));
  test->add_option("--alpha", alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  test->add_option("--max-iter", iaaft.max_iterations, "IAAFT iteration cap");
  test->add_option("--tol", iaaft.convergence_tol, "IAAFT relative convergence tolerance");

  // portfolio
  auto* portfolio = app.add_subcommand("portfolio", "Minimum-variance weights and hedge ratios per scale");
  PairOptions pf_pair;
  GridOptions pf_grid;
  Common pf_common;
  add_pair_options(portfolio, pf_pair);
  add_grid_options(portfolio, pf_grid);
  add_common(portfolio, pf_common);

  // describe
  auto* describe = app.add_subcommand("describe", "Descriptive statistics of return series");
  PairOptions ds_inputs;
  std::vector<std::string> ds_files;
  Common ds_common;
  describe->add_option("files", ds_files, "Input files")->required()->check(CLI::ExistingFile);
  add_input_options(describe, ds_inputs);
  add_common(describe, ds_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  ctx.out_dir = out_dir;

  if (from_manifest) {
    if (!app.get_subcommands().empty()) {
      std::cerr << "error: --from-manifest cannot be combined with a subcommand\n";
      return kExitInvalid;
    }
    const auto m = fxc::cli::load_manifest(*from_manifest);
    m.verify_inputs();
    if (m.tool_version != FXC_VERSION) {
      std::cerr << "warning: manifest written by version " << m.tool_version << ", running "
                << FXC_VERSION << "\n";
    }
    fxc::cli::execute(m, ctx);
    return kExitOk;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitInvalid;
  }

  Manifest m;
  if (analyze->parsed()) {
    m = base_manifest("analyze", an_common, 0);
    put_input_config(m.config, an_pair);
    put_grid_config(m.config, an_grid);
    m.config["method"] = std::string(fxc::to_string(fxc::parse_method(an_method)));
    add_pair_inputs(m, an_pair);
  } else if (simulate->parsed()) {
    fxc::McArfimaSpec spec;
    if (sim_spec_path) {
      std::ifstream in(*sim_spec_path);
      try {
        spec = json::parse(in).get<fxc::McArfimaSpec>();
      } catch (const json::exception& e) {
        throw fxc::InvalidInput("invalid spec file '" + *sim_spec_path + "': " + e.what());
      }
    }
    if (d1) spec.d1 = *d1;
    if (d2) spec.d2 = *d2;
    if (d3) spec.d3 = *d3;
    if (d4) spec.d4 = *d4;
    if (!weights.empty()) {
      spec.alpha = weights[0];
      spec.beta = weights[1];
      spec.gamma = weights[2];
      spec.delta = weights[3];
    }
    if (!sds.empty()) std::copy(sds.begin(), sds.end(), spec.innovation_sd.begin());
    if (cross_corr) spec.cross_corr = *cross_corr;
    if (length) spec.length = *length;
    if (truncation) spec.truncation = *truncation;
    m = base_manifest("simulate", sim_common, spec.seed);
    spec.seed = m.master_seed;
    spec.validate();
    m.config["spec"] = spec;
  } else if (benchmark->parsed()) {
    m = base_manifest("benchmark", bm_common, kBenchmarkSeed);
    bm.master_seed = m.master_seed;
    bm.validate();
    m.config["lengths"] = bm.lengths;
    m.config["cross_corrs"] = bm.cross_corrs;
    m.config["qs"] = bm.qs;
    m.config["replications"] = bm.replications;
    m.config["n_min"] = bm.dcca_n_min;
    m.config["s_max"] = bm.dmca_s_max;
    m.config["theta"] = bm.theta;
    m.config["truncation"] = bm.truncation;
    m.config["fit_points"] = bm.fit_points;
    m.config["stability_lengths"] = stability;
  } else if (test->parsed()) {
    m = base_manifest("test", ts_common, 0);
    put_input_config(m.config, ts_pair);
    put_grid_config(m.config, ts_grid);
    iaaft.validate();
    m.config["n_surrogates"] = n_surrogates;
    m.config["alpha"] = alpha;
    m.config["max_iterations"] = iaaft.max_iterations;
    m.config["convergence_tol"] = iaaft.convergence_tol;
    add_pair_inputs(m, ts_pair);
  } else if (portfolio->parsed()) {
    m = base_manifest("portfolio", pf_common, 0);
    put_input_config(m.config, pf_pair);
    put_grid_config(m.config, pf_grid);
    add_pair_inputs(m, pf_pair);
  } else if (describe->parsed()) {
    m = base_manifest("describe", ds_common, 0);
    put_input_config(m.config, ds_inputs);
    for (const auto& f : ds_files) {
      m.add_input("series", f);
      m.inputs.back()["column"] = column_json(ds_inputs.column);
    }
  }
  fxc::cli::execute(m, ctx);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fxc::DegenerateFluctuation& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const fxc::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

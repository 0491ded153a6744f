#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fxc/error.hpp"
#include "fxc/fluctuation.hpp"
#include "fxc/harness.hpp"
#include "fxc/mc_arfima.hpp"
#include "fxc/portfolio.hpp"
#include "fxc/serialize.hpp"
#include "fxc/series.hpp"
#include "fxc/surrogate.hpp"

namespace fxc::cli {

namespace {

using nlohmann::json;

ColumnRef column_from_json(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  return j.get<std::string>();
}

std::optional<ColumnRef> optional_column(const json& cfg, const char* key) {
  if (!cfg.contains(key) || cfg.at(key).is_null()) return std::nullopt;
  return column_from_json(cfg.at(key));
}

// Loads one input, converting prices to log returns unless returns == "raw".
TimeSeries load_input(const json& input, const json& cfg) {
  const auto path = input.at("path").get<std::string>();
  auto series = load_csv(path, column_from_json(input.at("column")), optional_column(cfg, "time_column"));
  series = series.with_label(std::filesystem::path(path).stem().string());
  if (cfg.at("returns").get<std::string>() == "log") series = log_returns(series);
  return series;
}

const json& input_with_role(const Manifest& m, const std::string& role) {
  for (const auto& in : m.inputs) {
    if (in.at("role") == role) return in;
  }
  throw InvalidInput("manifest has no input with role '" + role + "'");
}

AlignedPair load_pair(const Manifest& m) {
  return AlignedPair(load_input(input_with_role(m, "x"), m.config),
                     load_input(input_with_role(m, "y"), m.config));
}

std::string pair_label(const AlignedPair& pair) { return pair.x().label() + "/" + pair.y().label(); }

std::string q_tag(double q) { return format_double(q); }

class Writer {
 public:
  Writer(const Manifest& m, const RunContext& ctx)
      : dir_(ctx.out_dir), digest_(m.digest()), version_(m.tool_version) {
    const auto format = m.config.value("format", std::string("both"));
    csv_ = format != "json";
    json_ = format != "csv";
    std::filesystem::create_directories(dir_);
    write_raw("manifest.json", m.text());
  }

  [[nodiscard]] bool csv() const noexcept { return csv_; }
  [[nodiscard]] bool json_enabled() const noexcept { return json_; }

  void write_csv(const std::string& name, const std::string& body) const {
    if (!csv_) return;
    write_raw(name, "# fractal-xcorr " + version_ + " manifest sha256:" + digest_ + "\n" + body);
  }

  void write_json(const std::string& name, json results) const {
    if (!json_) return;
    const json doc = {{"tool_version", version_}, {"manifest_sha256", digest_}, {"results", std::move(results)}};
    write_raw(name, doc.dump(2) + "\n");
  }

 private:
  void write_raw(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("failed to write '" + path.string() + "'");
  }

  std::filesystem::path dir_;
  std::string digest_;
  std::string version_;
  bool csv_ = true;
  bool json_ = true;
};

void run_analyze(const Manifest& m, const RunContext& ctx) {
  const auto& cfg = m.config;
  const auto pair = load_pair(m);
  const auto scales = cfg.at("scales").get<std::vector<std::size_t>>();
  const auto qs = cfg.at("qs").get<std::vector<double>>();
  const auto method = parse_method(cfg.at("method").get<std::string>());
  const double theta = cfg.at("theta").get<double>();
  for (double q : qs) DetrendConfig{theta, scales, q}.validate(pair.size());

  const auto profiles = correlation_profiles(pair, theta, scales, qs, method);
  const Writer out(m, ctx);
  std::ostringstream csv;
  write_profiles_csv(csv, profiles);
  out.write_csv("profiles.csv", csv.str());
  out.write_json("profiles.json", profiles);
}

void run_simulate(const Manifest& m, const RunContext& ctx) {
  auto spec = m.config.at("spec").get<McArfimaSpec>();
  spec.seed = m.master_seed;
  const auto sample = generate(spec);
  const Writer out(m, ctx);
  // The series files are the product of this command, so they are always written.
  for (const auto* series : {&sample.x, &sample.y}) {
    std::ostringstream csv;
    write_series_csv(csv, std::span<const TimeSeries>(series, 1));
    const auto name = series->label() + ".csv";
    if (out.csv()) {
      out.write_csv(name, csv.str());
    } else {
      json values = json::array();
      for (double v : series->values()) values.push_back(v);
      out.write_json(series->label() + ".json", values);
    }
  }
}

void run_benchmark_cmd(const Manifest& m, const RunContext& ctx) {
  const auto& cfg = m.config;
  BenchmarkConfig bc;
  bc.lengths = cfg.at("lengths").get<std::vector<std::size_t>>();
  bc.cross_corrs = cfg.at("cross_corrs").get<std::vector<double>>();
  bc.qs = cfg.at("qs").get<std::vector<double>>();
  bc.replications = cfg.at("replications").get<std::size_t>();
  bc.dcca_n_min = cfg.at("n_min").get<std::vector<std::size_t>>();
  bc.dmca_s_max = cfg.at("s_max").get<std::vector<std::size_t>>();
  bc.theta = cfg.at("theta").get<double>();
  bc.truncation = cfg.at("truncation").get<std::size_t>();
  bc.fit_points = cfg.at("fit_points").get<std::size_t>();
  bc.master_seed = m.master_seed;
  bc.threads = ctx.threads;
  bc.validate();
  const auto stability = cfg.at("stability_lengths").get<std::vector<std::size_t>>();

  ProgressFn progress;
  if (ctx.log) progress = [log = ctx.log](const std::string& msg) { *log << msg << '\n' << std::flush; };

  const auto reports = run_benchmark(bc, progress);
  const Writer out(m, ctx);
  for (const auto method : {Method::q_dcca, Method::q_dmca}) {
    for (double q : bc.qs) {
      std::ostringstream csv;
      write_benchmark_table_csv(csv, reports, method, q);
      const auto name = std::string(method == Method::q_dcca ? "dcca" : "dmca");
      out.write_csv("benchmark_" + name + "_q" + q_tag(q) + ".csv", csv.str());
    }
  }
  out.write_json("benchmark.json", reports);

  if (!stability.empty()) {
    const auto points = stability_sweep(stability, bc, progress);
    std::ostringstream csv;
    write_stability_csv(csv, points);
    out.write_csv("stability.csv", csv.str());
    out.write_json("stability.json", points);
  }
}

void run_test(const Manifest& m, const RunContext& ctx) {
  const auto& cfg = m.config;
  const auto pair = load_pair(m);
  SurrogateTestConfig sc;
  sc.theta = cfg.at("theta").get<double>();
  sc.scales = cfg.at("scales").get<std::vector<std::size_t>>();
  sc.qs = cfg.at("qs").get<std::vector<double>>();
  sc.n_surrogates = cfg.at("n_surrogates").get<std::size_t>();
  sc.alpha = cfg.at("alpha").get<double>();
  sc.iaaft.max_iterations = cfg.at("max_iterations").get<std::size_t>();
  sc.iaaft.convergence_tol = cfg.at("convergence_tol").get<double>();
  sc.iaaft.seed = m.master_seed;
  sc.threads = ctx.threads;

  const auto reports = surrogate_test(pair, sc);
  const Writer out(m, ctx);
  for (double q : sc.qs) {
    std::ostringstream csv;
    write_surrogate_table_csv(csv, reports, q, pair_label(pair));
    out.write_csv("surrogate_q" + q_tag(q) + ".csv", csv.str());
  }
  out.write_json("surrogate.json", reports);
}

void run_portfolio(const Manifest& m, const RunContext& ctx) {
  const auto& cfg = m.config;
  const auto pair = load_pair(m);
  DetrendConfig dc;
  dc.theta = cfg.at("theta").get<double>();
  dc.scale_grid = cfg.at("scales").get<std::vector<std::size_t>>();
  const auto qs = cfg.at("qs").get<std::vector<double>>();

  const auto metrics = portfolio_scan(pair, dc, qs);
  const Writer out(m, ctx);
  for (double q : qs) {
    std::ostringstream csv;
    write_portfolio_table_csv(csv, metrics, q, pair_label(pair));
    out.write_csv("portfolio_q" + q_tag(q) + ".csv", csv.str());
  }
  out.write_json("portfolio.json", metrics);
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

void run_describe(const Manifest& m, const RunContext& ctx) {
  std::ostringstream csv;
  csv << "series,count,min,max,mean,std_dev,skewness,kurtosis,jarque_bera,jarque_bera_p\n";
  json records = json::array();
  for (const auto& input : m.inputs) {
    const auto series = load_input(input, m.config);
    const auto stats = describe(series);
    csv << series.label() << ',' << stats.count << ',' << format_double(stats.min) << ','
        << format_double(stats.max) << ',' << format_double(stats.mean) << ','
        << format_double(stats.std_dev) << ',' << optional_cell(stats.skewness) << ','
        << optional_cell(stats.kurtosis) << ',' << optional_cell(stats.jarque_bera_statistic) << ','
        << optional_cell(stats.jarque_bera_p_value) << '\n';
    json j = stats;
    j["series"] = series.label();
    records.push_back(std::move(j));
  }
  const Writer out(m, ctx);
  out.write_csv("describe.csv", csv.str());
  out.write_json("describe.json", records);
}

}  // namespace

void execute(const Manifest& manifest, const RunContext& ctx) {
  try {
    const auto& cmd = manifest.subcommand;
    if (cmd == "analyze") return run_analyze(manifest, ctx);
    if (cmd == "simulate") return run_simulate(manifest, ctx);
    if (cmd == "benchmark") return run_benchmark_cmd(manifest, ctx);
    if (cmd == "test") return run_test(manifest, ctx);
    if (cmd == "portfolio") return run_portfolio(manifest, ctx);
    if (cmd == "describe") return run_describe(manifest, ctx);
    throw InvalidInput("unknown subcommand '" + cmd + "' in manifest");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("invalid configuration: ") + e.what());
  }
}

}  // namespace fxc::cli

#include "chartlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "chartlab/errors.hpp"

namespace chartlab {

namespace fs = std::filesystem;
using nlohmann::json;

PriceSeries load_input(const InputSpec& input) {
  if (input.csv.has_value() == input.synthetic.has_value())
    throw ParameterError("exactly one of a CSV file or a synthetic spec is required");
  return input.csv ? load_csv(*input.csv) : generate(*input.synthetic);
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

}  // namespace

json RunManifest::to_json() const {
  return json{{"command", command},
              {"input_fingerprint", input_fingerprint},
              {"config", config},
              {"seed", seed},
              {"prng", prng},
              {"version", version},
              {"timestamp", timestamp},
              {"outputs", outputs}};
}

std::string default_out_dir(const std::string& requested) {
  if (!requested.empty()) return requested;
  if (const char* env = std::getenv("CHARTLAB_OUT_DIR"); env && *env) return env;
  return ".";
}

void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + tmp.string() + " for writing");
    file << content;
    if (!file) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("rename " + tmp.string() + " -> " + path.string() +
                        " failed: " + ec.message());
}

std::string serialize_hurst_fit(const HurstEstimate& estimate) {
  std::ostringstream out;
  out << "n,sigma\n";
  for (const auto& [n, sigma] : estimate.points)
    out << n << ',' << format_number(sigma) << '\n';
  return out.str();
}

std::string serialize_hurst_summary(const HurstEstimate& estimate) {
  std::ostringstream out;
  out << "h,r_squared,intercept\n"
      << format_number(estimate.h) << ',' << format_number(estimate.r_squared)
      << ',' << format_number(estimate.intercept) << '\n';
  return out.str();
}

std::string serialize_sliding(const std::vector<SlidingPoint>& points) {
  std::ostringstream out;
  out << "t,h\n";
  for (const SlidingPoint& p : points)
    out << p.t << ',' << format_number(p.h) << '\n';
  return out.str();
}

std::string serialize_returns(const ReturnsSeries& returns) {
  std::ostringstream out;
  out << "t,r\n";
  for (Index t = 0; t < returns.size(); ++t)
    out << t << ',' << format_number(returns[t]) << '\n';
  return out.str();
}

std::string serialize_windows_csv(const BacktestReport& report) {
  std::ostringstream out;
  out << "n_w,window,lo,hi,volatility";
  for (StrategyId id : report.config.strategies) {
    const std::string name = to_string(id);
    out << ',' << name << "_mean," << name << "_std";
  }
  out << '\n';
  for (const PartitionReport& part : report.partitions) {
    for (const WindowReport& window : part.windows) {
      out << part.window_count << ',' << window.index << ',' << window.range.lo
          << ',' << window.range.hi << ',' << format_number(window.volatility);
      for (const StrategyWindowStats& stats : window.strategies)
        out << ',' << format_number(stats.mean_pct) << ','
            << format_number(stats.std_pct);
      out << '\n';
    }
  }
  return out.str();
}

std::string serialize_summary_csv(const BacktestReport& report) {
  std::ostringstream out;
  out << "n_w,strategy,mean,std\n";
  for (const PartitionReport& part : report.partitions)
    for (const StrategySummary& summary : part.summary)
      out << part.window_count << ',' << to_string(summary.id) << ','
          << format_number(summary.mean_pct) << ','
          << format_number(summary.std_pct) << '\n';
  return out.str();
}

json config_to_json(const BacktestConfig& config) {
  std::vector<std::string> names;
  names.reserve(config.strategies.size());
  for (StrategyId id : config.strategies) names.push_back(to_string(id));
  return json{{"window_counts", config.window_counts},
              {"runs", config.runs},
              {"seed", config.seed},
              {"strategies", names},
              {"params",
               {{"mom", {{"tau", config.params.mom.tau}}},
                {"rsi",
                 {{"tau", config.params.rsi.tau},
                  {"trend_window", config.params.rsi.trend_window}}},
                {"macd",
                 {{"fast", config.params.macd.fast},
                  {"slow", config.params.macd.slow},
                  {"signal", config.params.macd.signal}}}}}};
}

json input_to_json(const InputSpec& input) {
  if (input.csv) {
    const CsvSpec& c = *input.csv;
    return json{{"csv",
                 {{"path", c.path},
                  {"date_column", c.date_column},
                  {"price_column", c.price_column},
                  {"delimiter", std::string(1, c.delimiter)},
                  {"has_header", c.has_header}}}};
  }
  const SyntheticSpec& s = input.synthetic.value();
  return json{{"synthetic",
               {{"kind", to_string(s.kind)},
                {"length", s.length},
                {"seed", s.seed},
                {"start_price", s.start_price},
                {"step_volatility", s.step_volatility},
                {"drift", s.drift},
                {"phi", s.phi}}}};
}

json backtest_to_json(const BacktestReport& report) {
  json partitions = json::array();
  for (const PartitionReport& part : report.partitions) {
    json windows = json::array();
    for (const WindowReport& window : part.windows) {
      json strategies = json::object();
      for (const StrategyWindowStats& stats : window.strategies)
        strategies[to_string(stats.id)] = {{"mean", stats.mean_pct},
                                           {"std", stats.std_pct},
                                           {"counted", stats.counted}};
      windows.push_back({{"index", window.index},
                         {"lo", window.range.lo},
                         {"hi", window.range.hi},
                         {"volatility", window.volatility},
                         {"strategies", strategies}});
    }
    json summary = json::object();
    for (const StrategySummary& s : part.summary)
      summary[to_string(s.id)] = {{"mean", s.mean_pct}, {"std", s.std_pct}};
    partitions.push_back({{"window_count", part.window_count},
                          {"windows", windows},
                          {"summary", summary}});
  }
  return json{{"schema_version", 1},
              {"prng", report.prng},
              {"series_fingerprint", report.series_fingerprint},
              {"config", config_to_json(report.config)},
              {"partitions", partitions}};
}

namespace {

RunManifest make_manifest(const std::string& command, const PriceSeries& series,
                          json config, std::uint64_t seed) {
  RunManifest manifest;
  manifest.command = command;
  manifest.input_fingerprint = fingerprint(series);
  manifest.config = std::move(config);
  manifest.seed = seed;
  manifest.timestamp = utc_timestamp();
  return manifest;
}

std::vector<std::string> write_outputs(
    const fs::path& dir, RunManifest manifest, const std::string& manifest_name,
    const std::vector<std::pair<std::string, std::string>>& files) {
  fs::create_directories(dir);
  std::vector<std::string> written;
  for (const auto& [name, content] : files) {
    const fs::path path = dir / name;
    write_atomic(path, content);
    manifest.outputs.push_back(name);
    written.push_back(path.string());
  }
  const fs::path manifest_path = dir / manifest_name;
  write_atomic(manifest_path, manifest.to_json().dump(2) + "\n");
  written.push_back(manifest_path.string());
  return written;
}

}  // namespace

std::vector<std::string> cmd_hurst(const HurstCommand& cmd) {
  const PriceSeries series = load_input(cmd.input);

  json config{{"input", input_to_json(cmd.input)},
              {"mode", cmd.mode == HurstMode::Global ? "global" : "sliding"},
              {"n_min", cmd.dma.n_min},
              {"n_points", cmd.dma.n_points},
              {"log_price", cmd.dma.log_price}};
  const std::uint64_t seed =
      cmd.input.synthetic ? cmd.input.synthetic->seed : 0;

  std::vector<std::pair<std::string, std::string>> files;
  if (cmd.mode == HurstMode::Global) {
    const HurstEstimate estimate = hurst_global(series, cmd.dma);
    files.emplace_back("hurst_fit.csv", serialize_hurst_fit(estimate));
    files.emplace_back("hurst_summary.csv", serialize_hurst_summary(estimate));
  } else {
    config["ns"] = cmd.ns;
    config["step"] = cmd.step;
    const SlidingHurstConfig sliding{cmd.ns, cmd.step, cmd.dma};
    files.emplace_back("hurst_sliding.csv",
                       serialize_sliding(hurst_sliding(series, sliding)));
  }

  return write_outputs(default_out_dir(cmd.out_dir),
                       make_manifest("hurst", series, std::move(config), seed),
                       "hurst_manifest.json", files);
}

std::vector<std::string> cmd_backtest(const BacktestCommand& cmd) {
  const PriceSeries series = load_input(cmd.input);
  const BacktestReport report = run_backtest(series, cmd.config);

  json config{{"input", input_to_json(cmd.input)},
              {"backtest", config_to_json(report.config)},
              {"format", cmd.format == OutputFormat::Csv ? "csv" : "json"}};

  std::vector<std::pair<std::string, std::string>> files;
  if (cmd.format == OutputFormat::Csv) {
    files.emplace_back("backtest_windows.csv", serialize_windows_csv(report));
    files.emplace_back("backtest_summary.csv", serialize_summary_csv(report));
    files.emplace_back("returns.csv", serialize_returns(compute_returns(series)));
  } else {
    files.emplace_back("backtest_report.json",
                       backtest_to_json(report).dump(2) + "\n");
  }

  return write_outputs(
      default_out_dir(cmd.out_dir),
      make_manifest("backtest", series, std::move(config), cmd.config.seed),
      "backtest_manifest.json", files);
}

std::vector<std::string> cmd_generate(const GenerateCommand& cmd) {
  if (cmd.out_path.empty()) throw ParameterError("generate needs an output path");
  const PriceSeries bare = generate(cmd.spec);

  // Synthetic day labels: consecutive calendar days from 2000-01-01.
  const long epoch = Date{2000, 1, 1}.day_number();
  std::vector<Date> labels;
  labels.reserve(bare.size());
  for (Index t = 0; t < bare.size(); ++t)
    labels.push_back(Date::from_day_number(epoch + t));
  const PriceSeries series(bare.values(), std::move(labels));

  const fs::path out = cmd.out_path;
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  write_atomic(out, serialize_csv(series));

  RunManifest manifest =
      make_manifest("generate", series,
                    input_to_json(InputSpec{.csv = {}, .synthetic = cmd.spec}),
                    cmd.spec.seed);
  manifest.outputs.push_back(out.filename().string());
  const fs::path manifest_path = out.string() + ".manifest.json";
  write_atomic(manifest_path, manifest.to_json().dump(2) + "\n");
  return {out.string(), manifest_path.string()};
}

}  // namespace chartlab

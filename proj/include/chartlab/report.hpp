#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chartlab/backtest.hpp"
#include "chartlab/csv.hpp"
#include "chartlab/dma.hpp"
#include "chartlab/synthetic.hpp"

namespace chartlab {

// Exactly one of csv / synthetic must be set.
struct InputSpec {
  std::optional<CsvSpec> csv;
  std::optional<SyntheticSpec> synthetic;
};

PriceSeries load_input(const InputSpec& input);

// Reproducibility record written next to every command's outputs. Re-running
// with the recorded configuration reproduces each non-manifest output
// byte-for-byte (the timestamp is informational only).
struct RunManifest {
  std::string command;
  std::string input_fingerprint;
  nlohmann::json config;
  std::uint64_t seed = 0;
  std::string prng = kPrngAlgorithm;
  std::string version = kVersion;
  std::string timestamp;
  std::vector<std::string> outputs;  // file names, this manifest excluded

  nlohmann::json to_json() const;
};

enum class HurstMode { Global, Sliding };
enum class OutputFormat { Csv, Json };

struct HurstCommand {
  InputSpec input;
  HurstMode mode = HurstMode::Global;
  DmaConfig dma{};
  Index ns = 1000;   // sliding window size
  Index step = 20;   // sliding step
  std::string out_dir;  // empty: $CHARTLAB_OUT_DIR, then "."
};

struct BacktestCommand {
  InputSpec input;
  BacktestConfig config{};
  OutputFormat format = OutputFormat::Csv;
  std::string out_dir;
};

struct GenerateCommand {
  SyntheticSpec spec{};
  std::string out_path;  // manifest lands at out_path + ".manifest.json"
};

// Each command writes its outputs atomically (temp file + rename), one
// manifest alongside, and returns the paths written (manifest last).
std::vector<std::string> cmd_hurst(const HurstCommand& cmd);
std::vector<std::string> cmd_backtest(const BacktestCommand& cmd);
std::vector<std::string> cmd_generate(const GenerateCommand& cmd);

// Plot-ready tables; all CSV numbers are 10-significant-digit decimals.
std::string serialize_hurst_fit(const HurstEstimate& estimate);      // n,sigma
std::string serialize_hurst_summary(const HurstEstimate& estimate);  // h,r_squared,intercept
std::string serialize_sliding(const std::vector<SlidingPoint>& points);  // t,h
std::string serialize_returns(const ReturnsSeries& returns);             // t,r
std::string serialize_windows_csv(const BacktestReport& report);
std::string serialize_summary_csv(const BacktestReport& report);

// Versioned JSON form of the whole backtest report (schema_version 1).
nlohmann::json backtest_to_json(const BacktestReport& report);

nlohmann::json config_to_json(const BacktestConfig& config);
nlohmann::json input_to_json(const InputSpec& input);

std::string default_out_dir(const std::string& requested);
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace chartlab

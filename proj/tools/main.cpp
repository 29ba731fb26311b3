#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "chartlab/errors.hpp"
#include "chartlab/report.hpp"

namespace {

using namespace chartlab;

struct InputFlags {
  std::string csv_path;
  std::string date_column = "date";
  std::string price_column = "close";
  std::string delimiter = ",";
  bool no_header = false;
  std::string synthetic_kind;
  Index length = 1000;
  double start_price = 1000.0;
  double vol = 0.01;
  double drift = 0.0;
  double phi = 0.0;
};

void add_input_flags(CLI::App* app, InputFlags* flags) {
  auto* csv = app->add_option("--csv", flags->csv_path, "CSV input file");
  auto* synth = app
                    ->add_option("--synthetic", flags->synthetic_kind,
                                 "synthetic input: gaussian, drift or ar1")
                    ->excludes(csv);
  csv->excludes(synth);
  app->add_option("--date-column", flags->date_column, "CSV date column name")
      ->capture_default_str();
  app->add_option("--price-column", flags->price_column, "CSV price column name")
      ->capture_default_str();
  app->add_option("--delimiter", flags->delimiter, "CSV delimiter character")
      ->capture_default_str();
  app->add_flag("--no-header", flags->no_header,
                "CSV has no header row; address columns as 0, 1, ...");
  app->add_option("--length", flags->length, "synthetic series length")
      ->capture_default_str();
  app->add_option("--start-price", flags->start_price, "synthetic start price")
      ->capture_default_str();
  app->add_option("--vol", flags->vol, "synthetic daily step volatility")
      ->capture_default_str();
  app->add_option("--drift", flags->drift, "drift per day (drift walk)")
      ->capture_default_str();
  app->add_option("--phi", flags->phi, "AR(1) coefficient in (-1, 1)")
      ->capture_default_str();
}

InputSpec make_input(const InputFlags& flags, std::uint64_t seed) {
  InputSpec input;
  if (!flags.csv_path.empty()) {
    if (flags.delimiter.size() != 1)
      throw ParameterError("--delimiter must be a single character");
    input.csv = CsvSpec{flags.csv_path, flags.date_column, flags.price_column,
                        flags.delimiter[0], !flags.no_header};
  } else if (!flags.synthetic_kind.empty()) {
    const auto kind = walk_from_string(flags.synthetic_kind);
    if (!kind)
      throw ParameterError("unknown synthetic kind \"" + flags.synthetic_kind +
                           "\" (expected gaussian, drift or ar1)");
    input.synthetic = SyntheticSpec{*kind,       flags.length, seed,
                                    flags.start_price, flags.vol,    flags.drift,
                                    flags.phi};
  }
  return input;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurst-exponent analysis and daily strategy backtesting for "
               "price series"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write a synthetic series as CSV");
  std::string gen_kind = "gaussian";
  GenerateCommand gen_cmd;
  generate->add_option("--kind", gen_kind, "gaussian, drift or ar1")
      ->capture_default_str();
  generate->add_option("--length", gen_cmd.spec.length, "series length")
      ->capture_default_str();
  generate->add_option("--seed", gen_cmd.spec.seed, "generator seed")
      ->capture_default_str();
  generate->add_option("--start-price", gen_cmd.spec.start_price, "start price")
      ->capture_default_str();
  generate->add_option("--vol", gen_cmd.spec.step_volatility, "daily step volatility")
      ->capture_default_str();
  generate->add_option("--drift", gen_cmd.spec.drift, "drift per day")
      ->capture_default_str();
  generate->add_option("--phi", gen_cmd.spec.phi, "AR(1) coefficient")
      ->capture_default_str();
  generate->add_option("--out", gen_cmd.out_path, "output CSV path")->required();

  // hurst
  auto* hurst = app.add_subcommand("hurst", "estimate the Hurst exponent");
  InputFlags hurst_input;
  add_input_flags(hurst, &hurst_input);
  HurstCommand hurst_cmd;
  std::string hurst_mode = "global";
  std::uint64_t hurst_seed = 0;
  hurst->add_option("--seed", hurst_seed, "synthetic input seed")
      ->capture_default_str();
  hurst->add_option("--mode", hurst_mode, "global or sliding")
      ->check(CLI::IsMember({"global", "sliding"}))
      ->capture_default_str();
  hurst->add_option("--ns", hurst_cmd.ns, "sliding window size")
      ->capture_default_str();
  hurst->add_option("--step", hurst_cmd.step, "sliding step")->capture_default_str();
  hurst->add_option("--n-min", hurst_cmd.dma.n_min, "smallest averaging window")
      ->capture_default_str();
  hurst->add_option("--n-points", hurst_cmd.dma.n_points,
                    "fit points, geometrically spaced")
      ->capture_default_str();
  hurst->add_flag("--log-price", hurst_cmd.dma.log_price,
                  "detrend log prices instead of prices");
  hurst->add_option("--out", hurst_cmd.out_dir, "output directory");

  // backtest
  auto* backtest = app.add_subcommand("backtest", "windowed strategy backtest");
  InputFlags bt_input;
  add_input_flags(backtest, &bt_input);
  BacktestCommand bt_cmd;
  std::vector<std::string> strategy_names;
  std::string bt_format = "csv";
  backtest->add_option("--seed", bt_cmd.config.seed,
                       "master seed (also seeds a synthetic input)")
      ->capture_default_str();
  backtest->add_option("--windows", bt_cmd.config.window_counts,
                       "trading window counts")
      ->delimiter(',')
      ->capture_default_str();
  backtest->add_option("--runs", bt_cmd.config.runs, "runs per window")
      ->capture_default_str();
  backtest->add_option("--strategies", strategy_names,
                       "subset of rnd,mom,rsi,upd,macd")
      ->delimiter(',');
  backtest->add_option("--tau-m", bt_cmd.config.params.mom.tau, "momentum lag")
      ->capture_default_str();
  backtest->add_option("--tau-rsi", bt_cmd.config.params.rsi.tau, "RSI lookback")
      ->capture_default_str();
  backtest->add_option("--t-rsi", bt_cmd.config.params.rsi.trend_window,
                       "RSI divergence window")
      ->capture_default_str();
  backtest->add_option("--macd-fast", bt_cmd.config.params.macd.fast, "fast EMA window")
      ->capture_default_str();
  backtest->add_option("--macd-slow", bt_cmd.config.params.macd.slow, "slow EMA window")
      ->capture_default_str();
  backtest->add_option("--macd-signal", bt_cmd.config.params.macd.signal,
                       "signal EMA window")
      ->capture_default_str();
  backtest->add_option("--format", bt_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  backtest->add_option("--out", bt_cmd.out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<std::string> written;
    if (generate->parsed()) {
      const auto kind = walk_from_string(gen_kind);
      if (!kind) throw ParameterError("unknown kind \"" + gen_kind + "\"");
      gen_cmd.spec.kind = *kind;
      written = cmd_generate(gen_cmd);
    } else if (hurst->parsed()) {
      hurst_cmd.input = make_input(hurst_input, hurst_seed);
      hurst_cmd.mode = hurst_mode == "global" ? HurstMode::Global : HurstMode::Sliding;
      written = cmd_hurst(hurst_cmd);
    } else if (backtest->parsed()) {
      bt_cmd.input = make_input(bt_input, bt_cmd.config.seed);
      bt_cmd.format = bt_format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
      if (!strategy_names.empty()) {
        bt_cmd.config.strategies.clear();
        for (const std::string& name : strategy_names) {
          const auto id = strategy_from_string(name);
          if (!id) throw ParameterError("unknown strategy \"" + name + "\"");
          bt_cmd.config.strategies.push_back(*id);
        }
      }
      written = cmd_backtest(bt_cmd);
    }
    for (const std::string& path : written) std::cout << "wrote " << path << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

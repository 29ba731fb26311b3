#pragma once

#include <cstdint>
#include <vector>

#include "chartlab/strategies.hpp"

namespace chartlab {

// Half-open day range [lo, hi).
struct DayRange {
  Index lo = 0;
  Index hi = 0;
  Index length() const { return hi - lo; }
  bool operator==(const DayRange&) const = default;
};

// N_w contiguous windows tiling [0, days): the first N_w - 1 have length
// floor(days / N_w), the last absorbs the remainder.
std::vector<DayRange> partition(Index days, Index window_count);

struct BacktestConfig {
  std::vector<Index> window_counts = {3, 9, 18, 30};
  int runs = 10;  // Monte-Carlo repetitions per window (RND only varies)
  std::uint64_t seed = 0;
  std::vector<StrategyId> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  StrategyParams params{};
};

// Identifies one simulation cell; keys the RND sub-stream.
struct RunLabel {
  std::uint64_t window_count = 0;
  std::uint64_t window = 0;
  std::uint64_t run = 0;
};

// Day-by-day score of one strategy over one window. Every day of the window
// lands in exactly one bucket:
//   wins + losses + flats + warmup_skipped + terminal_skipped = window length.
struct WindowTally {
  Index wins = 0;
  Index losses = 0;
  Index flats = 0;
  Index warmup_skipped = 0;    // days before the strategy's min_history
  Index terminal_skipped = 0;  // 1 if the window holds the series' last day
  Index counted() const { return wins + losses; }
  double win_pct() const { return 100.0 * double(wins) / double(counted()); }
};

// Predictions use the full history prefix [0, t], so lookbacks cross window
// boundaries. The final day of the whole series has no next-day truth and is
// skipped. Throws DegenerateWindowError when no day is countable.
WindowTally run_window(const PriceSeries& series, DayRange range, StrategyId id,
                       const StrategyParams& params, RunLabel label,
                       std::uint64_t master_seed);

struct StrategyWindowStats {
  StrategyId id{};
  double mean_pct = 0.0;  // mean win percentage over runs
  double std_pct = 0.0;   // win-percentage standard deviation over runs
  Index counted = 0;      // countable days (flats excluded); run-invariant
};

struct WindowReport {
  Index index = 0;
  DayRange range;
  double volatility = 0.0;  // of the returns lying wholly inside the window
  std::vector<StrategyWindowStats> strategies;
};

struct StrategySummary {
  StrategyId id{};
  double mean_pct = 0.0;  // cross-window mean of the per-window means
  double std_pct = 0.0;   // cross-window standard deviation of those means
};

struct PartitionReport {
  Index window_count = 0;
  std::vector<WindowReport> windows;
  std::vector<StrategySummary> summary;
};

struct BacktestReport {
  std::vector<PartitionReport> partitions;
  BacktestConfig config;
  std::string prng;                // generator algorithm name
  std::string series_fingerprint;
};

// The full windowed experiment: per window count, per window, per strategy
// win statistics plus cross-window aggregates. Deterministic strategies are
// scored once and replicated across runs (std 0); RND redraws per run from a
// (window_count, window, run)-keyed sub-stream. Byte-identical for identical
// (series, config).
BacktestReport run_backtest(const PriceSeries& series, const BacktestConfig& config);

}  // namespace chartlab

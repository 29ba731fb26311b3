#include "chartlab/backtest.hpp"

#include <algorithm>
#include <cmath>

#include "chartlab/errors.hpp"

namespace chartlab {

std::vector<DayRange> partition(Index days, Index window_count) {
  if (window_count < 1 || 2 * window_count > days)
    throw ParameterError("window count " + std::to_string(window_count) +
                         " outside [1, T/2] for T=" + std::to_string(days));
  const Index base = days / window_count;
  std::vector<DayRange> ranges;
  ranges.reserve(window_count);
  for (Index w = 0; w < window_count; ++w) {
    const Index lo = w * base;
    const Index hi = (w == window_count - 1) ? days : lo + base;
    ranges.push_back({lo, hi});
  }
  return ranges;
}

WindowTally run_window(const PriceSeries& series, DayRange range, StrategyId id,
                       const StrategyParams& params, RunLabel label,
                       std::uint64_t master_seed) {
  const Array& y = series.values();
  const Index size = y.size();
  if (range.lo < 0 || range.lo >= range.hi || range.hi > size)
    throw RangeError("window [" + std::to_string(range.lo) + ", " +
                     std::to_string(range.hi) + ") invalid for series of length " +
                     std::to_string(size));

  const Index warmup = min_history(id, params);
  RngStream stream(master_seed, {label.window_count, label.window, label.run});

  // MACD values at day t depend only on the prefix [0, t], so one pass over
  // the whole series substitutes for per-day prefix recursions.
  MacdSeries macd_lines;
  if (id == StrategyId::MACD) macd_lines = macd_series(y, params.macd);

  WindowTally tally;
  for (Index t = range.lo; t < range.hi; ++t) {
    if (t == size - 1) {
      ++tally.terminal_skipped;  // no next-day truth
      continue;
    }
    if (t < warmup) {
      ++tally.warmup_skipped;
      continue;
    }
    Prediction p;
    if (id == StrategyId::MACD) {
      p = macd_lines.macd[t] - macd_lines.signal[t] < 0.0 ? Prediction::Bearish
                                                          : Prediction::Bullish;
    } else {
      p = predict(id, y.head(t + 1), params, &stream);
    }
    switch (evaluate_prediction(p, y[t], y[t + 1])) {
      case Outcome::Win: ++tally.wins; break;
      case Outcome::Loss: ++tally.losses; break;
      case Outcome::Flat: ++tally.flats; break;
    }
  }

  if (tally.counted() == 0)
    throw DegenerateWindowError("window [" + std::to_string(range.lo) + ", " +
                                std::to_string(range.hi) + ") has no countable day for " +
                                to_string(id));
  return tally;
}

namespace {

double population_std(const std::vector<double>& values, double mean) {
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / double(values.size()));
}

}  // namespace

BacktestReport run_backtest(const PriceSeries& series, const BacktestConfig& raw) {
  BacktestConfig config = raw;
  if (config.runs < 1) throw ParameterError("runs must be >= 1");
  if (config.strategies.empty()) throw ParameterError("strategy set is empty");
  // Canonical report ordering: strategies in enum order, no duplicates.
  std::sort(config.strategies.begin(), config.strategies.end());
  if (std::adjacent_find(config.strategies.begin(), config.strategies.end()) !=
      config.strategies.end())
    throw ParameterError("duplicate strategy in the configured set");
  for (StrategyId id : config.strategies) min_history(id, config.params);

  const ReturnsSeries returns = compute_returns(series);

  BacktestReport report;
  report.config = config;
  report.prng = kPrngAlgorithm;
  report.series_fingerprint = fingerprint(series);

  for (Index window_count : config.window_counts) {
    PartitionReport part;
    part.window_count = window_count;
    const std::vector<DayRange> ranges = partition(series.size(), window_count);

    for (Index w = 0; w < Index(ranges.size()); ++w) {
      WindowReport window;
      window.index = w;
      window.range = ranges[w];
      // Only returns lying wholly inside the window count towards its
      // volatility; the one straddling the boundary belongs to neither.
      window.volatility = volatility(returns, ranges[w].lo, ranges[w].hi - 1);

      for (StrategyId id : config.strategies) {
        const bool random = id == StrategyId::RND;
        const int runs = random ? config.runs : 1;
        std::vector<double> pcts;
        pcts.reserve(config.runs);
        Index counted = 0;
        try {
          for (int run = 0; run < runs; ++run) {
            const RunLabel label{std::uint64_t(window_count), std::uint64_t(w),
                                 std::uint64_t(run)};
            const WindowTally tally =
                run_window(series, ranges[w], id, config.params, label, config.seed);
            pcts.push_back(tally.win_pct());
            counted = tally.counted();
          }
        } catch (const DegenerateWindowError& e) {
          throw DegenerateWindowError("N_w=" + std::to_string(window_count) +
                                      " window " + std::to_string(w) + ": " + e.what());
        }
        // Deterministic strategies run once; 10 identical runs would
        // average to the same mean with std 0.
        while (Index(pcts.size()) < Index(config.runs)) pcts.push_back(pcts.front());

        StrategyWindowStats stats;
        stats.id = id;
        stats.counted = counted;
        stats.mean_pct = 0.0;
        for (double p : pcts) stats.mean_pct += p;
        stats.mean_pct /= double(pcts.size());
        stats.std_pct = random ? population_std(pcts, stats.mean_pct) : 0.0;
        window.strategies.push_back(stats);
      }
      part.windows.push_back(std::move(window));
    }

    for (std::size_t s = 0; s < config.strategies.size(); ++s) {
      StrategySummary summary;
      summary.id = config.strategies[s];
      std::vector<double> means;
      means.reserve(part.windows.size());
      for (const WindowReport& window : part.windows)
        means.push_back(window.strategies[s].mean_pct);
      summary.mean_pct = 0.0;
      for (double m : means) summary.mean_pct += m;
      summary.mean_pct /= double(means.size());
      summary.std_pct = population_std(means, summary.mean_pct);
      part.summary.push_back(summary);
    }
    report.partitions.push_back(std::move(part));
  }

  return report;
}

}  // namespace chartlab

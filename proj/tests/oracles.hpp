#pragma once

// Independent reference implementations used to pin the library's derived
// values. Everything here is written straight from the defining formulas as
// plain loops over std::vector<double>: no Eigen expressions, no rolling
// sums, no code shared with src/, so agreement with the library is evidence,
// not tautology.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chartlab/rng.hpp"

namespace oracle {

// r(t) = (I(t+1) - I(t)) / I(t).
inline std::vector<double> returns(const std::vector<double>& prices) {
  std::vector<double> out;
  for (std::size_t t = 0; t + 1 < prices.size(); ++t)
    out.push_back((prices[t + 1] - prices[t]) / prices[t]);
  return out;
}

// Textbook two-pass population variance of values[lo, hi).
inline double variance(const std::vector<double>& values, std::size_t lo,
                       std::size_t hi) {
  double mean = 0.0;
  for (std::size_t i = lo; i < hi; ++i) mean += values[i];
  mean /= double(hi - lo);
  double acc = 0.0;
  for (std::size_t i = lo; i < hi; ++i) acc += (values[i] - mean) * (values[i] - mean);
  return acc / double(hi - lo);
}

// Literal double-loop evaluation of the DMA residual spread: for each t in
// [n, T), average the n values ending at t, square the residual, normalize
// by T - n.
inline double dma_sigma(const std::vector<double>& y, std::size_t n) {
  const std::size_t T = y.size();
  double acc = 0.0;
  for (std::size_t t = n; t < T; ++t) {
    double ma = 0.0;
    for (std::size_t k = 0; k < n; ++k) ma += y[t - k];
    ma /= double(n);
    acc += (y[t] - ma) * (y[t] - ma);
  }
  return std::sqrt(acc / double(T - n));
}

// Direct backward moving average at one day.
inline double moving_average_at(const std::vector<double>& y, std::size_t n,
                                std::size_t t) {
  double ma = 0.0;
  for (std::size_t k = 0; k < n; ++k) ma += y[t - k];
  return ma / double(n);
}

struct OlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Textbook OLS of ys against xs with means removed, plus r^2.
inline OlsFit ols(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t m = xs.size();
  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= double(m);
  y_mean /= double(m);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    syy += (ys[i] - y_mean) * (ys[i] - y_mean);
  }
  OlsFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
      ss_res += r * r;
    }
    fit.r_squared = 1.0 - ss_res / syy;
  }
  return fit;
}

// RS ratio and RSI(t) evaluated directly from the one-day changes over the
// tau days ending at t.
inline double rsi(const std::vector<double>& prices, std::size_t t,
                  std::size_t tau) {
  double gains = 0.0, losses = 0.0;
  for (std::size_t k = 0; k < tau; ++k) {
    const double change = prices[t - k] - prices[t - k - 1];
    if (change > 0.0) gains += change;
    if (change < 0.0) losses += -change;
  }
  if (losses == 0.0) return gains == 0.0 ? 50.0 : 100.0;
  const double rs = gains / losses;
  return 100.0 - 100.0 / (1.0 + rs);
}

// Weighted-sum expansion of the recursive EMA. The recursion
//   E_t = E_{t-1} + w (z_t - E_{t-1}),  w = 2/(x+1),
// seeded at day x-1 with the plain average of z_0..z_{x-1}, unrolls to
//   E_t = (1-w)^{t-(x-1)} seed + w * sum_{j=x}^{t} (1-w)^{t-j} z_j.
// Evaluated here by literal power sums, O(t) per day.
inline double ema_expanded(const std::vector<double>& z, std::size_t window,
                           std::size_t t) {
  if (t + 1 < window) throw std::logic_error("ema_expanded: t before seed day");
  const double w = 2.0 / (double(window) + 1.0);
  double seed = 0.0;
  for (std::size_t j = 0; j < window; ++j) seed += z[j];
  seed /= double(window);
  const std::size_t seed_day = window - 1;
  double value = seed * std::pow(1.0 - w, double(t - seed_day));
  for (std::size_t j = window; j <= t; ++j)
    value += w * std::pow(1.0 - w, double(t - j)) * z[j];
  return value;
}

struct MacdValues {
  double macd = 0.0;
  double signal = 0.0;
};

// MACD(t) and signal(t) from the expanded EMAs: fast/slow EMAs of the price,
// a MACD sequence starting at day `slow` (the slow seed day holds a block
// average, not an EMA), and a signal EMA seeded on the first `signal` MACD
// values.
inline MacdValues macd_at(const std::vector<double>& prices, std::size_t t,
                          std::size_t fast, std::size_t slow,
                          std::size_t signal) {
  MacdValues out;
  out.macd = ema_expanded(prices, fast, t) - ema_expanded(prices, slow, t);
  std::vector<double> macd_seq;  // index 0 = day slow
  for (std::size_t day = slow; day <= t; ++day)
    macd_seq.push_back(ema_expanded(prices, fast, day) -
                       ema_expanded(prices, slow, day));
  out.signal = ema_expanded(macd_seq, signal, t - slow);
  return out;
}

// Re-scores one RND window by drawing the same sub-stream the backtest keys
// by (window count, window, run) and applying the Win/Loss/Flat definition
// day by day. Returns the win percentage.
inline double replay_rnd_window(const std::vector<double>& prices,
                                std::size_t lo, std::size_t hi,
                                std::uint64_t master,
                                std::uint64_t window_count, std::uint64_t window,
                                std::uint64_t run) {
  chartlab::RngStream stream(master, {window_count, window, run});
  long wins = 0, losses = 0;
  for (std::size_t t = lo; t < hi; ++t) {
    if (t + 1 >= prices.size()) continue;  // final day: no next-day truth
    const bool bullish = stream.coin();
    if (prices[t + 1] == prices[t]) continue;  // flat
    const bool up = prices[t + 1] > prices[t];
    if (up == bullish)
      ++wins;
    else
      ++losses;
  }
  return 100.0 * double(wins) / double(wins + losses);
}

}  // namespace oracle

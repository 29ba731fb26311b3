#include "chartlab/dma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chartlab/errors.hpp"

namespace chartlab {

Array moving_average(ArrayRef y, Index n) {
  const Index size = y.size();
  if (n < 1 || n > size)
    throw ParameterError("moving average window " + std::to_string(n) +
                         " invalid for series of length " + std::to_string(size));

  // Neumaier-compensated prefix sums; keeping the carry per index makes the
  // windowed difference accurate to ~1 ulp of the window sum even when the
  // prefix magnitudes dwarf it.
  Array prefix(size + 1), carry(size + 1);
  prefix[0] = 0.0;
  carry[0] = 0.0;
  double sum = 0.0, comp = 0.0;
  for (Index t = 0; t < size; ++t) {
    const double term = y[t];
    const double next = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - next) + term;
    else
      comp += (term - next) + sum;
    sum = next;
    prefix[t + 1] = sum;
    carry[t + 1] = comp;
  }

  Array out(size);
  out.head(n - 1).setConstant(std::numeric_limits<double>::quiet_NaN());
  for (Index t = n - 1; t < size; ++t) {
    const double window_sum =
        (prefix[t + 1] - prefix[t + 1 - n]) + (carry[t + 1] - carry[t + 1 - n]);
    out[t] = window_sum / double(n);
  }
  return out;
}

double dma_sigma(ArrayRef y, Index n) {
  const Index size = y.size();
  if (n < 2 || 2 * n > size)
    throw ParameterError("dma window n=" + std::to_string(n) +
                         " outside [2, T/2] for T=" + std::to_string(size));
  const Array ma = moving_average(y, n);
  const Index count = size - n;
  const double ss =
      (y.tail(count) - ma.tail(count)).square().sum();
  return std::sqrt(ss / double(count));
}

double dma_sigma(const PriceSeries& series, Index n) {
  return dma_sigma(series.values(), n);
}

std::vector<Index> fit_grid(Index n_min, Index n_max, Index n_points) {
  if (n_min < 2) throw ParameterError("n_min must be >= 2");
  if (n_points < 5) throw ParameterError("n_points must be >= 5");
  if (n_max < n_min)
    throw ParameterError("fit grid empty: n_max=" + std::to_string(n_max) +
                         " < n_min=" + std::to_string(n_min));
  std::vector<Index> grid;
  grid.reserve(n_points);
  const double lo = std::log(double(n_min));
  const double hi = std::log(double(n_max));
  for (Index i = 0; i < n_points; ++i) {
    const double f = (n_points == 1) ? 0.0 : double(i) / double(n_points - 1);
    const auto n = Index(std::llround(std::exp(lo + f * (hi - lo))));
    grid.push_back(std::clamp(n, n_min, n_max));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

HurstEstimate hurst_global(ArrayRef y, const DmaConfig& config) {
  const Index size = y.size();
  const auto n_max = Index(double(size) * DmaConfig::kNMaxFraction);
  const std::vector<Index> grid = fit_grid(config.n_min, n_max, config.n_points);

  const Array detrended = config.log_price ? Array(y.log()) : Array(y);

  HurstEstimate estimate;
  estimate.points.reserve(grid.size());
  for (Index n : grid)
    estimate.points.emplace_back(n, dma_sigma(detrended, n));

  // OLS on (log n, log sigma); sigma = 0 points (constant sub-windows) are
  // excluded rather than producing -inf logs.
  std::vector<double> log_n, log_sigma;
  for (const auto& [n, sigma] : estimate.points) {
    if (sigma > 0.0) {
      log_n.push_back(std::log(double(n)));
      log_sigma.push_back(std::log(sigma));
    }
  }
  const Index usable = Index(log_n.size());
  if (usable < 5)
    throw DegenerateFitError("only " + std::to_string(usable) +
                             " usable (n, sigma > 0) fit points, need 5");

  const Eigen::Map<const Array> x(log_n.data(), usable);
  const Eigen::Map<const Array> z(log_sigma.data(), usable);
  const double x_mean = x.mean();
  const double z_mean = z.mean();
  const double sxx = (x - x_mean).square().sum();
  const double sxz = ((x - x_mean) * (z - z_mean)).sum();
  estimate.h = sxz / sxx;
  estimate.intercept = z_mean - estimate.h * x_mean;

  const double ss_res = (z - (estimate.intercept + estimate.h * x)).square().sum();
  const double ss_tot = (z - z_mean).square().sum();
  estimate.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  return estimate;
}

HurstEstimate hurst_global(const PriceSeries& series, const DmaConfig& config) {
  return hurst_global(series.values(), config);
}

std::vector<SlidingPoint> hurst_sliding(ArrayRef y,
                                        const SlidingHurstConfig& config) {
  const Index size = y.size();
  if (config.step < 1) throw ParameterError("sliding step must be >= 1");
  if (config.window_size < 4 * config.dma.n_min)
    throw ParameterError("sliding window_size must be >= 4 * n_min");
  if (config.window_size > size)
    throw ParameterError("sliding window_size " +
                         std::to_string(config.window_size) +
                         " exceeds series length " + std::to_string(size));

  std::vector<SlidingPoint> points;
  points.reserve((size - config.window_size) / config.step + 1);
  for (Index t = 0; t + config.window_size <= size; t += config.step) {
    const HurstEstimate estimate =
        hurst_global(y.segment(t, config.window_size), config.dma);
    points.push_back({t, estimate.h});
  }
  return points;
}

std::vector<SlidingPoint> hurst_sliding(const PriceSeries& series,
                                        const SlidingHurstConfig& config) {
  return hurst_sliding(series.values(), config);
}

}  // namespace chartlab

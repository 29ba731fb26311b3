#pragma once

#include <utility>
#include <vector>

#include "chartlab/series.hpp"

namespace chartlab {

// Fit controls for the detrending scale sweep. The upper bound of the
// averaging window n is always half the series length.
struct DmaConfig {
  Index n_min = 2;
  Index n_points = 50;     // geometrically spaced n values sampled for the fit
  bool log_price = false;  // detrend log(price) instead of price

  static constexpr double kNMaxFraction = 0.5;
};

struct HurstEstimate {
  double h = 0.0;
  double intercept = 0.0;  // log-offset of the power-law fit
  double r_squared = 0.0;
  std::vector<std::pair<Index, double>> points;  // (n, sigma) used in the fit
};

// Sliding-window estimation: windows of window_size days advance by step
// days; windows that would overhang the series end are dropped.
struct SlidingHurstConfig {
  Index window_size = 1000;
  Index step = 20;
  DmaConfig dma{};
};

struct SlidingPoint {
  Index t;  // window start day
  double h;
};

// Backward moving average of window n: out[t] = mean(y[t-n+1 .. t]).
// Entries before t = n-1 are NaN. Uses compensated prefix sums; agrees with
// direct per-window summation to within 1e-12 relative.
Array moving_average(ArrayRef y, Index n);

// Standard deviation of the series around its backward moving average:
//   sqrt( 1/(T-n) * sum_{t=n}^{T-1} (y(t) - ma_n(t))^2 ).
// Days are 0-indexed and the sum runs t = n .. T-1 with T-n terms, which
// keeps the summand count of the 1-indexed convention found elsewhere.
double dma_sigma(ArrayRef y, Index n);
double dma_sigma(const PriceSeries& series, Index n);

// Geometrically spaced integer grid in [n_min, n_max], deduplicated,
// ascending.
std::vector<Index> fit_grid(Index n_min, Index n_max, Index n_points);

// Hurst exponent: OLS slope of log sigma versus log n over the fit grid,
// zero-sigma points excluded. Throws DegenerateFitError below 5 usable
// points.
HurstEstimate hurst_global(ArrayRef y, const DmaConfig& config = {});
HurstEstimate hurst_global(const PriceSeries& series, const DmaConfig& config = {});

// One hurst_global per window start t = 0, step, 2*step, ... while
// t + window_size <= T; output ordered by t, count = (T - N_s)/step + 1.
std::vector<SlidingPoint> hurst_sliding(const PriceSeries& series,
                                        const SlidingHurstConfig& config = {});
std::vector<SlidingPoint> hurst_sliding(ArrayRef y,
                                        const SlidingHurstConfig& config = {});

}  // namespace chartlab

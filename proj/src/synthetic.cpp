#include "chartlab/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "chartlab/errors.hpp"
#include "chartlab/rng.hpp"

namespace chartlab {

std::string to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::GaussianWalk: return "gaussian";
    case WalkKind::DriftedWalk: return "drift";
    case WalkKind::AR1Walk: return "ar1";
  }
  return "?";
}

std::optional<WalkKind> walk_from_string(std::string_view name) {
  if (name == "gaussian") return WalkKind::GaussianWalk;
  if (name == "drift") return WalkKind::DriftedWalk;
  if (name == "ar1") return WalkKind::AR1Walk;
  return std::nullopt;
}

PriceSeries generate(const SyntheticSpec& spec) {
  if (spec.length < 2)
    throw ParameterError("synthetic length must be >= 2, got " +
                         std::to_string(spec.length));
  if (!(spec.step_volatility > 0.0))
    throw ParameterError("step_volatility must be > 0");
  if (!(spec.start_price > 0.0))
    throw ParameterError("start_price must be > 0");
  if (spec.kind == WalkKind::AR1Walk && !(std::abs(spec.phi) < 1.0))
    throw ParameterError("AR1 phi must satisfy |phi| < 1");

  RngStream rng(spec.seed);
  Array values(spec.length);
  values[0] = spec.start_price;

  // AR(1) state carries the unclamped step so the autocorrelation structure
  // is untouched by the positivity truncation.
  double ar_state = 0.0;
  const double innovation_scale =
      spec.step_volatility * std::sqrt(1.0 - spec.phi * spec.phi);

  for (Index t = 1; t < spec.length; ++t) {
    double step = 0.0;
    switch (spec.kind) {
      case WalkKind::GaussianWalk:
        step = spec.step_volatility * rng.gaussian();
        break;
      case WalkKind::DriftedWalk:
        step = spec.drift + spec.step_volatility * rng.gaussian();
        break;
      case WalkKind::AR1Walk:
        // First step drawn from the stationary distribution.
        ar_state = (t == 1) ? spec.step_volatility * rng.gaussian()
                            : spec.phi * ar_state + innovation_scale * rng.gaussian();
        step = ar_state;
        break;
    }
    values[t] = values[t - 1] * (1.0 + std::max(step, -0.5));
  }

  return PriceSeries(std::move(values));
}

}  // namespace chartlab

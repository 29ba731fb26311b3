#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chartlab/series.hpp"

namespace chartlab {

enum class WalkKind { GaussianWalk, DriftedWalk, AR1Walk };

std::string to_string(WalkKind kind);
std::optional<WalkKind> walk_from_string(std::string_view name);

// Seeded synthetic daily series. Steps apply multiplicatively,
// I(t+1) = I(t) * (1 + eps_t), with eps_t truncated to >= -0.5 so prices
// stay strictly positive.
struct SyntheticSpec {
  WalkKind kind = WalkKind::GaussianWalk;
  Index length = 1000;
  std::uint64_t seed = 0;
  double start_price = 1000.0;
  double step_volatility = 0.01;  // stationary std of the relative steps
  double drift = 0.0;             // DriftedWalk only
  double phi = 0.0;               // AR1Walk only, |phi| < 1
};

// Deterministic for a fixed spec: same seed, bit-identical series.
PriceSeries generate(const SyntheticSpec& spec);

}  // namespace chartlab

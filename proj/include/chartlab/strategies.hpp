#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "chartlab/rng.hpp"
#include "chartlab/series.hpp"

namespace chartlab {

// The five daily predictors behind one contract: given the full price
// history up to day t (history prefix, last element = I(t)), forecast the
// sign of I(t+1) - I(t). Every tie (zero momentum, flat day, zero MACD
// difference, zero trend slope) resolves to Bullish.
enum class StrategyId { RND, MOM, RSI, UPD, MACD };

inline constexpr std::array<StrategyId, 5> kAllStrategies = {
    StrategyId::RND, StrategyId::MOM, StrategyId::RSI, StrategyId::UPD,
    StrategyId::MACD};

std::string to_string(StrategyId id);
std::optional<StrategyId> strategy_from_string(std::string_view name);

struct MomentumConfig {
  Index tau = 7;  // lag of the momentum difference I(t) - I(t - tau)
};

struct RsiConfig {
  Index tau = 14;           // lookback of the gain/loss ratio
  Index trend_window = 14;  // days of price and RSI trend compared for divergence
};

struct MacdConfig {
  Index fast = 12;
  Index slow = 26;
  Index signal = 9;  // EMA window over the MACD series
};

// One bundle of per-strategy settings; strategies without knobs ignore it.
struct StrategyParams {
  MomentumConfig mom{};
  RsiConfig rsi{};
  MacdConfig macd{};
};

// Smallest day index t at which predict is defined. Tight: predicting at
// min_history succeeds, at min_history - 1 raises HistoryError.
Index min_history(StrategyId id, const StrategyParams& params = {});

// Coin flip from the caller's stream: Bullish with probability 1/2.
Prediction predict_rnd(RngStream& stream);

// Sign of I(t) - I(t - tau).
Prediction predict_mom(ArrayRef history, const MomentumConfig& config = {});

// RSI(t) = 100 - 100 / (1 + RS), RS = summed gains / summed losses of the
// one-day changes over the tau days ending at t. No losses -> 100, no
// changes at all -> 50. Always in [0, 100].
double rsi_value(ArrayRef history, Index t, Index tau);

// Trend of the trend_window days immediately preceding t (OLS slope of the
// price), flipped when the RSI slope over the same days points strictly the
// opposite way (divergence).
Prediction predict_rsi(ArrayRef history, const RsiConfig& config = {});

// Opposite of yesterday's move.
Prediction predict_upd(ArrayRef history);

// Sign of MACD(t) - signal(t), both built from the recursive EMA with
// weight 2/(x+1).
Prediction predict_macd(ArrayRef history, const MacdConfig& config = {});

// Whole-series MACD and signal lines, aligned to day index (NaN before
// validity). Each x-day EMA is seeded with the plain average of its first x
// values at day x-1 and advanced recursively from day x. The MACD series
// starts at day `slow` (the seed-day block average of the slow EMA is not
// part of it); the signal line is seeded on the first `signal` MACD values
// and both are defined from day slow + signal - 1 onward.
struct MacdSeries {
  Array macd;
  Array signal;
  Index first_valid = 0;  // first day with both macd and signal defined
};
MacdSeries macd_series(ArrayRef y, const MacdConfig& config = {});

// Dispatch by id; `rnd` is consumed only by the RND strategy and must be
// non-null for it.
Prediction predict(StrategyId id, ArrayRef history, const StrategyParams& params,
                   RngStream* rnd = nullptr);

enum class Outcome { Win, Loss, Flat };

// Win if the prediction matches the realized direction, Flat on an exactly
// unchanged close (excluded from win percentages downstream).
Outcome evaluate_prediction(Prediction p, double price_today, double price_next);

}  // namespace chartlab

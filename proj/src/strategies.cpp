#include "chartlab/strategies.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "chartlab/errors.hpp"

namespace chartlab {

std::string to_string(StrategyId id) {
  switch (id) {
    case StrategyId::RND: return "RND";
    case StrategyId::MOM: return "MOM";
    case StrategyId::RSI: return "RSI";
    case StrategyId::UPD: return "UPD";
    case StrategyId::MACD: return "MACD";
  }
  return "?";
}

std::optional<StrategyId> strategy_from_string(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = char(std::toupper(static_cast<unsigned char>(c)));
  for (StrategyId id : kAllStrategies)
    if (upper == to_string(id)) return id;
  return std::nullopt;
}

namespace {

void check_mom(const MomentumConfig& config) {
  if (config.tau < 1) throw ParameterError("momentum tau must be >= 1");
}

void check_rsi(const RsiConfig& config) {
  if (config.tau < 2 || config.trend_window < 2)
    throw ParameterError("RSI tau and trend_window must be >= 2");
}

void check_macd(const MacdConfig& config) {
  if (config.fast < 1 || config.fast >= config.slow)
    throw ParameterError("MACD windows must satisfy 1 <= fast < slow");
  if (config.signal < 1) throw ParameterError("MACD signal window must be >= 1");
}

void require_history(Index have_t, Index need_t, const char* who) {
  if (have_t < need_t)
    throw HistoryError(std::string(who) + " needs history through day " +
                       std::to_string(need_t) + ", have " + std::to_string(have_t));
}

// OLS slope of values against 0, 1, ..., m-1.
double ols_slope(ArrayRef values) {
  const Index m = values.size();
  const Array x = Array::LinSpaced(m, 0.0, double(m - 1));
  const double x_mean = x.mean();
  const double v_mean = values.mean();
  return ((x - x_mean) * (values - v_mean)).sum() / (x - x_mean).square().sum();
}

}  // namespace

Index min_history(StrategyId id, const StrategyParams& params) {
  switch (id) {
    case StrategyId::RND: return 0;
    case StrategyId::UPD: return 1;
    case StrategyId::MOM:
      check_mom(params.mom);
      return params.mom.tau;
    case StrategyId::RSI:
      check_rsi(params.rsi);
      return params.rsi.tau + params.rsi.trend_window;
    case StrategyId::MACD:
      check_macd(params.macd);
      return params.macd.slow + params.macd.signal - 1;
  }
  throw ParameterError("unknown strategy id");
}

Prediction predict_rnd(RngStream& stream) {
  return stream.coin() ? Prediction::Bullish : Prediction::Bearish;
}

Prediction predict_mom(ArrayRef history, const MomentumConfig& config) {
  check_mom(config);
  const Index t = history.size() - 1;
  require_history(t, config.tau, "MOM");
  const double momentum = history[t] - history[t - config.tau];
  return momentum < 0.0 ? Prediction::Bearish : Prediction::Bullish;
}

double rsi_value(ArrayRef history, Index t, Index tau) {
  if (tau < 1) throw ParameterError("RSI tau must be >= 1");
  if (t >= history.size())
    throw RangeError("RSI day " + std::to_string(t) + " outside history");
  require_history(t, tau, "RSI");
  const Array changes =
      history.segment(t - tau + 1, tau) - history.segment(t - tau, tau);
  const double gains = changes.max(0.0).sum();
  const double losses = (-changes).max(0.0).sum();
  if (losses == 0.0) return gains == 0.0 ? 50.0 : 100.0;
  return 100.0 - 100.0 / (1.0 + gains / losses);
}

Prediction predict_rsi(ArrayRef history, const RsiConfig& config) {
  check_rsi(config);
  const Index t = history.size() - 1;
  require_history(t, config.tau + config.trend_window, "RSI");

  // Trends over the trend_window days immediately preceding t.
  const Index lo = t - config.trend_window;
  const double price_slope = ols_slope(history.segment(lo, config.trend_window));

  Array rsi(config.trend_window);
  for (Index i = 0; i < config.trend_window; ++i)
    rsi[i] = rsi_value(history, lo + i, config.tau);
  const double rsi_slope = ols_slope(rsi);

  const Prediction baseline =
      price_slope < 0.0 ? Prediction::Bearish : Prediction::Bullish;
  const bool divergence = price_slope * rsi_slope < 0.0;
  if (!divergence) return baseline;
  return baseline == Prediction::Bullish ? Prediction::Bearish
                                         : Prediction::Bullish;
}

Prediction predict_upd(ArrayRef history) {
  const Index t = history.size() - 1;
  require_history(t, 1, "UPD");
  return history[t] > history[t - 1] ? Prediction::Bearish : Prediction::Bullish;
}

MacdSeries macd_series(ArrayRef y, const MacdConfig& config) {
  check_macd(config);
  const Index size = y.size();
  const Index first_valid = config.slow + config.signal - 1;
  if (size <= first_valid)
    throw HistoryError("MACD needs at least " + std::to_string(first_valid + 1) +
                       " days, have " + std::to_string(size));

  const auto ema = [&](ArrayRef z, Index window, Index offset) {
    // Seed at day offset + window - 1 with the plain average of the first
    // window values; recursive updates with weight 2/(window+1) afterwards.
    Array out(size);
    out.setConstant(std::numeric_limits<double>::quiet_NaN());
    const double w = 2.0 / (double(window) + 1.0);
    Index seed_day = offset + window - 1;
    out[seed_day] = z.segment(0, window).mean();
    for (Index t = seed_day + 1; t < offset + z.size(); ++t)
      out[t] = out[t - 1] + w * (z[t - offset] - out[t - 1]);
    return out;
  };

  const Array fast = ema(y, config.fast, 0);
  const Array slow = ema(y, config.slow, 0);

  MacdSeries result;
  result.macd.setConstant(size, std::numeric_limits<double>::quiet_NaN());
  // The slow EMA's seed day holds a plain block average, not yet an
  // exponential average; the MACD series starts with the first recursive
  // update at day `slow`.
  for (Index t = config.slow; t < size; ++t)
    result.macd[t] = fast[t] - slow[t];
  result.signal =
      ema(result.macd.tail(size - config.slow), config.signal, config.slow);
  result.first_valid = first_valid;
  return result;
}

Prediction predict_macd(ArrayRef history, const MacdConfig& config) {
  check_macd(config);
  const Index t = history.size() - 1;
  require_history(t, config.slow + config.signal - 1, "MACD");
  const MacdSeries lines = macd_series(history, config);
  const double difference = lines.macd[t] - lines.signal[t];
  return difference < 0.0 ? Prediction::Bearish : Prediction::Bullish;
}

Prediction predict(StrategyId id, ArrayRef history, const StrategyParams& params,
                   RngStream* rnd) {
  switch (id) {
    case StrategyId::RND:
      if (!rnd) throw ParameterError("RND strategy needs an RngStream");
      return predict_rnd(*rnd);
    case StrategyId::MOM: return predict_mom(history, params.mom);
    case StrategyId::RSI: return predict_rsi(history, params.rsi);
    case StrategyId::UPD: return predict_upd(history);
    case StrategyId::MACD: return predict_macd(history, params.macd);
  }
  throw ParameterError("unknown strategy id");
}

Outcome evaluate_prediction(Prediction p, double price_today, double price_next) {
  if (price_next == price_today) return Outcome::Flat;
  const bool up = price_next > price_today;
  const bool bullish = p == Prediction::Bullish;
  return up == bullish ? Outcome::Win : Outcome::Loss;
}

}  // namespace chartlab

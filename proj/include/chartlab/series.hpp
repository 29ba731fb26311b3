#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartlab/types.hpp"

namespace chartlab {

// Directional forecast for the next daily close. There is no abstain state.
enum class Prediction { Bullish, Bearish };

// Calendar date label attached to a trading day. Labels are opaque ordered
// metadata; no trading-calendar arithmetic happens anywhere.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;

  std::string iso() const;  // YYYY-MM-DD
  static std::optional<Date> parse_iso(std::string_view text);

  // Conversions against days since 1970-01-01.
  static Date from_day_number(long days);
  long day_number() const;
};

// Ordered daily closing values, strictly positive and finite, length >= 2.
// Immutable after construction.
class PriceSeries {
 public:
  explicit PriceSeries(Array values);
  PriceSeries(Array values, std::vector<Date> labels);

  Index size() const { return values_.size(); }
  const Array& values() const { return values_; }
  double operator[](Index t) const { return values_[t]; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Date>& labels() const { return labels_; }

 private:
  Array values_;
  std::vector<Date> labels_;  // empty, or one strictly increasing date per day
};

// Relative daily returns r(t) = (I(t+1) - I(t)) / I(t), length T - 1.
class ReturnsSeries {
 public:
  explicit ReturnsSeries(Array values);

  Index size() const { return values_.size(); }
  const Array& values() const { return values_; }
  double operator[](Index t) const { return values_[t]; }

 private:
  Array values_;
};

ReturnsSeries compute_returns(const PriceSeries& series);

// Population variance (divide by count) of returns[lo, hi).
double volatility(ArrayRef returns, Index lo, Index hi);
double volatility(const ReturnsSeries& returns, Index lo, Index hi);

// FNV-1a over the little-endian bytes of the value array; used as the input
// fingerprint in run metadata.
std::uint64_t fnv1a64(ArrayRef values);
std::string fingerprint(const PriceSeries& series);  // 16 hex digits

}  // namespace chartlab

#include "chartlab/series.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "chartlab/errors.hpp"

namespace chartlab {

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::optional<Date> Date::parse_iso(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  Date d;
  auto field = [&](int from, int to, int& out) {
    auto [ptr, ec] = std::from_chars(text.data() + from, text.data() + to, out);
    return ec == std::errc{} && ptr == text.data() + to;
  };
  if (!field(0, 4, d.year) || !field(5, 7, d.month) || !field(8, 10, d.day))
    return std::nullopt;
  const std::chrono::year_month_day ymd{std::chrono::year{d.year},
                                        std::chrono::month{unsigned(d.month)},
                                        std::chrono::day{unsigned(d.day)}};
  if (!ymd.ok()) return std::nullopt;
  return d;
}

Date Date::from_day_number(long days) {
  const std::chrono::sys_days sd{std::chrono::days{days}};
  const std::chrono::year_month_day ymd{sd};
  return Date{int(ymd.year()), int(unsigned(ymd.month())),
              int(unsigned(ymd.day()))};
}

long Date::day_number() const {
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{unsigned(month)},
                                        std::chrono::day{unsigned(day)}};
  return std::chrono::sys_days{ymd}.time_since_epoch().count();
}

namespace {

void check_prices(const Array& values) {
  if (values.size() < 2)
    throw LengthError("price series needs at least 2 days, got " +
                      std::to_string(values.size()));
  for (Index t = 0; t < values.size(); ++t) {
    if (!std::isfinite(values[t]) || values[t] <= 0.0)
      throw ParameterError("price at day " + std::to_string(t) +
                           " is not a finite positive value");
  }
}

}  // namespace

PriceSeries::PriceSeries(Array values) : values_(std::move(values)) {
  check_prices(values_);
}

PriceSeries::PriceSeries(Array values, std::vector<Date> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
  check_prices(values_);
  if (!labels_.empty()) {
    if (Index(labels_.size()) != values_.size())
      throw ParameterError("label count " + std::to_string(labels_.size()) +
                           " does not match series length " +
                           std::to_string(values_.size()));
    for (std::size_t i = 1; i < labels_.size(); ++i) {
      if (!(labels_[i - 1] < labels_[i]))
        throw OrderingError("date labels not strictly increasing at day " +
                            std::to_string(i));
    }
  }
}

ReturnsSeries::ReturnsSeries(Array values) : values_(std::move(values)) {
  for (Index t = 0; t < values_.size(); ++t) {
    if (!std::isfinite(values_[t]) || values_[t] <= -1.0)
      throw ParameterError("return at index " + std::to_string(t) +
                           " is not a finite value > -1");
  }
}

ReturnsSeries compute_returns(const PriceSeries& series) {
  const Array& y = series.values();
  const Index n = y.size() - 1;
  return ReturnsSeries((y.tail(n) - y.head(n)) / y.head(n));
}

double volatility(ArrayRef returns, Index lo, Index hi) {
  if (lo < 0 || lo >= hi || hi > returns.size())
    throw RangeError("volatility range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + ") invalid for " +
                     std::to_string(returns.size()) + " returns");
  const auto segment = returns.segment(lo, hi - lo);
  const double mean = segment.mean();
  return (segment - mean).square().sum() / double(segment.size());
}

double volatility(const ReturnsSeries& returns, Index lo, Index hi) {
  return volatility(returns.values(), lo, hi);
}

std::uint64_t fnv1a64(ArrayRef values) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (Index t = 0; t < values.size(); ++t) {
    const double v = values[t];
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001B3ULL;
    }
  }
  return h;
}

std::string fingerprint(const PriceSeries& series) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(series.values())));
  return buf;
}

}  // namespace chartlab

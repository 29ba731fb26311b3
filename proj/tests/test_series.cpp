#include <doctest.h>

#include <cmath>
#include <vector>

#include "chartlab/errors.hpp"
#include "chartlab/series.hpp"
#include "chartlab/synthetic.hpp"
#include "oracles.hpp"

using namespace chartlab;

namespace {

Array to_array(const std::vector<double>& v) {
  Array out(Index(v.size()));
  for (Index i = 0; i < out.size(); ++i) out[i] = v[std::size_t(i)];
  return out;
}

std::vector<double> to_vector(ArrayRef a) {
  return {a.data(), a.data() + a.size()};
}

}  // namespace

TEST_CASE("compute_returns on a constant series is all zeros") {
  const PriceSeries series(to_array({100, 100, 100}));
  const ReturnsSeries r = compute_returns(series);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == 0.0);
  CHECK(r[1] == 0.0);
}

TEST_CASE("compute_returns matches the defining ratio") {
  const PriceSeries series(to_array({100, 101}));
  const ReturnsSeries r = compute_returns(series);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("compute_returns agrees with the brute-force oracle on a seeded walk") {
  SyntheticSpec spec;
  spec.length = 1000;
  spec.seed = 21;
  const PriceSeries series = generate(spec);
  const ReturnsSeries r = compute_returns(series);
  const std::vector<double> expected = oracle::returns(to_vector(series.values()));
  REQUIRE(std::size_t(r.size()) == expected.size());
  for (Index t = 0; t < r.size(); ++t)
    CHECK(r[t] == expected[std::size_t(t)]);  // same formula, same floats
}

TEST_CASE("returns are scale-invariant") {
  SyntheticSpec spec;
  spec.length = 300;
  spec.seed = 4;
  const PriceSeries series = generate(spec);
  const PriceSeries scaled(series.values() * 2.5);
  const ReturnsSeries a = compute_returns(series);
  const ReturnsSeries b = compute_returns(scaled);
  for (Index t = 0; t < a.size(); ++t)
    CHECK(b[t] == doctest::Approx(a[t]).epsilon(1e-12));
}

TEST_CASE("PriceSeries rejects invalid input") {
  CHECK_THROWS_AS(PriceSeries(to_array({100})), LengthError);
  CHECK_THROWS_AS(PriceSeries(to_array({100, 0.0})), ParameterError);
  CHECK_THROWS_AS(PriceSeries(to_array({100, -5})), ParameterError);
  CHECK_THROWS_AS(
      PriceSeries(to_array({100, std::numeric_limits<double>::infinity()})),
      ParameterError);
  CHECK_THROWS_AS(
      PriceSeries(to_array({100, std::numeric_limits<double>::quiet_NaN()})),
      ParameterError);
  // Label count mismatch and non-increasing labels.
  CHECK_THROWS_AS(PriceSeries(to_array({100, 101}), {Date{2020, 1, 1}}),
                  ParameterError);
  CHECK_THROWS_AS(
      PriceSeries(to_array({100, 101}), {Date{2020, 1, 2}, Date{2020, 1, 2}}),
      OrderingError);
  CHECK_THROWS_AS(
      PriceSeries(to_array({100, 101}), {Date{2020, 1, 2}, Date{2020, 1, 1}}),
      OrderingError);
}

TEST_CASE("ReturnsSeries rejects returns at or below -1") {
  CHECK_THROWS_AS(ReturnsSeries(to_array({0.5, -1.0})), ParameterError);
  CHECK_NOTHROW(ReturnsSeries(to_array({0.5, -0.999})));
}

TEST_CASE("volatility of a constant segment is zero") {
  const Array r = to_array({0.01, 0.01, 0.01, 0.01});
  CHECK(volatility(r, 0, 4) == 0.0);
}

TEST_CASE("volatility of [0.01, -0.01] is 1e-4") {
  const Array r = to_array({0.01, -0.01});
  CHECK(volatility(r, 0, 2) == doctest::Approx(1e-4).epsilon(1e-12));
}

TEST_CASE("volatility matches the two-pass oracle on 200 seeded returns") {
  SyntheticSpec spec;
  spec.length = 201;
  spec.seed = 77;
  const ReturnsSeries r = compute_returns(generate(spec));
  REQUIRE(r.size() == 200);
  const std::vector<double> v = to_vector(r.values());
  const double expected = oracle::variance(v, 30, 170);
  CHECK(volatility(r, 30, 170) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(volatility(r, 0, 200) ==
        doctest::Approx(oracle::variance(v, 0, 200)).epsilon(1e-12));
}

TEST_CASE("volatility is translation-invariant in returns") {
  SyntheticSpec spec;
  spec.length = 120;
  spec.seed = 8;
  const ReturnsSeries r = compute_returns(generate(spec));
  const Array shifted = r.values() + 0.37;
  CHECK(volatility(shifted, 5, 100) ==
        doctest::Approx(volatility(r.values(), 5, 100)).epsilon(1e-12));
}

TEST_CASE("volatility is non-negative and rejects bad ranges") {
  SyntheticSpec spec;
  spec.length = 50;
  spec.seed = 3;
  const ReturnsSeries r = compute_returns(generate(spec));
  for (Index lo = 0; lo + 1 < r.size(); lo += 7)
    CHECK(volatility(r, lo, r.size()) >= 0.0);
  CHECK_THROWS_AS(volatility(r, 5, 5), RangeError);   // empty
  CHECK_THROWS_AS(volatility(r, 9, 5), RangeError);   // inverted
  CHECK_THROWS_AS(volatility(r, -1, 5), RangeError);  // below range
  CHECK_THROWS_AS(volatility(r, 0, r.size() + 1), RangeError);
}

TEST_CASE("fingerprint is stable, content-keyed, 16 hex digits") {
  SyntheticSpec spec;
  spec.length = 64;
  spec.seed = 5;
  const PriceSeries a = generate(spec);
  spec.seed = 6;
  const PriceSeries b = generate(spec);
  const std::string fa = fingerprint(a);
  CHECK(fa.size() == 16);
  CHECK(fa.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(fa == fingerprint(a));
  CHECK(fa != fingerprint(b));
}

TEST_CASE("Date ISO parsing and ordering") {
  const auto d = Date::parse_iso("2020-02-29");
  REQUIRE(d.has_value());
  CHECK(d->iso() == "2020-02-29");
  CHECK_FALSE(Date::parse_iso("2019-02-29").has_value());  // not a leap year
  CHECK_FALSE(Date::parse_iso("2020-13-01").has_value());
  CHECK_FALSE(Date::parse_iso("20200101").has_value());
  CHECK_FALSE(Date::parse_iso("not-a-date").has_value());
  CHECK(Date{2020, 1, 2} > Date{2020, 1, 1});
  // Day-number round trip across a few thousand days.
  for (long n = -1000; n <= 20000; n += 997)
    CHECK(Date::from_day_number(n).day_number() == n);
  CHECK(Date{1970, 1, 1}.day_number() == 0);
}

#pragma once

#include <string>

#include "chartlab/series.hpp"

namespace chartlab {

// Where and how to read a daily close series from CSV. With has_header =
// false, columns are addressed by index as "0", "1", ...
struct CsvSpec {
  std::string path;
  std::string date_column = "date";
  std::string price_column = "close";
  char delimiter = ',';
  bool has_header = true;
};

// Loads a series in file order. The price column is required; the date
// column is optional (price-only files load without labels). Malformed rows
// abort the load rather than being skipped.
PriceSeries load_csv(const CsvSpec& spec);

// Writes "date,close" rows (or "close" only when the series has no labels),
// prices as 10-significant-digit decimals. load_csv of the result restores
// the same values.
std::string serialize_csv(const PriceSeries& series);
void write_csv(const PriceSeries& series, const std::string& path);

// Locale-independent decimal with 10 significant digits; the one format
// every CSV/JSON number in the toolkit goes through.
std::string format_number(double value);

}  // namespace chartlab

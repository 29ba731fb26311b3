#include "chartlab/csv.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "chartlab/errors.hpp"

namespace chartlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return fields;
}

// Column index for a name; with headerless files names are "0", "1", ...
std::optional<std::size_t> find_column(const std::vector<std::string_view>& header,
                                       bool has_header, const std::string& name) {
  if (has_header) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    return std::nullopt;
  }
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), index);
  if (ec != std::errc{} || ptr != name.data() + name.size()) return std::nullopt;
  if (index >= header.size()) return std::nullopt;
  return index;
}

}  // namespace

PriceSeries load_csv(const CsvSpec& spec) {
  if (spec.price_column.empty() || spec.date_column.empty())
    throw ParameterError("CSV column names must be non-empty");
  if (!std::isprint(static_cast<unsigned char>(spec.delimiter)))
    throw ParameterError("CSV delimiter must be a printable character");

  std::ifstream file(spec.path);
  if (!file) throw IoError("cannot open " + spec.path);

  std::vector<std::string> lines;
  for (std::string line; std::getline(file, line);) {
    if (trim(line).empty()) continue;
    lines.push_back(std::move(line));
  }
  if (lines.empty()) throw LengthError(spec.path + ": empty file");

  const std::vector<std::string_view> first = split(lines.front(), spec.delimiter);
  const std::size_t data_start = spec.has_header ? 1 : 0;

  const auto price_col = find_column(first, spec.has_header, spec.price_column);
  if (!price_col)
    throw SchemaError(spec.path + ": missing column \"" + spec.price_column + "\"");
  const auto date_col = find_column(first, spec.has_header, spec.date_column);

  const std::size_t rows = lines.size() - data_start;
  if (rows < 2)
    throw LengthError(spec.path + ": needs at least 2 data rows, got " +
                      std::to_string(rows));

  Array values(static_cast<Index>(rows));
  std::vector<Date> labels;
  // Dates are all-or-nothing: if the first row's date parses as ISO-8601,
  // every row must; otherwise the column is ignored.
  bool use_dates = false;

  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t line_no = data_start + r + 1;  // 1-based file line
    const auto fields = split(lines[data_start + r], spec.delimiter);
    if (*price_col >= fields.size() || (date_col && *date_col >= fields.size()))
      throw ParseError(spec.path + ": row " + std::to_string(line_no) +
                       " has only " + std::to_string(fields.size()) + " fields");

    const std::string_view cell = fields[*price_col];
    double price = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), price);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
      throw ParseError(spec.path + ": row " + std::to_string(line_no) +
                       ": cannot parse price \"" + std::string(cell) + "\"");
    if (!(price > 0.0) || !std::isfinite(price))
      throw ParseError(spec.path + ": row " + std::to_string(line_no) +
                       ": non-positive price " + std::string(cell));
    values[static_cast<Index>(r)] = price;

    if (date_col) {
      const auto date = Date::parse_iso(fields[*date_col]);
      if (r == 0) {
        use_dates = date.has_value();
      } else if (use_dates && !date) {
        throw ParseError(spec.path + ": row " + std::to_string(line_no) +
                         ": cannot parse date \"" + std::string(fields[*date_col]) +
                         "\" as ISO-8601");
      }
      if (use_dates) {
        if (!labels.empty() && !(labels.back() < *date))
          throw OrderingError(spec.path + ": row " + std::to_string(line_no) +
                              ": date " + date->iso() + " not after " +
                              labels.back().iso());
        labels.push_back(*date);
      }
    }
  }

  return use_dates ? PriceSeries(std::move(values), std::move(labels))
                   : PriceSeries(std::move(values));
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 10);
  return std::string(buf, ptr);
}

std::string serialize_csv(const PriceSeries& series) {
  std::ostringstream out;
  if (series.has_labels()) {
    out << "date,close\n";
    for (Index t = 0; t < series.size(); ++t)
      out << series.labels()[t].iso() << ',' << format_number(series[t]) << '\n';
  } else {
    out << "close\n";
    for (Index t = 0; t < series.size(); ++t)
      out << format_number(series[t]) << '\n';
  }
  return out.str();
}

void write_csv(const PriceSeries& series, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << serialize_csv(series);
  if (!file) throw IoError("write to " + path + " failed");
}

}  // namespace chartlab

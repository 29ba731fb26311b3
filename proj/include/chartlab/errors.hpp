#pragma once

#include <stdexcept>

namespace chartlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration or argument values.
struct ParameterError : Error {
  using Error::Error;
};

// Series too short for the requested operation.
struct LengthError : Error {
  using Error::Error;
};

// Empty or inverted index range.
struct RangeError : Error {
  using Error::Error;
};

// A predictor was asked for a day before its warm-up completes.
struct HistoryError : Error {
  using Error::Error;
};

// CSV is missing a required column.
struct SchemaError : Error {
  using Error::Error;
};

// A CSV cell could not be parsed; message carries the row number.
struct ParseError : Error {
  using Error::Error;
};

// Date labels are not strictly increasing.
struct OrderingError : Error {
  using Error::Error;
};

// Fewer than the minimum usable points for a power-law fit.
struct DegenerateFitError : Error {
  using Error::Error;
};

// A trading window with no countable prediction days.
struct DegenerateWindowError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace chartlab

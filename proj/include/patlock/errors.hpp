#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace patlock {

// Error codes cover every failure mode a caller can hit. Codes that describe
// bad input data map to exit class 2 in the CLI, configuration mistakes to 3.
enum class errc {
  malformed_token,
  index_out_of_range,
  too_short,
  empty_dataset,
  pattern_invalid,
  capacity_exceeded,
  not_a_distribution,
  alpha_out_of_range,
  space_mismatch,
  too_few_groups,
  empty_sample,
  invalid_counts,
  out_of_range,
  invalid_size,
  matrix_malformed,
  pattern_not_in_universe,
  too_few_patterns,
  io_error,
  parse_error,
  invalid_argument,
};

inline std::string_view to_string(errc c) {
  switch (c) {
    case errc::malformed_token: return "MalformedToken";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::too_short: return "TooShort";
    case errc::empty_dataset: return "EmptyDataset";
    case errc::pattern_invalid: return "PatternInvalid";
    case errc::capacity_exceeded: return "CapacityExceeded";
    case errc::not_a_distribution: return "NotADistribution";
    case errc::alpha_out_of_range: return "AlphaOutOfRange";
    case errc::space_mismatch: return "SpaceMismatch";
    case errc::too_few_groups: return "TooFewGroups";
    case errc::empty_sample: return "EmptySample";
    case errc::invalid_counts: return "InvalidCounts";
    case errc::out_of_range: return "OutOfRange";
    case errc::invalid_size: return "InvalidSize";
    case errc::matrix_malformed: return "MatrixMalformed";
    case errc::pattern_not_in_universe: return "PatternNotInUniverse";
    case errc::too_few_patterns: return "TooFewPatterns";
    case errc::io_error: return "IoError";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

// CLI exit classes: 0 success, 2 input error, 3 configuration error.
inline int exit_class(errc c) {
  switch (c) {
    case errc::invalid_argument:
    case errc::alpha_out_of_range:
    case errc::invalid_size:
    case errc::too_few_groups:
    case errc::out_of_range:
    case errc::capacity_exceeded:
      return 3;
    default:
      return 2;
  }
}

}  // namespace patlock

#pragma once

#include <stdexcept>
#include <string>

namespace relrep {

/// Malformed textual input (half-integer strings, rep labels, operator
/// expressions, CLI flag payloads).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Domain or numerical-validity failure: off-shell momenta, non-unimodular
/// matrices where SL(2,C) is required, group elements outside the expected
/// little group, residuals above threshold.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relrep

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "b1/element_set.hpp"

namespace b1 {

enum class ErrorCode {
  NotIdempotent,
  NotAssociative,
  NotCommutative,
  BadIdentity,
  NotAbsorbing,
  NotDistributive,
  DegenerateAlgebra,
  BadTable,
  NotAMorphism,
  NotAMonoid,
  NotACongruence,
  NotAnIdeal,
  NotSaturatedPrime,
  NotMaximal,
  NotPrime,
  Mismatch,
  NotACover,
  EmptyClosedSet,
  NotSober,
  NotMonogenic,
  TrivialGenerator,
  SizeLimit,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness()` carries the offending
/// elements when the failure has one (e.g. the triple breaking distributivity).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<Element> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Element> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Limits for the exhaustive enumerations. Anything beyond raises SizeLimit.
struct Budget {
  std::size_t max_size = 8;                        // carrier size for ideal/congruence enumeration
  unsigned long long max_morphism_candidates = 100'000'000;  // |C|^|A| cap
};

void require_within(const Budget& budget, std::size_t n, std::string_view what);

}  // namespace b1

// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_ERROR_HPP
#define SUBSUM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace subsum {

/// Error categories surfaced through the C API as status codes and through
/// the CLI as named domain errors.
enum class Errc {
  InvalidArgument,
  NotPrime,
  DegreeOutOfRange,
  OrderTooLarge,
  DivisionByZero,
  AmbientMismatch,
  AlreadyFull,
  RangeError,
  TooLarge,
  DimensionTooSmall,
  Disconnected,
  SearchBudgetExceeded,
  ParityError,
  ZeroAnchor,
  AlreadyAdjacent,
  NonIntegerTerm,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace subsum

#endif

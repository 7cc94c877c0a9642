// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <stdexcept>
#include <string>

namespace exnil {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched ambient sizes, indices out of range.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must always hold was violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured degree or size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace exnil

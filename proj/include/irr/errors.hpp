#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// The sampled parameter hit a special value; the caller should resample.
struct BadSample : Error {
  using Error::Error;
};

struct NotZeroDimensional : Error {
  using Error::Error;
};

struct ResourceLimit : Error {
  using Error::Error;
};

struct ValidationFailure : Error {
  using Error::Error;
};

struct DepthExceeded : Error {
  using Error::Error;
};

struct DegenerateParametrization : Error {
  using Error::Error;
};

struct EliminationFailure : Error {
  using Error::Error;
};

struct Instability : Error {
  using Error::Error;
};

struct IllConditioned : Error {
  using Error::Error;
};

struct NonConvergence : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace irr

namespace irr {

// f is constant: there is no map to a curve to take the direct image along.
struct DegenerateInput : Error {
  using Error::Error;
};

}  // namespace irr

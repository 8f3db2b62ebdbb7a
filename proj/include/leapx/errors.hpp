#pragma once

#include <stdexcept>

namespace leapx {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad edge-list input: self-loop or out-of-range endpoint.
struct InvalidGraph : Error {
  using Error::Error;
};

// An eccentricity-dependent quantity was requested on a disconnected graph.
struct DisconnectedGraph : Error {
  using Error::Error;
};

// A join or corona factor that must be connected is not.
struct DisconnectedInput : Error {
  using Error::Error;
};

// A corona was given an H factor with no vertices.
struct EmptyH : Error {
  using Error::Error;
};

// An exhaustive enumeration beyond the configured cap was requested.
struct CapExceeded : Error {
  using Error::Error;
};

struct UnknownClaim : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct UnknownProperty : Error {
  using Error::Error;
};

// Malformed graph6 or edge-list text.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace leapx

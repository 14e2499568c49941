#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cubecx {

using VertexId = std::uint32_t;
using DartId = std::uint32_t;
using EdgeId = std::uint32_t;
using CellId = std::uint32_t;
using HyperplaneId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (unknown id, wrong N, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A search space exceeded its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// A construction broke one of its own invariants.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

// Input could not be parsed or has the wrong schema.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubecx

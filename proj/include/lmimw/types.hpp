#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lmimw {

// Node ids are dense: 0..n-1. All per-node data lives in flat arrays.
using NodeId = std::int32_t;
using Width = std::int32_t;

inline constexpr NodeId kNoNode = -1;

// Malformed or invalid tree input (parse errors, cycles, disconnected input).
class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive oracle was asked to handle an input larger than its guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lmimw

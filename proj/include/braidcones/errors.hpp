#pragma once

#include <stdexcept>
#include <string>

namespace braidcones {

/// Raised when a configured memory budget (ball size, overflow set) would be
/// exceeded. Distinct from any search verdict.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what, int k = 0)
      : std::runtime_error(what), k_reached(k) {}
  int k_reached;
};

}  // namespace braidcones

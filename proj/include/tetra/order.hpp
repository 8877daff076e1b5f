#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

/// Exact group orders. 128 bits covers every group this library builds.
using Order = unsigned __int128;

inline Order checked_mul(Order a, Order b) {
  if (a != 0 && b > static_cast<Order>(-1) / a)
    throw std::overflow_error("group order exceeds 128 bits");
  return a * b;
}

inline std::string to_string(Order v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace tetra

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace compositions {

// Counts grow like 2^(n-1); anything past n = 64 needs arbitrary precision.
// Signed on purpose: inclusion-exclusion sums pass through negative
// intermediates even though every final count is nonnegative.
using BigCount = boost::multiprecision::cpp_int;

// Indices (n, r, m, p, q, k) stay machine-width.
using Index = std::uint64_t;

inline BigCount pow2(Index e) {
  BigCount one = 1;
  return one << static_cast<unsigned>(e);
}

}  // namespace compositions

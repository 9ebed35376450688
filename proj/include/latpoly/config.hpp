#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace latpoly {

// Element of a lattice, identified by its dense index (0 .. size-1).
// An id is only meaningful relative to the lattice that issued it.
using Elem = int;

// Index of a tuple in L^n under the mixed-radix encoding (x1 varies fastest).
using TupleIndex = std::uint64_t;

// Subset of {1..n} as a bitmask; bit i-1 stands for index i.
using SubsetMask = std::uint32_t;

inline constexpr int kDefaultLatticeCap = 64;   // max elements per lattice
inline constexpr int kDefaultBooleanCap = 6;    // max atoms for the subset lattice
inline constexpr std::size_t kDefaultTableBudget = 1'000'000;  // table entries
inline constexpr std::size_t kDefaultEnumBudget = 1'000'000;   // candidate maps / tables
inline constexpr std::size_t kDefaultScanBudget = 100'000'000; // scan loop iterations

// base^exp if it stays <= limit, nullopt otherwise. Never overflows.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                                std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
    if (r > limit) return std::nullopt;
  }
  return r;
}

}  // namespace latpoly

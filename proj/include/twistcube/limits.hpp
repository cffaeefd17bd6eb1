#pragma once

#include <cstddef>

namespace twistcube {

/// Size guards for the exponential and enumerative operations.
struct Limits {
  std::size_t max_length = 20;         // sign-vector sweeps are 2^n
  std::size_t max_points = 1'000'000;  // lattice census size
  std::size_t max_naive_length = 16;   // exhaustive subword enumeration
};

}  // namespace twistcube

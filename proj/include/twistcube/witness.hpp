#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "twistcube/errors.hpp"

namespace twistcube {

enum class WalkKind { diagram_walk, lambda_walk, hesitant_walk, hesitant_lambda_walk };

inline std::string_view to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::diagram_walk: return "diagram_walk";
    case WalkKind::lambda_walk: return "lambda_walk";
    case WalkKind::hesitant_walk: return "hesitant_walk";
    case WalkKind::hesitant_lambda_walk: return "hesitant_lambda_walk";
  }
  return "?";
}

inline WalkKind parse_walk_kind(std::string_view text) {
  for (auto k : {WalkKind::diagram_walk, WalkKind::lambda_walk, WalkKind::hesitant_walk,
                 WalkKind::hesitant_lambda_walk}) {
    if (to_string(k) == text) return k;
  }
  throw ParseError("unknown walk kind '" + std::string(text) + "'");
}

/// Strictly increasing 1-based positions j_0 < j_1 < ... < j_s into a word.
struct WalkWitness {
  std::vector<std::size_t> positions;
  WalkKind kind = WalkKind::hesitant_lambda_walk;

  friend bool operator==(const WalkWitness&, const WalkWitness&) = default;
};

/// Throws IndexOutOfRange unless positions are strictly increasing in [1, n].
inline void check_positions(const std::vector<std::size_t>& positions, std::size_t n) {
  for (std::size_t t = 0; t < positions.size(); ++t) {
    if (positions[t] < 1 || positions[t] > n) {
      throw IndexOutOfRange("witness position " + std::to_string(positions[t]) + " outside [1, " + std::to_string(n) +
                            "]");
    }
    if (t > 0 && positions[t] <= positions[t - 1]) throw IndexOutOfRange("witness positions must strictly increase");
  }
}

}  // namespace twistcube

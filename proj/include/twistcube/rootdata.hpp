#pragma once

// Dynkin diagrams and Cartan pairings for the finite root systems.
//
// Roots are indexed 1..rank with the standard (Bourbaki/Humphreys) labeling.
// In particular the E-series hangs vertex 2 off vertex 4, and the arrow on
// the multiple edge of B, C, F and G decides which off-diagonal entry carries
// the -2 or -3.
//
// cartan_pairing(t, i, j) is <alpha_i, alpha_j^vee>, i.e. row i, column j of
// the Cartan matrix as usually printed:
//
//   B_r : entry(r-1, r) = -2      C_r : entry(r, r-1) = -2
//   F_4 : entry(2, 3)   = -2      G_2 : entry(2, 1)   = -3

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "twistcube/errors.hpp"

namespace twistcube {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline constexpr int kDefaultMaxRank = 32;

class LieType {
 public:
  LieType() = default;

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  std::string to_string() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  friend LieType validate_lie_type(Family, int, int);
  LieType(Family f, int r) : family_(f), rank_(r) {}

  Family family_ = Family::A;
  int rank_ = 1;
};

namespace detail {

inline std::string rank_bound(Family f) {
  switch (f) {
    case Family::A: return "r >= 1";
    case Family::B: return "r >= 2";
    case Family::C: return "r >= 3";
    case Family::D: return "r >= 4";
    case Family::E: return "r in {6, 7, 8}";
    case Family::F: return "r = 4";
    case Family::G: return "r = 2";
  }
  return "?";
}

inline bool rank_admissible(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B: return r >= 2;
    case Family::C: return r >= 3;
    case Family::D: return r >= 4;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

inline bool is_family_letter(char c) { return c >= 'A' && c <= 'G'; }

}  // namespace detail

/// Returns the LieType for (family, rank) or throws RankOutOfRange naming the
/// permitted bound. `max_rank` caps the open-ended families A-D.
inline LieType validate_lie_type(Family family, int rank, int max_rank = kDefaultMaxRank) {
  if (!detail::rank_admissible(family, rank)) {
    throw RankOutOfRange(std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                         ": rank out of range, requires " + detail::rank_bound(family));
  }
  if (rank > max_rank) {
    throw RankOutOfRange(std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                         ": rank exceeds configured maximum " + std::to_string(max_rank));
  }
  return LieType(family, rank);
}

/// Parses "A5", "E7", "G2": a family letter immediately followed by a decimal
/// rank without sign or leading zeros.
inline LieType parse_lie_type(std::string_view text, int max_rank = kDefaultMaxRank) {
  if (text.size() < 2 || !detail::is_family_letter(text[0])) {
    throw ParseError("malformed Lie type '" + std::string(text) + "'");
  }
  std::string_view digits = text.substr(1);
  if (digits[0] == '0' || digits.size() > 4) throw ParseError("malformed Lie type '" + std::string(text) + "'");
  int rank = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw ParseError("malformed Lie type '" + std::string(text) + "'");
    rank = rank * 10 + (ch - '0');
  }
  return validate_lie_type(static_cast<Family>(text[0]), rank, max_rank);
}

namespace detail {

inline void check_root_index(const LieType& t, int i) {
  if (i < 1 || i > t.rank()) {
    throw IndexOutOfRange("root index " + std::to_string(i) + " outside [1, " + std::to_string(t.rank()) + "] for " +
                          t.to_string());
  }
}

// Unordered edge test on the Dynkin diagram, i != j.
inline bool dynkin_edge(const LieType& t, int i, int j) {
  const int r = t.rank();
  const int lo = i < j ? i : j;
  const int hi = i < j ? j : i;
  switch (t.family()) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      return hi - lo == 1;
    case Family::D:
      return (hi - lo == 1 && hi <= r - 1) || (lo == r - 2 && hi == r);
    case Family::E:
      return (lo == 1 && hi == 3) || (lo == 2 && hi == 4) || (lo >= 3 && hi - lo == 1);
  }
  return false;
}

}  // namespace detail

/// <alpha_i, alpha_j^vee>, 1-based.
inline int cartan_pairing(const LieType& t, int i, int j) {
  detail::check_root_index(t, i);
  detail::check_root_index(t, j);
  if (i == j) return 2;
  if (!detail::dynkin_edge(t, i, j)) return 0;
  const int r = t.rank();
  switch (t.family()) {
    case Family::B:
      return (i == r - 1 && j == r) ? -2 : -1;
    case Family::C:
      return (i == r && j == r - 1) ? -2 : -1;
    case Family::F:
      return (i == 2 && j == 3) ? -2 : -1;
    case Family::G:
      return (i == 2 && j == 1) ? -3 : -1;
    default:
      return -1;
  }
}

/// True iff i != j and the two roots share a Dynkin edge.
inline bool adjacent(const LieType& t, int i, int j) { return i != j && cartan_pairing(t, i, j) < 0; }

/// Dense row-major Cartan matrix, 1-based accessors.
class CartanTable {
 public:
  explicit CartanTable(const LieType& t) : rank_(t.rank()), entries_(static_cast<std::size_t>(rank_ * rank_)) {
    for (int i = 1; i <= rank_; ++i) {
      for (int j = 1; j <= rank_; ++j) entries_[index(i, j)] = cartan_pairing(t, i, j);
    }
  }

  int rank() const noexcept { return rank_; }

  int entry(int i, int j) const {
    if (i < 1 || i > rank_ || j < 1 || j > rank_) throw IndexOutOfRange("Cartan table index out of range");
    return entries_[index(i, j)];
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rank_));
    for (int i = 1; i <= rank_; ++i) {
      for (int j = 1; j <= rank_; ++j) out[static_cast<std::size_t>(i - 1)].push_back(entries_[index(i, j)]);
    }
    return out;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * rank_ + (j - 1)); }

  int rank_;
  std::vector<int> entries_;
};

/// Every admissible Lie type with rank <= max_rank, in family-then-rank order.
inline std::vector<LieType> all_lie_types(int max_rank) {
  std::vector<LieType> out;
  for (char f : std::string_view("ABCDEFG")) {
    for (int r = 1; r <= max_rank; ++r) {
      if (detail::rank_admissible(static_cast<Family>(f), r)) out.push_back(validate_lie_type(static_cast<Family>(f), r, max_rank));
    }
  }
  return out;
}

}  // namespace twistcube

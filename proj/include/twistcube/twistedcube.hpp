#pragma once

// The twisted cube C(c, ell) in R^n and its density.
//
//   A_n(x) = ell_n,   A_j(x) = ell_j - sum_{k>j} c_{jk} x_k
//   x in C  <=>  for every j:  A_j(x) < x_j < 0   or   0 <= x_j <= A_j(x)
//   rho(x)  =  (-1)^n prod_k sgn(x_k) on C, 0 elsewhere, with sgn(x) = +1 for
//              x < 0 and -1 for x >= 0 (note sgn(0) = -1)
//
// Membership works over exact rationals so non-lattice points can be probed;
// the lattice census stays in 64-bit integers.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "twistcube/errors.hpp"
#include "twistcube/limits.hpp"
#include "twistcube/weightword.hpp"

namespace twistcube {

using Rational = boost::rational<std::int64_t>;

template <typename T>
concept Coordinate = std::same_as<T, std::int64_t> || std::same_as<T, Rational>;

using Point = std::vector<Rational>;
using LatticePoint = std::vector<std::int64_t>;

namespace detail {

inline std::int64_t sub_mul(std::int64_t acc, std::int64_t c, std::int64_t x) {
  return checked_sub(acc, checked_mul(c, x));
}
inline Rational sub_mul(const Rational& acc, std::int64_t c, const Rational& x) { return acc - c * x; }

template <Coordinate T>
void check_dimension(const TwistData& d, const std::vector<T>& x) {
  if (x.size() != d.size()) {
    throw DimensionMismatch("point has dimension " + std::to_string(x.size()) + " but the cube has n = " +
                            std::to_string(d.size()));
  }
}

// The per-coordinate condition of C, given a = A_j(x). This and
// admissible_integer_range below are the only places the open/closed split
// lives.
template <Coordinate T>
bool coordinate_admissible(const T& x, const T& a) {
  const T zero(0);
  return (a < x && x < zero) || (zero <= x && x <= a);
}

// Integer solutions of coordinate_admissible(x, a) as a closed range [lo, hi];
// empty when lo > hi (that is a == -1).
inline std::pair<std::int64_t, std::int64_t> admissible_integer_range(std::int64_t a) {
  if (a >= 0) return {0, a};
  return {a + 1, -1};
}

}  // namespace detail

/// A_j(x) for 1 <= j <= n. Reads only x_{j+1}, ..., x_n.
template <Coordinate T>
T eval_A(const TwistData& d, std::size_t j, const std::vector<T>& x) {
  detail::check_dimension(d, x);
  T acc(d.ell(j));
  for (std::size_t k = j + 1; k <= d.size(); ++k) acc = detail::sub_mul(acc, d.c(j, k), x[k - 1]);
  return acc;
}

template <Coordinate T>
bool contains(const TwistData& d, const std::vector<T>& x) {
  detail::check_dimension(d, x);
  for (std::size_t j = 1; j <= d.size(); ++j) {
    if (!detail::coordinate_admissible(x[j - 1], eval_A(d, j, x))) return false;
  }
  return true;
}

/// rho(x) in {-1, 0, +1}.
template <Coordinate T>
int density(const TwistData& d, const std::vector<T>& x) {
  if (!contains(d, x)) return 0;
  int sign = d.size() % 2 == 0 ? 1 : -1;
  for (const T& v : x) {
    if (!(v < T(0))) sign = -sign;
  }
  return sign;
}

/// x in P_D, i.e. 0 <= x_j <= A_j(x) for every j.
template <Coordinate T>
bool contains_PD(const TwistData& d, const std::vector<T>& x) {
  detail::check_dimension(d, x);
  for (std::size_t j = 1; j <= d.size(); ++j) {
    if (x[j - 1] < T(0) || eval_A(d, j, x) < x[j - 1]) return false;
  }
  return true;
}

struct CensusPoint {
  LatticePoint x;
  int rho = 0;

  friend bool operator==(const CensusPoint&, const CensusPoint&) = default;
};

struct LatticeCensus {
  std::vector<CensusPoint> points;  // lexicographic in x
  std::size_t positive = 0;
  std::size_t negative = 0;

  std::int64_t signed_count() const {
    return static_cast<std::int64_t>(positive) - static_cast<std::int64_t>(negative);
  }
};

/// Every integer point of C(c, ell) with its density, sorted lexicographically.
///
/// Coordinates are fixed back to front: once x_{j+1..n} are chosen, A_j is a
/// known integer a and x_j ranges over {0..a} (a >= 0) or {a+1..-1} (a < 0).
inline LatticeCensus lattice_points(const TwistData& d, const Limits& limits = {}) {
  const std::size_t n = d.size();
  if (n > limits.max_length) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the census cap " + std::to_string(limits.max_length));
  }
  LatticeCensus census;
  LatticePoint x(n, 0);

  auto descend = [&](auto&& self, std::size_t j) -> void {
    if (j == 0) {
      if (census.points.size() >= limits.max_points) {
        throw CapExceeded("lattice census exceeds " + std::to_string(limits.max_points) + " points");
      }
      census.points.push_back({x, density(d, x)});
      return;
    }
    const auto [lo, hi] = detail::admissible_integer_range(eval_A(d, j, x));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[j - 1] = v;
      self(self, j - 1);
    }
    x[j - 1] = 0;
  };
  descend(descend, n);

  std::sort(census.points.begin(), census.points.end(),
            [](const CensusPoint& a, const CensusPoint& b) { return a.x < b.x; });
  for (const auto& p : census.points) {
    if (p.rho > 0) {
      ++census.positive;
    } else if (p.rho < 0) {
      ++census.negative;
    }
  }
  return census;
}

inline std::int64_t signed_count(const TwistData& d, const Limits& limits = {}) {
  return lattice_points(d, limits).signed_count();
}

}  // namespace twistcube

#pragma once

// Words in the simple reflections, dominant weights, and the integer data
// (c, ell) that defines one twisted cube.
//
// Pairing order, the single easiest thing to get wrong here:
//
//   c_{jk} = <beta_k, beta_j^vee> = cartan_pairing(t, i_k, i_j)
//
// i.e. row i_k, column i_j of the Cartan matrix. In B3 the word (3, 2) gives
// c_{12} = <alpha_2, alpha_3^vee> = -2, not -1. This is the orientation under
// which a walk 3 -> 2 -> 1 in B_r doubles the Cartier entry at the long root.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twistcube/errors.hpp"
#include "twistcube/rootdata.hpp"

namespace twistcube {

/// A sequence (i_1, ..., i_n) of 1-based root indices.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : letters_(letters) {}
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// 1-based.
  int letter(std::size_t j) const {
    if (j < 1 || j > letters_.size()) {
      throw IndexOutOfRange("word position " + std::to_string(j) + " outside [1, " + std::to_string(size()) + "]");
    }
    return letters_[j - 1];
  }

  std::span<const int> letters() const noexcept { return letters_; }

  /// The subword at the given 1-based, strictly increasing positions.
  Word subword(std::span<const std::size_t> positions) const {
    std::vector<int> out;
    out.reserve(positions.size());
    for (std::size_t p : positions) out.push_back(letter(p));
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// lambda = sum_i lambda_i varpi_i with every lambda_i >= 0.
class DominantWeight {
 public:
  DominantWeight() = default;
  DominantWeight(std::initializer_list<std::int64_t> coefficients)
      : DominantWeight(std::vector<std::int64_t>(coefficients)) {}
  explicit DominantWeight(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      if (coefficients_[i] < 0) {
        throw PreconditionViolated("weight coefficient " + std::to_string(i + 1) + " is negative; weights must be dominant");
      }
    }
  }

  /// varpi_i scaled by `multiple`, in rank r.
  static DominantWeight fundamental(int rank, int i, std::int64_t multiple = 1) {
    if (i < 1 || i > rank) throw IndexOutOfRange("fundamental weight index out of range");
    std::vector<std::int64_t> c(static_cast<std::size_t>(rank), 0);
    c[static_cast<std::size_t>(i - 1)] = multiple;
    return DominantWeight(std::move(c));
  }

  int rank() const noexcept { return static_cast<int>(coefficients_.size()); }

  /// 1-based.
  std::int64_t coefficient(int i) const {
    if (i < 1 || i > rank()) {
      throw IndexOutOfRange("weight index " + std::to_string(i) + " outside [1, " + std::to_string(rank()) + "]");
    }
    return coefficients_[static_cast<std::size_t>(i - 1)];
  }

  std::span<const std::int64_t> coefficients() const noexcept { return coefficients_; }

  DominantWeight scaled(std::int64_t factor) const {
    std::vector<std::int64_t> c = coefficients_;
    for (auto& v : c) v = detail::checked_mul(v, factor);
    return DominantWeight(std::move(c));
  }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

/// True iff alpha_i appears in lambda, i.e. lambda_i > 0.
inline bool appears_in_lambda(const DominantWeight& lambda, int i) { return lambda.coefficient(i) > 0; }

/// Throws DimensionMismatch unless every letter of w is a root of t.
inline void validate_word(const LieType& t, const Word& w) {
  for (std::size_t j = 1; j <= w.size(); ++j) {
    const int i = w.letter(j);
    if (i < 1 || i > t.rank()) {
      throw DimensionMismatch("word letter " + std::to_string(i) + " at position " + std::to_string(j) +
                              " is not a root index of " + t.to_string());
    }
  }
}

inline void validate_weight(const LieType& t, const DominantWeight& lambda) {
  if (lambda.rank() != t.rank()) {
    throw DimensionMismatch("weight has " + std::to_string(lambda.rank()) + " coefficients but " + t.to_string() +
                            " has rank " + std::to_string(t.rank()));
  }
}

/// The constants {c_jk}_{j<k} and (ell_1, ..., ell_n) of one twisted cube.
/// Raw construction accepts arbitrary integers.
class TwistData {
 public:
  TwistData() = default;
  explicit TwistData(std::size_t n) : n_(n), c_(n * n, 0), ell_(n, 0) {}
  explicit TwistData(std::vector<std::int64_t> ell) : n_(ell.size()), c_(n_ * n_, 0), ell_(std::move(ell)) {}

  std::size_t size() const noexcept { return n_; }

  /// c_{jk}, requires 1 <= j < k <= n.
  std::int64_t c(std::size_t j, std::size_t k) const { return c_[pair_index(j, k)]; }
  void set_c(std::size_t j, std::size_t k, std::int64_t value) { c_[pair_index(j, k)] = value; }

  std::int64_t ell(std::size_t j) const { return ell_[single_index(j)]; }
  void set_ell(std::size_t j, std::int64_t value) { ell_[single_index(j)] = value; }

  std::span<const std::int64_t> ells() const noexcept { return ell_; }

  friend bool operator==(const TwistData&, const TwistData&) = default;

 private:
  std::size_t single_index(std::size_t j) const {
    if (j < 1 || j > n_) {
      throw IndexOutOfRange("index " + std::to_string(j) + " outside [1, " + std::to_string(n_) + "]");
    }
    return j - 1;
  }

  std::size_t pair_index(std::size_t j, std::size_t k) const {
    if (j < 1 || k > n_ || j >= k) {
      throw IndexOutOfRange("c index (" + std::to_string(j) + "," + std::to_string(k) + ") requires 1 <= j < k <= " +
                            std::to_string(n_));
    }
    return (j - 1) * n_ + (k - 1);
  }

  std::size_t n_ = 0;
  std::vector<std::int64_t> c_;  // dense n x n, only the strict upper triangle is used
  std::vector<std::int64_t> ell_;
};

/// c_{jk} = <beta_k, beta_j^vee>, ell_j = lambda_{i_j}.
inline TwistData derive_twist_data(const LieType& t, const Word& w, const DominantWeight& lambda) {
  validate_weight(t, lambda);
  validate_word(t, w);
  const std::size_t n = w.size();
  TwistData d(n);
  for (std::size_t j = 1; j <= n; ++j) {
    d.set_ell(j, lambda.coefficient(w.letter(j)));
    for (std::size_t k = j + 1; k <= n; ++k) d.set_c(j, k, cartan_pairing(t, w.letter(k), w.letter(j)));
  }
  return d;
}

}  // namespace twistcube

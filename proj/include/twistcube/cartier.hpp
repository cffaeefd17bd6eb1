#pragma once

// Cartier data m_sigma and the untwistedness test.
//
// For a sign vector sigma in {+,-}^n the integer vector m_sigma is built back
// to front:
//
//   m_{sigma,k} = 0                                    if sigma_k = +
//   m_{sigma,k} = A_k(m_{sigma,k+1}, ..., m_{sigma,n}) if sigma_k = -
//
// The cube is untwisted iff every entry of every m_sigma is >= 0. Both
// constructive directions live here as well: from a failing (sigma, k) to a
// chain of indices shaped like a hesitant lambda-walk, and from a minimal
// hesitant lambda-walk to a sign vector with a negative entry.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "twistcube/errors.hpp"
#include "twistcube/limits.hpp"
#include "twistcube/weightword.hpp"
#include "twistcube/witness.hpp"

namespace twistcube {

enum class Sign : char { plus = '+', minus = '-' };

class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t n, Sign fill = Sign::plus) : signs_(n, fill) {}
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  /// Parses a string of '+' and '-', position 1 first.
  static SignVector parse(std::string_view text) {
    std::vector<Sign> s;
    s.reserve(text.size());
    for (char ch : text) {
      if (ch == '+') {
        s.push_back(Sign::plus);
      } else if (ch == '-') {
        s.push_back(Sign::minus);
      } else {
        throw ParseError("sign vector must consist of '+' and '-', got '" + std::string(text) + "'");
      }
    }
    return SignVector(std::move(s));
  }

  /// Minus exactly at the given 1-based positions.
  static SignVector minus_at(std::size_t n, const std::vector<std::size_t>& positions) {
    SignVector s(n);
    for (std::size_t p : positions) s.set(p, Sign::minus);
    return s;
  }

  /// The sign vector with index `bits` in lexicographic order ('+' < '-'):
  /// bit n-1 of `bits` is position 1.
  static SignVector from_index(std::size_t n, std::uint64_t bits) {
    SignVector s(n);
    for (std::size_t k = 1; k <= n; ++k) {
      if ((bits >> (n - k)) & 1u) s.signs_[k - 1] = Sign::minus;
    }
    return s;
  }

  std::size_t size() const noexcept { return signs_.size(); }

  Sign at(std::size_t k) const {
    if (k < 1 || k > signs_.size()) throw IndexOutOfRange("sign position out of range");
    return signs_[k - 1];
  }
  void set(std::size_t k, Sign s) {
    if (k < 1 || k > signs_.size()) throw IndexOutOfRange("sign position out of range");
    signs_[k - 1] = s;
  }

  std::string to_string() const {
    std::string out;
    for (Sign s : signs_) out.push_back(static_cast<char>(s));
    return out;
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<Sign> signs_;
};

/// m_sigma; index 0 holds m_{sigma,1}.
using CartierVector = std::vector<std::int64_t>;

struct TwistWitness {
  SignVector sigma;
  std::size_t k = 0;  // 1-based, m_{sigma,k} < 0
  CartierVector m;
};

struct UntwistResult {
  bool untwisted = true;
  std::optional<TwistWitness> witness;  // present iff !untwisted
};

inline CartierVector compute_m(const TwistData& d, const SignVector& sigma) {
  const std::size_t n = d.size();
  if (sigma.size() != n) {
    throw DimensionMismatch("sign vector has length " + std::to_string(sigma.size()) + " but n = " + std::to_string(n));
  }
  CartierVector m(n, 0);
  for (std::size_t k = n; k >= 1; --k) {
    if (sigma.at(k) == Sign::plus) continue;
    std::int64_t v = d.ell(k);
    for (std::size_t p = k + 1; p <= n; ++p) {
      if (m[p - 1] != 0) v = detail::checked_sub(v, detail::checked_mul(d.c(k, p), m[p - 1]));
    }
    m[k - 1] = v;
  }
  return m;
}

namespace detail {

inline std::optional<std::size_t> first_negative(const CartierVector& m) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] < 0) return k + 1;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> last_negative(const CartierVector& m) {
  for (std::size_t k = m.size(); k >= 1; --k) {
    if (m[k - 1] < 0) return k;
  }
  return std::nullopt;
}

struct SweepHit {
  std::uint64_t index;
  std::size_t k;
};

// First failing sign vector with index in [begin, end).
inline std::optional<SweepHit> sweep_range(const TwistData& d, std::uint64_t begin, std::uint64_t end) {
  for (std::uint64_t bits = begin; bits < end; ++bits) {
    const CartierVector m = compute_m(d, SignVector::from_index(d.size(), bits));
    if (auto k = first_negative(m)) return SweepHit{bits, *k};
  }
  return std::nullopt;
}

}  // namespace detail

/// Sweeps all 2^n sign vectors. On failure the witness is the
/// lexicographically first (sigma, k) with m_{sigma,k} < 0, whatever `jobs`.
inline UntwistResult is_untwisted(const TwistData& d, const Limits& limits = {}, unsigned jobs = 1) {
  const std::size_t n = d.size();
  if (n > limits.max_length || n >= 63) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the sign-vector sweep cap " +
                      std::to_string(limits.max_length));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::optional<detail::SweepHit> hit;

  if (jobs <= 1 || total < 1024) {
    hit = detail::sweep_range(d, 0, total);
  } else {
    const std::uint64_t workers = std::min<std::uint64_t>(jobs, total);
    std::vector<std::optional<detail::SweepHit>> found(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            found[w] = detail::sweep_range(d, total * w / workers, total * (w + 1) / workers);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    // chunks are in increasing index order, so the first chunk with a hit wins
    for (auto& f : found) {
      if (f) {
        hit = f;
        break;
      }
    }
  }

  UntwistResult result;
  if (hit) {
    SignVector sigma = SignVector::from_index(n, hit->index);
    CartierVector m = compute_m(d, sigma);
    result.untwisted = false;
    result.witness = TwistWitness{std::move(sigma), hit->k, std::move(m)};
  }
  return result;
}

namespace detail {

// Greedy chain from a positive entry: j_1 = k; while ell_{j_t} = 0 take the
// minimal j > j_t with c_{j_t j} < 0 and m_j > 0. Ends at an index with
// ell > 0.
inline std::vector<std::size_t> positive_entry_chain(const TwistData& d, const CartierVector& m, std::size_t k) {
  std::vector<std::size_t> chain{k};
  std::size_t j = k;
  while (d.ell(j) <= 0) {
    if (d.ell(j) < 0) throw PreconditionViolated("chain reached a negative ell at index " + std::to_string(j));
    std::optional<std::size_t> next;
    for (std::size_t q = j + 1; q <= d.size(); ++q) {
      if (d.c(j, q) < 0 && m[q - 1] > 0) {
        next = q;
        break;
      }
    }
    if (!next) throw PreconditionViolated("no index q > " + std::to_string(j) + " with c < 0 and m_q > 0");
    j = *next;
    chain.push_back(j);
  }
  return chain;
}

inline void check_word_context(const TwistData& d, const Word* word) {
  if (word != nullptr && word->size() != d.size()) {
    throw DimensionMismatch("word length " + std::to_string(word->size()) + " does not match n = " +
                            std::to_string(d.size()));
  }
}

}  // namespace detail

/// From a failing (sigma, k) to a chain j_0 = k < j_1 < ... < j_s with
/// c_{j_0 j_1} > 0, c_{j_t j_{t+1}} < 0 and ell_{j_s} > 0. k is first moved to
/// the maximal failing index of sigma. `word` is only checked for length; the
/// positions index into it.
inline WalkWitness hesitant_walk_from_twist_witness(const TwistData& d, const Word* word, const SignVector& sigma,
                                                    std::size_t k) {
  detail::check_word_context(d, word);
  const CartierVector m = compute_m(d, sigma);
  if (k < 1 || k > d.size()) throw IndexOutOfRange("k outside [1, n]");
  if (m[k - 1] >= 0) {
    throw PreconditionViolated("m_{sigma," + std::to_string(k) + "} = " + std::to_string(m[k - 1]) + " is not negative");
  }
  const std::size_t top = *detail::last_negative(m);

  std::optional<std::size_t> p;
  for (std::size_t q = top + 1; q <= d.size(); ++q) {
    if (d.c(top, q) > 0 && m[q - 1] > 0) {
      p = q;
      break;
    }
  }
  if (!p) throw PreconditionViolated("no p > k with c_{kp} > 0 and m_p > 0 (is ell nonnegative?)");

  WalkWitness out;
  out.kind = WalkKind::hesitant_lambda_walk;
  out.positions.push_back(top);
  for (std::size_t j : detail::positive_entry_chain(d, m, *p)) out.positions.push_back(j);
  return out;
}

inline WalkWitness hesitant_walk_from_twist_witness(const TwistData& d, const Word& word, const SignVector& sigma,
                                                    std::size_t k) {
  return hesitant_walk_from_twist_witness(d, &word, sigma, k);
}

/// Sign vector with minus exactly on a minimal hesitant lambda-walk J, and its
/// m_sigma. m_{sigma, j_0} < 0 is checked, not assumed.
inline std::pair<SignVector, CartierVector> witness_sigma_from_walk(const TwistData& d,
                                                                    const std::vector<std::size_t>& walk) {
  check_positions(walk, d.size());
  if (walk.size() < 2) throw NotMinimalWitness("a hesitant walk has at least two positions");
  const std::size_t s = walk.size() - 1;
  auto fail = [](const std::string& why) { throw NotMinimalWitness("not a minimal hesitant walk: " + why); };

  if (d.c(walk[0], walk[1]) <= 1) fail("c_{j0 j1} must exceed 1 (repeated root)");
  if (d.ell(walk[s]) <= 0) fail("final ell must be positive");
  for (std::size_t t = 1; t < s; ++t) {
    if (d.c(walk[t], walk[t + 1]) >= 0) fail("consecutive walking steps must have c < 0");
  }
  for (std::size_t p = 1; p <= s; ++p) {
    for (std::size_t q = p + 2; q <= s; ++q) {
      if (d.c(walk[p], walk[q]) != 0) fail("walking component revisits or short-cuts the diagram");
    }
  }
  if (s >= 2) {
    for (std::size_t p = 0; p < s; ++p) {
      if (d.ell(walk[p]) != 0) fail("a non-final root appears in lambda");
    }
  } else if (d.ell(walk[0]) != d.ell(walk[1])) {
    fail("length-2 walk needs equal ell at both positions");
  }

  SignVector sigma = SignVector::minus_at(d.size(), walk);
  CartierVector m = compute_m(d, sigma);
  if (m[walk[0] - 1] >= 0) fail("m_{sigma,j0} = " + std::to_string(m[walk[0] - 1]) + " is not negative");
  return {std::move(sigma), std::move(m)};
}

}  // namespace twistcube

#pragma once

// Walk combinatorics on words over a Dynkin diagram.
//
//   diagram walk          consecutive letters distinct and adjacent, n >= 1
//   lambda-walk           diagram walk whose final root appears in lambda
//   hesitant lambda-walk  (i_0, i_1, ..., i_s) with i_0 = i_1, s >= 1, and
//                         (i_1, ..., i_s) a lambda-walk (the walking component)
//
// A word avoids hesitant lambda-walks when no subsequence is one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistcube/cartier.hpp"
#include "twistcube/errors.hpp"
#include "twistcube/limits.hpp"
#include "twistcube/rootdata.hpp"
#include "twistcube/weightword.hpp"
#include "twistcube/witness.hpp"

namespace twistcube {

inline bool is_diagram_walk(const LieType& t, const Word& w) {
  validate_word(t, w);
  if (w.empty()) return false;
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (!adjacent(t, w.letter(j), w.letter(j + 1))) return false;
  }
  return true;
}

inline bool is_lambda_walk(const LieType& t, const Word& w, const DominantWeight& lambda) {
  validate_weight(t, lambda);
  return is_diagram_walk(t, w) && appears_in_lambda(lambda, w.letter(w.size()));
}

namespace detail {

inline Word walking_component(const Word& w) {
  std::vector<int> rest(w.letters().begin() + 1, w.letters().end());
  return Word(std::move(rest));
}

}  // namespace detail

inline bool is_hesitant_walk(const LieType& t, const Word& w) {
  validate_word(t, w);
  if (w.size() < 2 || w.letter(1) != w.letter(2)) return false;
  return is_diagram_walk(t, detail::walking_component(w));
}

inline bool is_hesitant_lambda_walk(const LieType& t, const Word& w, const DominantWeight& lambda) {
  validate_weight(t, lambda);
  validate_word(t, w);
  if (w.size() < 2 || w.letter(1) != w.letter(2)) return false;
  return is_lambda_walk(t, detail::walking_component(w), lambda);
}

/// True iff the witness' subword satisfies the predicate of its kind.
inline bool validates(const LieType& t, const Word& w, const DominantWeight& lambda, const WalkWitness& witness) {
  try {
    check_positions(witness.positions, w.size());
  } catch (const IndexOutOfRange&) {
    return false;
  }
  const Word sub = w.subword(witness.positions);
  switch (witness.kind) {
    case WalkKind::diagram_walk: return is_diagram_walk(t, sub);
    case WalkKind::lambda_walk: return is_lambda_walk(t, sub, lambda);
    case WalkKind::hesitant_walk: return is_hesitant_walk(t, sub);
    case WalkKind::hesitant_lambda_walk: return is_hesitant_lambda_walk(t, sub, lambda);
  }
  return false;
}

/// Canonical hesitant lambda-walk inside w, or nullopt if w avoids them.
///
/// reach(p) holds when some lambda-walk starts at position p. Scanning right
/// to left, reach(p) = lambda_{i_p} > 0 or reach(q) for some later q adjacent
/// to p; the successor link is that minimal q (none when i_p already appears in
/// lambda). A witness exists iff some p < q share a root with reach(q); the
/// lexicographically smallest such (p, q) is extended along successor links.
inline std::optional<WalkWitness> find_hesitant_lambda_walk(const LieType& t, const Word& w,
                                                            const DominantWeight& lambda) {
  validate_weight(t, lambda);
  validate_word(t, w);
  const std::size_t n = w.size();
  std::vector<char> reach(n + 1, 0);
  std::vector<std::size_t> next(n + 1, 0);
  for (std::size_t p = n; p >= 1; --p) {
    if (appears_in_lambda(lambda, w.letter(p))) {
      reach[p] = 1;
      continue;
    }
    for (std::size_t q = p + 1; q <= n; ++q) {
      if (reach[q] && adjacent(t, w.letter(p), w.letter(q))) {
        reach[p] = 1;
        next[p] = q;
        break;
      }
    }
  }
  for (std::size_t p = 1; p <= n; ++p) {
    for (std::size_t q = p + 1; q <= n; ++q) {
      if (w.letter(p) != w.letter(q) || !reach[q]) continue;
      WalkWitness out;
      out.kind = WalkKind::hesitant_lambda_walk;
      out.positions = {p};
      for (std::size_t j = q; j != 0; j = next[j]) out.positions.push_back(j);
      return out;
    }
  }
  return std::nullopt;
}

/// Exhaustive oracle: tries every subsequence, in increasing bitmask order.
inline std::optional<WalkWitness> find_hesitant_lambda_walk_naive(const LieType& t, const Word& w,
                                                                  const DominantWeight& lambda,
                                                                  const Limits& limits = {}) {
  validate_weight(t, lambda);
  validate_word(t, w);
  const std::size_t n = w.size();
  if (n > limits.max_naive_length) {
    throw CapExceeded("naive detector is capped at n = " + std::to_string(limits.max_naive_length));
  }
  std::vector<std::size_t> positions;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    positions.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) positions.push_back(j + 1);
    }
    if (positions.size() < 2) continue;
    if (is_hesitant_lambda_walk(t, w.subword(positions), lambda)) {
      return WalkWitness{positions, WalkKind::hesitant_lambda_walk};
    }
  }
  return std::nullopt;
}

/// Minimality of a hesitant lambda-walk given as its own word: the walking
/// component visits no vertex twice, and when it has length >= 2 only its
/// final root appears in lambda.
inline bool is_minimal(const LieType& t, const Word& walk, const DominantWeight& lambda) {
  if (!is_hesitant_lambda_walk(t, walk, lambda)) throw NotAWitness("input is not a hesitant lambda-walk");
  const std::size_t len = walk.size();
  for (std::size_t a = 2; a <= len; ++a) {
    for (std::size_t b = a + 1; b <= len; ++b) {
      if (walk.letter(a) == walk.letter(b)) return false;
    }
  }
  if (len >= 3) {
    for (std::size_t a = 1; a < len; ++a) {
      if (appears_in_lambda(lambda, walk.letter(a))) return false;
    }
  }
  return true;
}

inline bool is_minimal(const LieType& t, const Word& w, const WalkWitness& witness, const DominantWeight& lambda) {
  check_positions(witness.positions, w.size());
  return is_minimal(t, w.subword(witness.positions), lambda);
}

/// Shrinks a hesitant lambda-walk to a minimal one whose positions are a
/// subsequence of the input's.
///
/// First the walking component is cut after its earliest root that appears in
/// lambda. Then revisits are spliced out: if walking entries t < u carry the
/// same root, entries t+1..u are dropped; entry u+1 was adjacent to root i_u =
/// i_t, so the seam stays a walk. Each splice shortens the walk.
inline WalkWitness minimize(const LieType& t, const Word& w, const WalkWitness& witness,
                            const DominantWeight& lambda) {
  check_positions(witness.positions, w.size());
  if (!is_hesitant_lambda_walk(t, w.subword(witness.positions), lambda)) {
    throw NotAWitness("input is not a hesitant lambda-walk");
  }
  const std::size_t head = witness.positions[0];
  std::vector<std::size_t> walking(witness.positions.begin() + 1, witness.positions.end());

  for (std::size_t a = 0; a < walking.size(); ++a) {
    if (appears_in_lambda(lambda, w.letter(walking[a]))) {
      walking.resize(a + 1);
      break;
    }
  }

  bool spliced = true;
  while (spliced) {
    spliced = false;
    for (std::size_t a = 0; a < walking.size() && !spliced; ++a) {
      for (std::size_t b = walking.size(); b-- > a + 1;) {
        if (w.letter(walking[a]) == w.letter(walking[b])) {
          walking.erase(walking.begin() + static_cast<std::ptrdiff_t>(a + 1),
                        walking.begin() + static_cast<std::ptrdiff_t>(b + 1));
          spliced = true;
          break;
        }
      }
    }
  }

  WalkWitness out;
  out.kind = WalkKind::hesitant_lambda_walk;
  out.positions.push_back(head);
  out.positions.insert(out.positions.end(), walking.begin(), walking.end());
  return out;
}

/// From a positive Cartier entry to a lambda-walk starting at position k:
/// requires m_{sigma,k} > 0 and m_{sigma,i} >= 0 for i > k.
inline WalkWitness lambda_walk_from_positive_entry(const TwistData& d, const Word* word, const SignVector& sigma,
                                                   std::size_t k) {
  detail::check_word_context(d, word);
  const CartierVector m = compute_m(d, sigma);
  if (k < 1 || k > d.size()) throw IndexOutOfRange("k outside [1, n]");
  if (m[k - 1] <= 0) {
    throw PreconditionViolated("m_{sigma," + std::to_string(k) + "} = " + std::to_string(m[k - 1]) + " is not positive");
  }
  for (std::size_t i = k + 1; i <= d.size(); ++i) {
    if (m[i - 1] < 0) throw PreconditionViolated("m_{sigma," + std::to_string(i) + "} < 0 after k");
  }
  return WalkWitness{detail::positive_entry_chain(d, m, k), WalkKind::lambda_walk};
}

inline WalkWitness lambda_walk_from_positive_entry(const TwistData& d, const Word& word, const SignVector& sigma,
                                                   std::size_t k) {
  return lambda_walk_from_positive_entry(d, &word, sigma, k);
}

}  // namespace twistcube

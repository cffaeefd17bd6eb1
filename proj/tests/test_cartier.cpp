#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twistcube/cartier.hpp"
#include "twistcube/rootdata.hpp"
#include "twistcube/walks.hpp"

namespace tc = twistcube;
using V = std::vector<std::int64_t>;

namespace {

tc::TwistData a2_twisted() { return tc::derive_twist_data(tc::parse_lie_type("A2"), {1, 2, 1}, {2, 1}); }

tc::TwistData random_twist_data(std::mt19937& rng, std::size_t n, int cmin, int cmax, int lmin, int lmax) {
  std::uniform_int_distribution<int> c_dist(cmin, cmax);
  std::uniform_int_distribution<int> l_dist(lmin, lmax);
  tc::TwistData d(n);
  for (std::size_t j = 1; j <= n; ++j) {
    d.set_ell(j, l_dist(rng));
    for (std::size_t k = j + 1; k <= n; ++k) d.set_c(j, k, c_dist(rng));
  }
  return d;
}

}  // namespace

TEST(SignVector, ParseAndOrder) {
  EXPECT_EQ(tc::SignVector::parse("-+-").to_string(), "-+-");
  EXPECT_THROW(tc::SignVector::parse("-x"), tc::ParseError);
  const auto sigmas = oracle::all_sigmas(4);
  for (std::uint64_t i = 0; i < sigmas.size(); ++i) EXPECT_EQ(tc::SignVector::from_index(4, i).to_string(), sigmas[i]);
  EXPECT_EQ(tc::SignVector::minus_at(5, {2, 5}).to_string(), "+-++-");
}

TEST(ComputeM, Examples) {
  const auto d = a2_twisted();
  EXPECT_EQ(tc::compute_m(d, tc::SignVector(3)), (V{0, 0, 0}));
  EXPECT_EQ(tc::compute_m(d, tc::SignVector::parse("-+-")), (V{-2, 0, 2}));
  EXPECT_THROW(tc::compute_m(d, tc::SignVector::parse("--")), tc::DimensionMismatch);
}

TEST(ComputeM, LengthTwoRepeat) {
  for (std::int64_t ell = 1; ell <= 5; ++ell) {
    tc::TwistData d(V{ell, ell});
    d.set_c(1, 2, 2);
    EXPECT_EQ(tc::compute_m(d, tc::SignVector::parse("--"))[0], -ell);
  }
}

TEST(ComputeM, MatchesOracleAndProperties) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto d = random_twist_data(rng, n, -3, 3, -2, 4);
    for (const auto& s : oracle::all_sigmas(n)) {
      const auto m = tc::compute_m(d, tc::SignVector::parse(s));
      ASSERT_EQ(m, oracle::m_sigma(d, s));
      for (std::size_t k = 0; k < n; ++k) {
        if (s[k] == '+') {
          EXPECT_EQ(m[k], 0);
        }
      }
    }
    // a single minus at k gives m_k = ell_k
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(tc::compute_m(d, tc::SignVector::minus_at(n, {k}))[k - 1], d.ell(k));
    }
    // m_{sigma,k} ignores sigma_1..k-1 and every entry touching an index < k
    const std::size_t k = 1 + rng() % n;
    tc::TwistData e = d;
    for (std::size_t j = 1; j < k; ++j) {
      e.set_ell(j, d.ell(j) + 7);
      for (std::size_t q = j + 1; q <= n; ++q) e.set_c(j, q, d.c(j, q) - 5);
    }
    const auto sigmas = oracle::all_sigmas(n);
    const std::string s = sigmas[rng() % sigmas.size()];
    std::string flipped = s;
    for (std::size_t j = 0; j + 1 < k; ++j) flipped[j] = flipped[j] == '+' ? '-' : '+';
    const auto m1 = tc::compute_m(d, tc::SignVector::parse(s));
    const auto m2 = tc::compute_m(e, tc::SignVector::parse(flipped));
    for (std::size_t q = k; q <= n; ++q) EXPECT_EQ(m1[q - 1], m2[q - 1]);
  }
}

TEST(ComputeM, OverflowIsReported) {
  tc::TwistData d(V{1, std::int64_t{1} << 62});
  d.set_c(1, 2, 4);
  EXPECT_THROW(tc::compute_m(d, tc::SignVector::parse("--")), tc::ArithmeticOverflow);
}

TEST(IsUntwisted, Examples) {
  const auto a3 = tc::parse_lie_type("A3");
  EXPECT_TRUE(tc::is_untwisted(tc::derive_twist_data(a3, {1, 2, 3, 1, 2, 1}, {0, 0, 3})).untwisted);

  const auto r = tc::is_untwisted(a2_twisted());
  ASSERT_FALSE(r.untwisted);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->sigma.to_string(), "-+-");
  EXPECT_EQ(r.witness->k, 1u);
  EXPECT_EQ(r.witness->m, (V{-2, 0, 2}));

  EXPECT_TRUE(tc::is_untwisted(tc::derive_twist_data(a3, {1, 2, 3, 1, 2, 1, 3, 3}, {0, 0, 0})).untwisted);
  EXPECT_TRUE(tc::is_untwisted(tc::TwistData(0)).untwisted);
}

TEST(IsUntwisted, Cap) {
  tc::Limits lim;
  lim.max_length = 4;
  EXPECT_THROW(tc::is_untwisted(tc::TwistData(5), lim), tc::CapExceeded);
  EXPECT_NO_THROW(tc::is_untwisted(tc::TwistData(4), lim));
}

TEST(IsUntwisted, MatchesOracleWithFirstWitness) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 8;
    const auto d = random_twist_data(rng, n, -3, 3, 0, 3);
    const auto r = tc::is_untwisted(d);
    ASSERT_EQ(r.untwisted, oracle::untwisted(d));
    EXPECT_EQ(r.witness.has_value(), !r.untwisted);
    if (!r.witness) continue;
    // lexicographically first failing sigma, first negative k in it
    for (const auto& s : oracle::all_sigmas(n)) {
      const auto m = oracle::m_sigma(d, s);
      std::size_t k = 0;
      for (std::size_t q = 0; q < n && k == 0; ++q) {
        if (m[q] < 0) k = q + 1;
      }
      if (k == 0) continue;
      EXPECT_EQ(r.witness->sigma.to_string(), s);
      EXPECT_EQ(r.witness->k, k);
      EXPECT_EQ(r.witness->m, m);
      break;
    }
  }
}

TEST(IsUntwisted, ParallelMatchesSerial) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = random_twist_data(rng, 12, -2, 2, 0, 2);
    const auto serial = tc::is_untwisted(d, {}, 1);
    for (unsigned jobs : {2u, 3u, 8u}) {
      const auto par = tc::is_untwisted(d, {}, jobs);
      ASSERT_EQ(par.untwisted, serial.untwisted);
      if (serial.witness) {
        EXPECT_EQ(par.witness->sigma, serial.witness->sigma);
        EXPECT_EQ(par.witness->k, serial.witness->k);
      }
    }
  }
}

TEST(WitnessSigmaFromWalk, ClosedForms) {
  const std::vector<std::size_t> all4{1, 2, 3, 4};
  {
    const auto d = tc::derive_twist_data(tc::parse_lie_type("A3"), {1, 1, 2, 3}, {0, 0, 1});
    const auto [sigma, m] = tc::witness_sigma_from_walk(d, all4);
    EXPECT_EQ(sigma.to_string(), "----");
    EXPECT_EQ(m, (V{-1, 1, 1, 1}));
    EXPECT_EQ(m[0], -d.ell(4));
  }
  {
    const auto d = tc::derive_twist_data(tc::parse_lie_type("B3"), {3, 3, 2, 1}, {1, 0, 0});
    const auto [sigma, m] = tc::witness_sigma_from_walk(d, all4);
    EXPECT_EQ(m[0], -2);
    EXPECT_EQ(m[0], -2 * d.ell(4));
  }
  {
    const auto d = tc::derive_twist_data(tc::parse_lie_type("G2"), {1, 1, 2}, {0, 1});
    const auto [sigma, m] = tc::witness_sigma_from_walk(d, {1, 2, 3});
    EXPECT_EQ(m, (V{-3, 3, 1}));
  }
  {
    const auto d = tc::derive_twist_data(tc::parse_lie_type("F4"), {4, 4, 3, 2, 1}, {1, 0, 0, 0});
    const auto [sigma, m] = tc::witness_sigma_from_walk(d, {1, 2, 3, 4, 5});
    EXPECT_EQ(m[0], -2);
  }
}

TEST(WitnessSigmaFromWalk, SubwordPositions) {
  const auto d = a2_twisted();
  const auto [sigma, m] = tc::witness_sigma_from_walk(d, {1, 3});
  EXPECT_EQ(sigma.to_string(), "-+-");
  EXPECT_EQ(m, (V{-2, 0, 2}));
}

TEST(WitnessSigmaFromWalk, RejectsNonMinimal) {
  const auto a5 = tc::parse_lie_type("A5");
  // walking component revisits root 4 and 3
  const auto d = tc::derive_twist_data(a5, {5, 5, 4, 3, 4, 3, 2}, {0, 1, 0, 0, 0});
  EXPECT_THROW(tc::witness_sigma_from_walk(d, {1, 2, 3, 4, 5, 6, 7}), tc::NotMinimalWitness);
  EXPECT_NO_THROW(tc::witness_sigma_from_walk(d, {1, 2, 3, 6, 7}));
  // non-final root in lambda
  const auto d2 = tc::derive_twist_data(a5, {5, 5, 4, 3, 2}, {0, 1, 0, 0, 1});
  EXPECT_THROW(tc::witness_sigma_from_walk(d2, {1, 2, 3, 4, 5}), tc::NotMinimalWitness);
  EXPECT_NO_THROW(tc::witness_sigma_from_walk(d2, {1, 2}));
  // not a walk at all
  EXPECT_THROW(tc::witness_sigma_from_walk(d2, {2, 3}), tc::NotMinimalWitness);
  EXPECT_THROW(tc::witness_sigma_from_walk(d2, {1}), tc::NotMinimalWitness);
  EXPECT_THROW(tc::witness_sigma_from_walk(d2, {2, 1}), tc::IndexOutOfRange);
}

TEST(HesitantWalkFromTwistWitness, Examples) {
  const auto d = a2_twisted();
  const tc::Word w{1, 2, 1};
  const auto walk = tc::hesitant_walk_from_twist_witness(d, w, tc::SignVector::parse("-+-"), 1);
  EXPECT_EQ(walk.positions, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(walk.kind, tc::WalkKind::hesitant_lambda_walk);

  const auto a3 = tc::parse_lie_type("A3");
  const tc::Word w2{1, 1, 2, 3};
  const auto d2 = tc::derive_twist_data(a3, w2, {0, 0, 1});
  const auto walk2 = tc::hesitant_walk_from_twist_witness(d2, w2, tc::SignVector::parse("----"), 1);
  EXPECT_EQ(walk2.positions, (std::vector<std::size_t>{1, 2, 3, 4}));

  EXPECT_THROW(tc::hesitant_walk_from_twist_witness(d, w, tc::SignVector::parse("+--"), 3),
               tc::PreconditionViolated);
  EXPECT_THROW(tc::hesitant_walk_from_twist_witness(d, tc::Word{1, 2}, tc::SignVector::parse("-+-"), 1),
               tc::DimensionMismatch);
}

TEST(HesitantWalkFromTwistWitness, NormalizesToMaximalFailingIndex) {
  // m = (-, ?, -, ...): asking about k = 1 should build the walk from the last failing index
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 200; ++trial) {
    const auto t = tc::all_lie_types(4)[rng() % tc::all_lie_types(4).size()];
    std::vector<int> letters(2 + rng() % 7);
    for (int& l : letters) l = 1 + static_cast<int>(rng() % static_cast<unsigned>(t.rank()));
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(t.rank()));
    for (auto& c : coeffs) c = rng() % 2;
    const tc::Word w(letters);
    const auto d = tc::derive_twist_data(t, w, tc::DominantWeight(coeffs));
    for (const auto& s : oracle::all_sigmas(w.size())) {
      const auto m = oracle::m_sigma(d, s);
      for (std::size_t k = 1; k <= w.size(); ++k) {
        if (m[k - 1] >= 0) continue;
        const auto walk = tc::hesitant_walk_from_twist_witness(d, w, tc::SignVector::parse(s), k);
        EXPECT_TRUE(tc::validates(t, w, tc::DominantWeight(coeffs), walk));
        std::size_t top = 0;
        for (std::size_t q = 1; q <= w.size(); ++q) {
          if (m[q - 1] < 0) top = q;
        }
        EXPECT_EQ(walk.positions.front(), top);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "tbrackets/labels.hpp"

using namespace tbrackets;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Pairs chain1_pairs(int nu, int N) {
  Pairs out;
  for (const auto& l : enumerate_chain1(nu, N)) out.emplace_back(l.n, l.tau);
  return out;
}

Pairs chain2_pairs(int nu, int N) {
  Pairs out;
  for (const auto& l : enumerate_chain2(nu, N)) out.emplace_back(l.sigma, l.tau);
  return out;
}

}  // namespace

TEST(EnumerateChain1, BranchingRules) {
  EXPECT_EQ(chain1_pairs(3, 2), (Pairs{{0, 0}, {1, 1}, {2, 0}, {2, 2}}));
  EXPECT_EQ(chain1_pairs(2, 2), (Pairs{{0, 0}, {1, -1}, {1, 1}, {2, -2}, {2, 0}, {2, 2}}));
  EXPECT_EQ(chain1_pairs(5, 0), (Pairs{{0, 0}}));
}

TEST(EnumerateChain2, BranchingRules) {
  EXPECT_EQ(chain2_pairs(3, 2), (Pairs{{0, 0}, {2, 0}, {2, 1}, {2, 2}}));
  EXPECT_EQ(chain2_pairs(2, 2), (Pairs{{0, 0}, {2, -2}, {2, -1}, {2, 0}, {2, 1}, {2, 2}}));
  EXPECT_EQ(chain2_pairs(4, 1), (Pairs{{1, 0}, {1, 1}}));
}

TEST(Enumerate, RejectsLowDimension) {
  EXPECT_THROW(enumerate_chain1(1, 3), UnsupportedDimension);
  EXPECT_THROW(enumerate_chain2(0, 3), UnsupportedDimension);
}

TEST(Enumerate, EveryLabelPassesValidation) {
  for (int nu = 2; nu <= 7; ++nu) {
    for (int N = 0; N <= 9; ++N) {
      for (const auto& l : enumerate_chain1(nu, N)) EXPECT_EQ(ChainILabel::make(nu, N, l.n, l.tau), l);
      for (const auto& l : enumerate_chain2(nu, N)) EXPECT_EQ(ChainIILabel::make(nu, N, l.sigma, l.tau), l);
    }
  }
}

TEST(Enumerate, BothChainsSpanTheSameIrrep) {
  for (int nu = 2; nu <= 9; ++nu) {
    for (int N = 0; N <= 12; ++N) {
      ASSERT_EQ(enumerate_chain1(nu, N).size(), enumerate_chain2(nu, N).size()) << "nu=" << nu << " N=" << N;
    }
  }
}

TEST(Validation, NamesTheViolatedRule) {
  try {
    ChainILabel::make(2, 2, 1, 0);
    FAIL() << "expected LabelError";
  } catch (const LabelError& e) {
    EXPECT_NE(std::string(e.what()).find("n - tau must be even"), std::string::npos);
  }
  EXPECT_THROW(ChainILabel::make(3, 2, 3, 1), LabelError);    // n > N
  EXPECT_THROW(ChainILabel::make(3, 2, 2, -2), LabelError);   // negative tau for nu > 2
  EXPECT_THROW(ChainIILabel::make(3, 3, 2, 0), LabelError);   // N - sigma odd
  EXPECT_THROW(ChainIILabel::make(3, 3, 1, 2), LabelError);   // tau > sigma
  EXPECT_NO_THROW(ChainIILabel::make(2, 3, 3, -2));           // nu = 2, no tau parity rule
  EXPECT_THROW(ChainIILabel::make(1, 0, 0, 0), UnsupportedDimension);
}

TEST(BracketIndexSet, Examples) {
  auto s = bracket_index_set(2, 2, 0);
  EXPECT_EQ(s.n, (std::vector<int>{0, 2}));
  EXPECT_EQ(s.sigma, (std::vector<int>{0, 2}));
  s = bracket_index_set(3, 5, 1);
  EXPECT_EQ(s.n, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(s.sigma, (std::vector<int>{1, 3, 5}));
  s = bracket_index_set(3, 4, 1);
  EXPECT_EQ(s.n, (std::vector<int>{1, 3}));
  EXPECT_EQ(s.sigma, (std::vector<int>{2, 4}));
  EXPECT_EQ(bracket_index_set(2, 3, -1).n, bracket_index_set(2, 3, 1).n);
  EXPECT_THROW(bracket_index_set(3, 2, 5), LabelError);
  EXPECT_THROW(bracket_index_set(3, 2, -1), LabelError);
}

TEST(BracketIndexSet, MatchesPerTauEnumeration) {
  for (int nu = 2; nu <= 9; ++nu) {
    for (int N = 0; N <= 12; ++N) {
      for (int tau = nu == 2 ? -N : 0; tau <= N; ++tau) {
        const auto idx = bracket_index_set(nu, N, tau);
        std::vector<int> ns, sigmas;
        for (const auto& l : enumerate_chain1(nu, N)) {
          if (l.tau == tau) ns.push_back(l.n);
        }
        for (const auto& l : enumerate_chain2(nu, N)) {
          if (l.tau == tau) sigmas.push_back(l.sigma);
        }
        EXPECT_EQ(idx.n, ns);
        EXPECT_EQ(idx.sigma, sigmas);
        EXPECT_EQ(idx.dimension(), static_cast<std::size_t>((N - std::abs(tau)) / 2 + 1));
      }
    }
  }
}

TEST(QuasiSpin, Labels) {
  auto q = quasispin_labels(2, 2, 0);
  EXPECT_EQ(q.q, Rational(1, 2));
  EXPECT_EQ(q.q0, Rational(3, 2));
  q = quasispin_labels(3, 1, 1);
  EXPECT_EQ(q.q, Rational(5, 4));
  EXPECT_EQ(q.q0, Rational(5, 4));
  q = quasispin_labels(5, 4, 0);
  EXPECT_EQ(q.q, Rational(5, 4));
  EXPECT_EQ(q.q0, Rational(13, 4));
  EXPECT_THROW(quasispin_labels(3, 3, 0), LabelError);
}

TEST(QuasiSpin, InvariantsHold) {
  for (int nu = 2; nu <= 6; ++nu) {
    for (int n = 0; n <= 8; ++n) {
      for (int tau = n % 2; tau <= n; tau += 2) {
        const auto q = quasispin_labels(nu, n, tau);
        EXPECT_GT(q.q, Rational(0));
        EXPECT_GE(q.q0, q.q);
        EXPECT_TRUE((q.q0 - q.q).is_integer());
      }
    }
  }
}

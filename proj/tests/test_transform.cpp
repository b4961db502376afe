#include <gtest/gtest.h>

#include "tbrackets/transform.hpp"

using namespace tbrackets;

namespace {

SurdValue S(int sign, long num, long den = 1) { return SurdValue(sign, Rational(num, den)); }

}  // namespace

TEST(Spherical, NumberOperatorsAreDiagonal) {
  const SurdMatrix b = spherical_matrix(2, 2, 0, OperatorKind::b_number);
  EXPECT_EQ(b.rows, (std::vector<int>{0, 2}));
  EXPECT_EQ(b.at(0, 0), SurdValue::zero());
  EXPECT_EQ(b.at(1, 1), S(1, 4));
  EXPECT_TRUE(b.at(0, 1).is_zero());
  const SurdMatrix s = spherical_matrix(2, 2, 0, OperatorKind::s_number);
  EXPECT_EQ(s.at(0, 0), S(1, 4));
  EXPECT_EQ(s.at(1, 1), SurdValue::zero());
}

TEST(Spherical, PairingExample) {
  const SurdMatrix p = spherical_matrix(2, 2, 0, OperatorKind::pairing);
  EXPECT_EQ(p.at(1, 0), S(-1, 2));
  EXPECT_EQ(p.at(0, 1), S(-1, 2));
  EXPECT_TRUE(p.at(0, 0).is_zero());
  EXPECT_EQ(p, spherical_matrix_oracle(2, 2, 0, OperatorKind::pairing));
}

TEST(Spherical, ClosedFormMatchesOracle) {
  for (OperatorKind k : {OperatorKind::b_number, OperatorKind::s_number, OperatorKind::pairing}) {
    for (int nu = 2; nu <= 4; ++nu) {
      for (int N = 0; N <= 6; ++N) {
        for (int tau = nu == 2 ? -N : 0; tau <= N; ++tau) {
          EXPECT_EQ(spherical_matrix(nu, N, tau, k), spherical_matrix_oracle(nu, N, tau, k))
              << to_string(k) << " " << nu << " " << N << " " << tau;
        }
      }
    }
  }
}

TEST(Deformed, Examples) {
  const SurdMatrix b = deformed_matrix(2, 2, 0, OperatorKind::b_number);
  EXPECT_EQ(b.rows, (std::vector<int>{0, 2}));
  EXPECT_EQ(b.at(0, 0), S(1, 16, 9));
  EXPECT_EQ(b.at(0, 1), S(1, 8, 9));
  EXPECT_EQ(b.at(1, 0), S(1, 8, 9));
  EXPECT_EQ(b.at(1, 1), S(1, 4, 9));

  const SurdMatrix one = deformed_matrix(3, 4, 4, OperatorKind::b_number);
  ASSERT_EQ(one.dimension(), 1u);
  EXPECT_EQ(one.at(0, 0), S(1, 16));

  const SurdMatrix vac = deformed_matrix(3, 0, 0, OperatorKind::s_number);
  ASSERT_EQ(vac.dimension(), 1u);
  EXPECT_TRUE(vac.at(0, 0).is_zero());
}

TEST(Deformed, TwoStepMatchesOracle) {
  for (Convention c : {Convention::standard, Convention::barred}) {
    for (OperatorKind k : {OperatorKind::b_number, OperatorKind::s_number, OperatorKind::pairing}) {
      for (int nu = 2; nu <= 3; ++nu) {
        for (int N = 0; N <= 5; ++N) {
          for (int tau = 0; tau <= N; ++tau) {
            EXPECT_EQ(deformed_matrix(nu, N, tau, k, c), deformed_matrix_oracle(nu, N, tau, k, c))
                << to_string(k) << " " << to_string(c) << " " << nu << " " << N << " " << tau;
          }
        }
      }
    }
  }
}

TEST(Deformed, InvariantsHold) {
  for (int nu = 2; nu <= 5; ++nu) {
    for (int N = 0; N <= 7; ++N) {
      for (int tau = 0; tau <= N; ++tau) {
        for (OperatorKind k : {OperatorKind::b_number, OperatorKind::s_number, OperatorKind::pairing}) {
          const SurdMatrix d = deformed_matrix(nu, N, tau, k);
          EXPECT_TRUE(d.is_symmetric());
          EXPECT_EQ(d.trace(), spherical_matrix(nu, N, tau, k).trace());
        }
        const SurdMatrix b = deformed_matrix(nu, N, tau, OperatorKind::b_number);
        const SurdMatrix s = deformed_matrix(nu, N, tau, OperatorKind::s_number);
        for (std::size_t i = 0; i < b.dimension(); ++i) {
          for (std::size_t j = 0; j < b.dimension(); ++j) {
            SurdSum sum;
            sum += b.at(i, j);
            sum += s.at(i, j);
            EXPECT_EQ(sum.to_surd(), i == j ? SurdValue::from_rational(N) : SurdValue::zero());
          }
        }
      }
    }
  }
}

TEST(OperatorKind, Parsing) {
  EXPECT_EQ(parse_operator_kind("pair"), OperatorKind::pairing);
  EXPECT_STREQ(to_string(OperatorKind::s_number), "snum");
  EXPECT_THROW(parse_operator_kind("quadrupole"), DomainError);
}

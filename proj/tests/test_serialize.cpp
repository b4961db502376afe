#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "tbrackets/serialize.hpp"

using namespace tbrackets;

TEST(SurdJson, RoundTrip) {
  for (const SurdValue& v : {SurdValue::zero(), SurdValue::one(), SurdValue(-1, Rational(1, 3)),
                             SurdValue(1, Rational(Integer("123456789012345678901234567890"), Integer(7)))}) {
    const Json j = surd_to_json(v);
    EXPECT_EQ(surd_from_json(j), v);
    EXPECT_EQ(surd_from_json(Json::parse(j.dump())), v);
  }
  const Json j = surd_to_json(SurdValue(-1, Rational(1, 3)));
  EXPECT_EQ(j.at("sign"), -1);
  EXPECT_EQ(j.at("num"), "1");
  EXPECT_EQ(j.at("den"), "3");
  EXPECT_DOUBLE_EQ(j.at("float").get<double>(), -0.57735026918962584);
}

TEST(TableJson, HeaderAndEntries) {
  const Json j = table_to_json(table(2, 2, 0));
  EXPECT_EQ(j.at("header").dump(), R"({"nu":2,"N":2,"tau":0,"convention":"standard","format_version":1})");
  ASSERT_EQ(j.at("entries").size(), 4u);
  const Json& e = j.at("entries")[0];
  EXPECT_EQ(e.at("n"), 0);
  EXPECT_EQ(e.at("sigma"), 0);
  EXPECT_EQ(e.at("sign"), -1);
  EXPECT_EQ(e.at("radicand_num"), "1");
  EXPECT_EQ(e.at("radicand_den"), "3");
}

TEST(TableJson, RoundTripProperty) {
  for (Convention c : {Convention::standard, Convention::barred}) {
    for (int nu = 2; nu <= 5; ++nu) {
      for (int N = 0; N <= 8; ++N) {
        for (int tau = nu == 2 ? -N : 0; tau <= N; ++tau) {
          const BracketTable t = table(nu, N, tau, c);
          const BracketTable back = table_from_json(Json::parse(table_to_json(t).dump(2)));
          EXPECT_EQ(back.nu, t.nu);
          EXPECT_EQ(back.N, t.N);
          EXPECT_EQ(back.tau, t.tau);
          EXPECT_EQ(back.convention, t.convention);
          EXPECT_EQ(back.n, t.n);
          EXPECT_EQ(back.sigma, t.sigma);
          EXPECT_EQ(back.entries, t.entries);
        }
      }
    }
  }
}

TEST(TableJson, RejectsMalformedInput) {
  Json j = table_to_json(table(2, 2, 0));
  j["header"]["format_version"] = 99;
  EXPECT_THROW(table_from_json(j), DomainError);
  j = table_to_json(table(2, 2, 0));
  j["entries"].erase(0);
  EXPECT_THROW(table_from_json(j), DomainError);
  j = table_to_json(table(2, 2, 0));
  j["entries"][0]["n"] = 1;
  EXPECT_THROW(table_from_json(j), DomainError);
}

TEST(TableJson, ByteReproducible) {
  EXPECT_EQ(table_to_json(table(4, 7, 1)).dump(2), table_to_json(table(4, 7, 1)).dump(2));
  EXPECT_EQ(table_to_csv(table(4, 7, 1)), table_to_csv(table(4, 7, 1)));
}

TEST(TableCsv, Format) {
  const std::string expected =
      "nu,N,tau,n,sigma,sign,radicand_num,radicand_den,float\n"
      "2,2,0,0,0,-1,1,3,-0.5773502692\n"
      "2,2,0,0,2,1,2,3,0.8164965809\n"
      "2,2,0,2,0,1,2,3,0.8164965809\n"
      "2,2,0,2,2,1,1,3,0.5773502692\n";
  EXPECT_EQ(table_to_csv(table(2, 2, 0)), expected);

  std::istringstream in(table_to_csv(table(3, 6, 2)));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvHeader);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
  }
  EXPECT_EQ(rows, 9u);
}

TEST(MatrixJson, Header) {
  const Json j = matrix_to_json(deformed_matrix(2, 2, 0, OperatorKind::b_number), OperatorKind::b_number,
                                Convention::standard);
  EXPECT_EQ(j.at("header").at("operator"), "bnum");
  EXPECT_EQ(j.at("header").at("basis"), "deformed");
  EXPECT_EQ(j.at("entries").size(), 4u);
  EXPECT_EQ(j.at("entries")[1].at("sigma_col"), 2);
  EXPECT_EQ(j.at("entries")[1].at("radicand_num"), "8");
  EXPECT_EQ(j.at("entries")[1].at("radicand_den"), "9");
}

TEST(FockJson, RoundTrip) {
  for (int nu = 2; nu <= 4; ++nu) {
    for (const auto& l : enumerate_chain2(nu, 4)) {
      const FockState v = build_chain2_state(nu, 4, l.sigma, l.tau).vector;
      EXPECT_EQ(fock_state_from_json(Json::parse(fock_state_to_json(v).dump())), v);
    }
  }
  EXPECT_EQ(fock_state_from_json(fock_state_to_json(seed_state(2, -3))), seed_state(2, -3));
}

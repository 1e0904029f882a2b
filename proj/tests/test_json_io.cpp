#include <gtest/gtest.h>

#include "fdomlab/construct.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/fdom.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/json_io.hpp"
#include "fdomlab/tables.hpp"

using namespace fdom;

TEST(JsonIo, Rational) {
  for (const auto& r : {Rational(0), Rational(7, 3), Rational(-5, 2), Rational(1, 1000000007)}) {
    Json j = to_json(r);
    EXPECT_EQ(j.dump().find('.'), std::string::npos);
    EXPECT_EQ(rational_from_json(parse_json(j.dump())), r);
  }
  EXPECT_EQ(rational_from_json(Json("3/4")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_EQ(to_json(Rational(2, 5)), Json::parse(R"(["2","5"])"));
  EXPECT_THROW(rational_from_json(Json::parse(R"(["1","0"])")), InvalidArgument);
}

TEST(JsonIo, Certificates) {
  Graph g = cycle_graph(7);
  auto r = fdom_exact(g);
  auto p = primal_from_json(parse_json(to_json(r.primal).dump()));
  EXPECT_EQ(p.objective, r.primal.objective);
  ASSERT_EQ(p.columns.size(), r.primal.columns.size());
  EXPECT_TRUE(verify_primal(g, p).ok);
  auto d = dual_from_json(parse_json(to_json(r.dual).dump()));
  EXPECT_EQ(d.weights, r.dual.weights);
  EXPECT_EQ(d.total, Rational(7, 3));
  auto bare = dual_from_json(Json::parse(R"({"weights":[["1","3"],["1","3"],["1","3"],["1","3"],["1","3"],["1","3"],["1","3"]]})"));
  EXPECT_EQ(bare.total, Rational(7, 3));
  EXPECT_TRUE(verify_dual(g, bare).ok);
}

TEST(JsonIo, Distribution) {
  Graph g = theta_graph(3, 3, 4);
  auto d = construct52(g);
  auto host = share(g);
  auto [back, r] = distribution_from_json(parse_json(to_json(d, Rational(2, 5)).dump()), host);
  EXPECT_EQ(r, Rational(2, 5));
  EXPECT_EQ(back.atoms(), d.atoms());
  EXPECT_THROW(distribution_from_json(Json::parse(R"({"r":["1","2"],"atoms":[{"set":[0],"p":["1","2"]}]})"), host),
               InvalidArgument);
}

TEST(JsonIo, Colouring) {
  auto c = exceptional_colouring("k24-dom104");
  auto j = to_json(c);
  EXPECT_EQ(j["p"], 10);
  EXPECT_EQ(j["q"], 4);
  auto back = colouring_from_json(parse_json(j.dump()));
  EXPECT_EQ(back.phi, c.phi);
}

TEST(JsonIo, MalformedInput) {
  EXPECT_THROW(parse_json("{not json"), InvalidArgument);
  EXPECT_THROW(primal_from_json(Json::parse(R"({"columns":5})")), InvalidArgument);
  EXPECT_THROW(colouring_from_json(Json::parse(R"({"p":"x"})")), InvalidArgument);
}

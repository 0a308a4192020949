#include <gtest/gtest.h>

#include <sstream>

#include "wittkit/cli.hpp"
#include "wittkit/error.hpp"
#include "wittkit/json_io.hpp"

using namespace wittkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Json, SeriesRoundTrip) {
  auto s = series_from_json(Json::parse(R"({"order":4,"coeffs":["1","-1/2",3]})"));
  EXPECT_EQ(s.order(), 4u);
  EXPECT_EQ(s[1], Rational(-1, 2));
  EXPECT_EQ(s[3], 0);
  EXPECT_EQ(series_from_json(series_to_json(s)), s);
  EXPECT_THROW(series_from_json(Json::parse(R"({"order":1,"coeffs":["1","2","3"]})")), UsageError);
  EXPECT_THROW(series_from_json(Json::parse(R"({"coeffs":["1"]})")), UsageError);
  EXPECT_THROW(series_from_json(Json::parse(R"({"order":2,"coeffs":["x"]})")), UsageError);
}

TEST(Json, RatfunAndBiseries) {
  auto h = ratfun_from_json(Json::parse(R"({"num":[1,-1,-1],"den":[1,-1]})"));
  EXPECT_EQ(h.num.size(), 3u);
  EXPECT_EQ(ratfun_from_json(ratfun_to_json(h)), h);
  auto b = biseries_from_json(Json::parse(R"({"coeffs":[["1","-1"],["0","-1"]]})"));
  EXPECT_EQ(b.at(1, 1), -1);
  EXPECT_EQ(biseries_from_json(biseries_to_json(b)), b);
}

TEST(Cli, NecklaceAndWitt) {
  auto r = run({"necklace", "--alpha", "2", "--n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"value\":\"9\"}\n");
  r = run({"necklace", "--content", "2,3,1"});
  EXPECT_EQ(r.json()["value"], "10");
  r = run({"witt", "--f", R"({"order":4,"coeffs":["1","1","0","0","0"]})", "--r", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["value"]["coeffs"], Json::parse(R"(["0","1","0","0","0"])"));
}

TEST(Cli, WordsListAndCount) {
  auto r = run({"words", "--content", "2,3", "--list"});
  EXPECT_EQ(r.json()["value"].size(), 2u);
  r = run({"words", "--content", "2,3", "--count"});
  EXPECT_EQ(r.json()["value"], "2");
  EXPECT_EQ(run({"words", "--content", "2,3"}).code, 2);
}

TEST(Cli, VerifyScanCyclotomic) {
  auto r = run({"verify", "--id", "T3.4", "--f", R"({"order":12,"coeffs":["1","2"]})", "--g",
                R"({"order":12,"coeffs":["1","-1","3"]})", "--r", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.json()["report"]["pass"].get<bool>());
  r = run({"scan", "--family", "T5.1", "--f", R"({"order":10,"coeffs":["1","1"]})", "--kmax", "8", "--rmax", "12"});
  EXPECT_EQ(r.code, 0);
  r = run({"scan", "--family", "T5.4a", "--f", R"({"order":10,"coeffs":["1","1"]})"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["error"]["hypothesis"], "a_j non-decreasing");
  r = run({"cyclotomic", "--f", R"({"order":8,"coeffs":["1","1"]})"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, ExpandRoundTrip) {
  auto r = run({"expand", "--h", R"({"num":[1],"den":[1,-2]})", "--N", "6"});
  ASSERT_EQ(r.code, 0);
  auto e = r.json()["value"]["exponents"];
  EXPECT_EQ(e["1"], "2");
  EXPECT_EQ(e["6"], "9");
  r = run({"expand2d", "--F", R"({"coeffs":[["1","-1"],["0","-1"]]})", "--J", "3", "--K", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["value"]["exponents"]["1,1"], "1");
  // emitted series feed back in as input
  auto w = run({"witt", "--f", R"({"order":6,"coeffs":["1","3","1"]})", "--r", "3"});
  auto again = run({"witt", "--f", w.json()["value"].dump(), "--r", "1"});
  EXPECT_EQ(again.json()["value"], w.json()["value"]);
}

TEST(Cli, AnalyticCommands) {
  auto r = run({"constant", "--h", R"({"num":[1,-1,-1],"den":[1,-1]})", "--m", "0", "--digits", "10"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["value"], "0.3739558136");
  EXPECT_TRUE(r.json().contains("error_estimate"));
  r = run({"lseries", "--s", "2", "--kronecker", "-4", "--digits", "15"});
  EXPECT_EQ(r.json()["value"], "0.915965594177219");
  r = run({"zeta", "--s", "2", "--digits", "12"});
  EXPECT_EQ(r.json()["value"], "1.64493406685");
  r = run({"bchi", "--digits", "6"});
  EXPECT_EQ(r.json()["value"], "1.00000");
}

TEST(Cli, ErrorsAndExitCodes) {
  auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.json().contains("error"));
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"necklace", "--alpha", "2", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"witt", "--f", "{not json", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"witt", "--f", R"({"order":2,"coeffs":["1"]})"}).code, 2);
  EXPECT_EQ(run({"zeta", "--s", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "T3.1", "--f", R"({"order":3,"coeffs":["1","1"]})", "--r", "8"}).code, 2);
  EXPECT_EQ(run({"constant", "--h", R"({"num":[1,0,-5],"den":[1]})", "--m", "0"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyAll) {
  auto r = run({"verify-all", "--budget", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.json()["report"]["checks"].empty());
  r = run({"verify-all", "--scope", "combinatorial", "--budget", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.json()["report"]["checks"].empty());
  EXPECT_EQ(run({"verify-all", "--scope", "astrology"}).code, 2);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"witt-table", "--f", R"({"order":8,"coeffs":["-1","-1","-1"]})", "--R", "6"};
  EXPECT_EQ(run(args).out, run(args).out);
  std::vector<std::string> c{"constant", "--h", R"({"num":[1,-2],"den":[1,-2,1]})", "--m", "1", "--digits", "25"};
  EXPECT_EQ(run(c).out, run(c).out);
}

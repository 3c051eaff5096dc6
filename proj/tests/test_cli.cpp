#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "holoroot/table_io.hpp"

using holoroot::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("holoroot_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, ExpandJsonContainsKnownEntry) {
  const auto r = invoke({"expand", "--k", "2", "--order", "4", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"({"q":2,"r":2,"num":"-1","den":"4"})"), std::string::npos);
  EXPECT_EQ(r.err, "k=2 Q=4 entries=15\n");
}

TEST(Cli, ExpandOrderZero) {
  const auto r = invoke({"expand", "--k", "3", "--order", "0"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["coefficients"].size(), 1u);
  EXPECT_EQ(doc["coefficients"][0]["num"], "-1");
  EXPECT_EQ(r.err, "k=3 Q=0 entries=1\n");
}

TEST(Cli, ExpandToFileRoundTrips) {
  const auto path = temp_file("table.json");
  const auto r = invoke({"expand", "--k", "4", "--order", "5", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k=4 Q=5 entries=51\n");
  EXPECT_EQ(holoroot::table_from_json(slurp(path)), holoroot::build_table(4, 5));
  std::filesystem::remove(path);
}

TEST(Cli, ExpandCsvAndText) {
  EXPECT_EQ(invoke({"expand", "--k", "2", "--order", "1", "--format", "csv"}).out,
            "q,r,num,den\n0,0,-1,1\n1,1,0,1\n1,2,1,2\n");
  EXPECT_EQ(invoke({"expand", "--k", "2", "--order", "1", "--format", "text"}).out,
            "C[0,0] = -1\nC[1,1] = 0\nC[1,2] = 1/2\n");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"expand", "--k", "5", "--order", "6"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> verify{"verify", "all", "--k", "3", "--order", "5"};
  EXPECT_EQ(invoke(verify).out, invoke(verify).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"expand", "--k", "1"}).code, 2);
  EXPECT_EQ(invoke({"expand"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"expand", "--k", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"expand", "--k", "2", "--order", "-1"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--k", "2", "--sigma", "1"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--k", "2", "--sigma", "1,x"}).code, 2);
  EXPECT_EQ(invoke({"verify", "nonsense", "--k", "2"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, IoError) {
  const auto r = invoke({"expand", "--k", "2", "--out", "/nonexistent-dir/x/table.json"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("cannot write"), std::string::npos);
}

TEST(Cli, EvalAgreesWithNewton) {
  const auto r = invoke({"eval", "--k", "2", "--order", "8", "--sigma", "0.01,0.02", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_LE(doc["difference"].get<double>(), 1e-12);
  EXPECT_EQ(doc["sigma"][0], "1/100");
}

TEST(Cli, EvalAtOrigin) {
  const auto r = invoke({"eval", "--k", "3", "--sigma", "0,0,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "series = -1\nnewton = -1\ndifference = 0\n");
}

TEST(Cli, EvalOutsideBasin) {
  const auto r = invoke({"eval", "--k", "2", "--sigma", "10,10"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, VerifyIdentities) {
  const auto r = invoke({"verify", "identities", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  for (const char* name : {"PASS E_2", "PASS E_3", "PASS E_1", "PASS F_2", "PASS F_3", "PASS F_1",
                           "PASS [U_0,U_-1]", "PASS [U_0,U_1]", "PASS [U_1,U_-1]"})
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyDeterminantReportsSign) {
  const auto r = invoke({"verify", "--target", "determinant", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS determinant lemma det = eps * s_k * Delta  [eps = -1]"), std::string::npos);
  EXPECT_NE(r.out.find("PASS Delta = s1^2 - 4 s2"), std::string::npos);
}

TEST(Cli, VerifyRecurrencesFlagsDiagonalDiscrepancy) {
  const auto r = invoke({"verify", "recurrences", "--k", "2", "--order", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("DISCREPANCY C[2,2] recurrence=-1/4 displayed=1/3"), std::string::npos);
  EXPECT_NE(r.out.find("PASS C[2,2] recurrence value matches contour-integral oracle"), std::string::npos);
  EXPECT_NE(r.out.find("PASS k=2 table equals radical expansion"), std::string::npos);
}

TEST(Cli, VerifyAllSuites) {
  for (const char* k : {"2", "4"}) {
    const auto r = invoke({"verify", "all", "--k", k, "--order", "6"});
    EXPECT_EQ(r.code, 0) << r.out;
    for (const char* suite : {"# identities", "# recurrences", "# annihilation", "# determinant",
                              "# surface", "# newton"})
      EXPECT_NE(r.out.find(suite), std::string::npos);
  }
}

TEST(Cli, NewtonTable) {
  const auto r = invoke({"newton-table", "--k", "2", "--max-m", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "N_0 = 2\nN_1 = 1 * s1^1\nN_2 = -2 * s2^1 + 1 * s1^2\n"
            "DN_-1 = 0\nDN_0 = 1\nDN_1 = 1 * s1^1\nDN_2 = -1 * s2^1 + 1 * s1^2\n");
  const auto j = invoke({"newton-table", "--k", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["N"].size(), 13u);
  EXPECT_EQ(doc["DN"].size(), 15u);
}

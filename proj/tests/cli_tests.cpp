// Runs the built command-line tool as a subprocess.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(BOOLCUM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, MomentsToCumulants) {
  const Result r = run(R"(moments-to-cumulants '{"order":3,"moments":["1","2","6"]}')");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["cumulants"], json({"1", "1", "3"}));
}

TEST(Cli, CumulantsToMoments) {
  const Result r = run(R"(cumulants-to-moments '{"order":3,"cumulants":["1","1","3"]}')");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["moments"], json({"1", "2", "6"}));
}

TEST(Cli, AdditiveConvolution) {
  const Result r = run(R"(bconv-add '{"order":2,"moments":["1","1"]}' '{"order":2,"moments":["1","1"]}')");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["moments"], json({"2", "4"}));
}

TEST(Cli, ProductConvolutionShift) {
  const std::string x = R"('{"order":2,"moments":["1","3"]}')", y = R"('{"order":2,"moments":["2","5"]}')";
  const Result plain = run("bconv-mul " + x + " " + y);
  const Result shifted = run("bconv-mul --shift " + x + " " + y);
  ASSERT_EQ(plain.status, 0);
  ASSERT_EQ(shifted.status, 0);
  // m1(Z) = 1 + 2 + 1*2 and m1(1 + Z) = 1 + m1(Z).
  EXPECT_EQ(json::parse(plain.out)["moments"][0], "5");
  EXPECT_EQ(json::parse(shifted.out)["moments"][0], "6");
}

TEST(Cli, Truncation) {
  const Result r = run(R"(moments-to-cumulants -n 2 '{"order":3,"moments":["1","2","6"]}')");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["order"], 2);
}

TEST(Cli, OperatorValuedConvert) {
  const Result r = run(
      R"(ov-convert '{"dim":1,"order":2,"moments":[{"arity":0,"table":{"":[["2"]]}},{"arity":1,"table":{"0,0":[["5"]]}}]}')");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["components"][1]["table"]["0,0"][0][0], "1");
  const Result back = run("ov-convert '" + j.dump() + "'");
  ASSERT_EQ(back.status, 0);
  EXPECT_EQ(json::parse(back.out)["moments"][1]["table"]["0,0"][0][0], "5");
}

TEST(Cli, Errors) {
  EXPECT_EQ(run("moments-to-cumulants '{bad'").status, 1);
  EXPECT_EQ(run(R"(moments-to-cumulants '{"order":1,"moments":["1/0"]}')").status, 1);
  EXPECT_EQ(run("moments-to-cumulants /nonexistent/file.json").status, 1);
  EXPECT_EQ(run("no-such-command").status, 1);
}

TEST(Cli, VerifySuitesPass) {
  const Result r = run("verify --seed 3 -n 6 --cases 5");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["results"].size(), 10u);
  const Result ov = run("ov-verify --seed 3 -n 3 -d 2 --cases 2");
  ASSERT_EQ(ov.status, 0);
  EXPECT_TRUE(json::parse(ov.out)["passed"].get<bool>());
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fsi/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fsikit");
  std::ostringstream out, err;
  const int code = fsi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("info json for S3") {
  const auto r = run({"info", "--group", "preset:symmetric:3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"order\":6,\"num_classes\":3,\"num_real_classes\":3,\"squares_index\":2}\n");
}

TEST_CASE("global options may precede the subcommand") {
  const auto r = run({"--group", "preset:cyclic:4", "info"});
  CHECK(r.code == 0);
  CHECK(r.out == "order=4  k=4  k_r=2  squares_index=2\n");
}

TEST_CASE("recover prints the multiset") {
  const auto r = run({"recover", "--group", "preset:quaternion:8"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "k_r=5  multiset: 1,1,1,1,-2");
  CHECK(r.out.find("polynomial: X^5 - 7/2*X^4 + 4*X^3 - X^2 - X + 1/2") != std::string::npos);
  CHECK(r.out.find("roots: 1,1,1,1,-1/2") != std::string::npos);
  const auto slow = run({"recover", "--no-shortcut", "--group", "preset:quaternion:8"});
  CHECK(first_line(slow.out) == "k_r=5  multiset: 1,1,1,1,-2");
  CHECK(slow.out.find("s(1..7)") != std::string::npos);
}

TEST_CASE("recover json uses strings for big numbers") {
  const auto r = run({"recover", "--group", "preset:symmetric:3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"order\":6,\"num_real_classes\":3,\"s_sequence\":[\"4\",\"18\",\"90\",\"486\"],"
        "\"power_sums\":[\"3\",\"5/2\",\"9/4\"],\"polynomial\":[\"-1/2\",\"2\",\"-5/2\",\"1\"],"
        "\"roots\":[\"1\",\"1\",\"1/2\"],\"multiset\":[\"2\",\"1\",\"1\"]}\n");
}

TEST_CASE("ssequence") {
  auto r = run({"ssequence", "--group", "preset:symmetric:3", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "s_2(1) = 4\ns_2(2) = 18\ns_2(3) = 90\ns_2(4) = 486\n");
  r = run({"ssequence", "--group", "preset:cyclic:3", "--max-n", "3", "--k", "3", "--strategy",
           "element_dp", "--format", "json"});
  CHECK(r.out == "{\"order\":3,\"s_sequence\":[\"3\",\"9\",\"27\"]}\n");
  r = run({"ssequence", "--group", "preset:symmetric:3", "--max-n", "2", "--strategy", "magic"});
  CHECK(r.code == 2);
  r = run({"ssequence", "--group", "preset:symmetric:3"});
  CHECK(r.code == 2);
}

TEST_CASE("indicators") {
  auto r = run({"indicators", "--group", "preset:cyclic:3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"order\":3,\"num_classes\":3,\"num_real_classes\":1,\"multiset\":[\"1\"],"
        "\"summary\":{\"plus\":1,\"minus\":0,\"zero\":2}}\n");
  r = run({"indicators", "--group", "preset:quaternion:8"});
  CHECK(r.out.find("indicator -1: 1") != std::string::npos);
}

TEST_CASE("detect-negative") {
  auto r = run({"detect-negative", "--group", "preset:quaternion:8"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "witness n=3: s(3)*|G| < s(4)");
  r = run({"detect-negative", "--group", "preset:symmetric:3", "--max-n", "7"});
  CHECK(r.out == "no witness up to 7\n");
  r = run({"detect-negative", "--group", "preset:quaternion:8", "--format", "json"});
  CHECK(r.out == "{\"order\":8,\"witness\":{\"n\":\"3\",\"lhs\":\"1792\",\"rhs\":\"2176\"}}\n");
  r = run({"detect-negative", "--group", "preset:cyclic:5", "--format", "json"});
  CHECK(r.out == "{\"order\":5,\"witness\":null}\n");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--group", "preset:sl23"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS sl23/fixture") != std::string::npos);
  r = run({"verify", "--suite", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"passed\":true,\"checks\":[", 0) == 0);
}

TEST_CASE("bench asserts agreement and reports timings") {
  const auto r = run({"bench", "--group", "preset:symmetric:4", "--max-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("class_algebra [scalar]") != std::string::npos);
  CHECK(r.out.find("element_dp [scalar]") != std::string::npos);
}

TEST_CASE("file sources") {
  const std::string gens = "s3_cli_test.gens";
  std::ofstream(gens) << "3\n1 2 0\n1 0 2\n";
  auto r = run({"info", "--group", "file:" + gens});
  CHECK(r.code == 0);
  CHECK(r.out == "order=6  k=3  k_r=3  squares_index=2\n");

  const std::string table = "c2_cli_test.multtable";
  std::ofstream(table) << "2\n0 1\n1 0\n";
  r = run({"recover", "--group", "file:" + table});
  CHECK(first_line(r.out) == "k_r=2  multiset: 1,1");
  r = run({"info", "--group", "file:" + gens, "--input-format", "multtable"});
  CHECK(r.code == 2);

  std::ofstream(gens) << "2\n0 1\n1 0 0\n";
  r = run({"info", "--group", "file:" + gens});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::remove(gens.c_str());
  std::remove(table.c_str());
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"info"}).code == 2);
  CHECK(run({"info", "--group", "preset:nonsense"}).code == 2);
  CHECK(run({"info", "--group", "nowhere"}).code == 2);
  CHECK(run({"info", "--group", "file:/nonexistent/x.gens"}).code == 2);
  CHECK(run({"info", "--group", "preset:symmetric:6", "--order-cap", "100"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"info", "--group", "preset:cyclic:3", "--format", "xml"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("detect-negative") != std::string::npos);
}

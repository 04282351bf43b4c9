#include <gtest/gtest.h>

#include <sstream>

#include "bnlat/cli/app.hpp"

namespace bnlat::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BNLAT_DATA_DIR) + "/" + name; }

TEST(Cli, CubicSigmaPi) {
  const Result r = run_cli({"cubic", "sigma", data("pi.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["gram"], Json::parse("[[14,7],[7,2]]"));
  EXPECT_EQ(r.json()["det"], -21);
}

TEST(Cli, ReportsCheck) {
  for (const char* which : {"table1", "clifford3", "pi", "example-a2", "all"}) {
    const Result r = run_cli({"paper", which, "--check"});
    EXPECT_EQ(r.code, 0) << which << r.err;
    EXPECT_TRUE(r.json()["passed"].get<bool>());
  }
  EXPECT_EQ(run_cli({"paper", "table1", "--text"}).out.rfind("report table1: PASS", 0), 0u);
}

TEST(Cli, MismatchExitCode) {
  repro::Report bad{"demo", {}};
  bad.add("x", "identity", Json{{"x", 0}}, 0, 1);
  EXPECT_EQ(detail::report_exit_code({bad}, true), kMismatch);
  EXPECT_EQ(detail::report_exit_code({bad}, false), kOk);
  EXPECT_EQ(detail::report_exit_code({repro::reproduce_table1()}, true), kOk);
}

TEST(Cli, EasyTest) {
  const Result r = run_cli({"lattice", "easy-test", data("diag_3_2_1.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["verdict"], "Reject(3)");
  EXPECT_EQ(run_cli({"lattice", "easy-test", "--text", data("diag_3_2_1.json")}).out.rfind("Reject(3)", 0),
            0u);
}

TEST(Cli, LatticeInfo) {
  const Result r = run_cli({"lattice", "info", data("table1_gamma0.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["det"], -4);
  EXPECT_EQ(j["signature"], Json::parse("[1,1,0]"));
  EXPECT_TRUE(j["even"].get<bool>());
  EXPECT_EQ(j["discriminant_group"]["invariants"], Json::parse("[2,2]"));
  EXPECT_EQ(j["gauss_milgram_signature"], 0);
  const Result degenerate = run_cli({"lattice", "info", "-"}, R"({"gram": [[0]]})");
  ASSERT_EQ(degenerate.code, 0) << degenerate.err;
  EXPECT_TRUE(degenerate.json()["discriminant_group"].is_null());
}

TEST(Cli, Overlattices) {
  const Result r = run_cli({"lattice", "overlattices", data("table1_gamma0.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(r.json()["overlattices"].size(), 2u);
  EXPECT_EQ(r.json()["overlattices"][1]["index"], 2);
  EXPECT_EQ(r.json()["overlattices"][1]["basis"][1][1], "1/2");
  const Result none = run_cli({"lattice", "overlattices", "-"}, R"({"gram": [[14,6],[6,2]]})");
  EXPECT_EQ(none.json()["overlattices"].size(), 1u);
  const Result odd = run_cli({"lattice", "overlattices", data("diag_3_2_1.json")});
  EXPECT_EQ(odd.code, 1);
}

TEST(Cli, CubicCommands) {
  const Result roots = run_cli({"cubic", "roots", data("bc_6_8.json")});
  ASSERT_EQ(roots.code, 0) << roots.err;
  EXPECT_EQ(roots.json()["short_roots"][0]["vector"], Json::parse("[4,-3,2]"));
  EXPECT_FALSE(roots.json()["root_free"].get<bool>());
  EXPECT_NE(run_cli({"--text", "cubic", "roots", data("bc_6_8.json")}).out.find("short root 4h2-3T+2J"),
            std::string::npos);
  EXPECT_TRUE(run_cli({"cubic", "roots", data("pi.json")}).json()["root_free"].get<bool>());

  for (const char* f : {"pi.json", "pi_planes.json"}) {
    const Result nf = run_cli({"cubic", "normal-form", data(f)});
    ASSERT_EQ(nf.code, 0) << nf.err;
    EXPECT_EQ(nf.json()["b"], 7);
    EXPECT_EQ(nf.json()["c"], 12);
  }
  const Result marks = run_cli({"cubic", "markings", data("example_a2.json")});
  ASSERT_EQ(marks.code, 0) << marks.err;
  EXPECT_EQ(marks.json()["markings"].size(), 4u);

  const Result scan = run_cli({"cubic", "scan", "--bmax", "7", "--cmax", "12"});
  ASSERT_EQ(scan.code, 0) << scan.err;
  bool saw_pi = false;
  const Json table = scan.json();
  for (const auto& row : table["rows"])
    if (row["b"] == 7 && row["c"] == 12) {
      saw_pi = true;
      EXPECT_EQ(row["short_roots"], 0);
      EXPECT_EQ(row["long_roots"], 0);
      EXPECT_EQ(row["sigma"], Json::parse("[[14,7],[7,2]]"));
    }
  EXPECT_TRUE(saw_pi);
}

TEST(Cli, K3Classify) {
  const Result r = run_cli({"k3", "classify", data("k3_example_a2_second.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["verdict"], "Special(3)");
  EXPECT_EQ(r.json()["gamma_bound"], 3);
  EXPECT_EQ(r.json()["markers"][0]["kind"], "Gamma3");
  const Result g0 = run_cli({"k3", "classify", data("table1_gamma0.json")});
  EXPECT_EQ(g0.json()["verdict"], "Special(0)");
  EXPECT_EQ(g0.json()["excluded"][0]["witness"], Json::parse("[0,2]"));
}

TEST(Cli, Stdin) {
  const Result r = run_cli({"cubic", "sigma", "-"},
                           R"({"gram": [[3,4,0],[4,10,4],[0,4,4]], "distinguished": {"h2": 0},
                               "marking": {"T": 1}})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["gram"], Json::parse("[[14,6],[6,2]]"));
}

TEST(Cli, InputErrors) {
  auto expect_input_error = [](const Result& r, const std::string& needle) {
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find(needle), std::string::npos) << r.err;
  };
  expect_input_error(run_cli({"lattice", "info", "-"}, "{\"gram\": [[1,2]"), "malformed JSON");
  expect_input_error(run_cli({"lattice", "info", "-"}, R"({"gram": [[1,2],[3,4]]})"), "not symmetric");
  expect_input_error(run_cli({"lattice", "info", "-"}, R"({"gram": [[1,2,3],[2,1,0]]})"), "square");
  expect_input_error(run_cli({"lattice", "info", "-"}, R"({"gram": [["x"]]})"), "not an integer");
  expect_input_error(run_cli({"lattice", "info", "/nonexistent.json"}), "cannot open");
  expect_input_error(
      run_cli({"cubic", "markings", "-"},
              R"({"gram": [[3,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]],
                  "distinguished": {"h2": 0}})"),
      "rank above 4");
  expect_input_error(run_cli({"cubic", "sigma", data("diag_3_2_1.json")}), "h2");
  expect_input_error(run_cli({"k3", "classify", data("pi.json")}), "\"H\"");
  expect_input_error(run_cli({"cubic", "sigma", "-"}, R"({"gram": [[3]], "distinguished": {"h2": 4}})"),
                     "out of range");
  expect_input_error(run_cli({"cubic", "roots", "-"}, R"({"gram": [[3,0],[0,0]], "distinguished": {"h2": 0}})"),
                     "degenerate");
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"cubic", "scan", "--bmax", "-1"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("paper"), std::string::npos);
}

TEST(Cli, LargeIntegersSurviveSerialization) {
  // 2^53 + 1 is not representable as a double
  const Result r = run_cli({"lattice", "info", "-"}, R"({"gram": [["9007199254740993"]]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["det"], "9007199254740993");
  EXPECT_EQ(r.json()["gram"][0][0], "9007199254740993");
  const Result small = run_cli({"lattice", "info", "-"}, R"({"gram": [["9007199254740991"]]})");
  EXPECT_EQ(small.json()["det"], 9007199254740991LL);
}

TEST(Cli, ByteIdenticalAcrossRuns) {
  EXPECT_EQ(run_cli({"paper", "all"}).out, run_cli({"paper", "all"}).out);
  EXPECT_EQ(run_cli({"cubic", "scan", "--text"}).out, run_cli({"cubic", "scan", "--text"}).out);
}

}  // namespace
}  // namespace bnlat::cli

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rhocalc_tools/cli.hpp"
#include "rhocalc_tools/serialize.hpp"

using namespace rhocalc::tools;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args, input);
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, CharsReport) {
  const auto report = run_json({"chars", "--group", "cyclic:5"});
  EXPECT_EQ(report["command"], "chars");
  EXPECT_EQ(report["exit_code"], 0);
  EXPECT_EQ(report["results"]["rank_plus"], 2);
  EXPECT_EQ(report["results"]["rank_minus"], 2);
  EXPECT_EQ(report["inputs"]["group"], "cyclic:5");
  EXPECT_EQ(report["inputs"]["include-identity"], false);
  EXPECT_FALSE(report.contains("meta"));
}

TEST(Cli, InputsEchoDefaultsInDefinitionOrder) {
  const auto report = run_json({"lens"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : report["inputs"].items()) keys.push_back(k);
  ASSERT_GE(keys.size(), 3u);
  EXPECT_EQ(keys[0], "n");
  EXPECT_EQ(keys[1], "weights");
  EXPECT_EQ(report["inputs"]["n"], "3");
}

TEST(Cli, LensTable) {
  const auto report = run_json({"lens", "--n", "3", "--weights", "1,1"});
  EXPECT_EQ(report["results"]["rho2"]["exact"], "2/9");
  EXPECT_EQ(report["results"]["rho"][1]["value"]["exact"], "-1/9");
  EXPECT_EQ(report["results"]["tau_symmetric"], true);
}

TEST(Cli, ExitCodes) {
  const auto bad_usage = run({"nonsense"});
  EXPECT_EQ(bad_usage.code, kValidation);
  EXPECT_FALSE(bad_usage.err.empty());
  EXPECT_EQ(run({}).code, kValidation);
  const auto bad_value = run({"--format", "json", "lens", "--n", "4"});
  EXPECT_EQ(bad_value.code, kValidation);
  EXPECT_EQ(Json::parse(bad_value.out)["diagnostics"][0]["level"], "error");
  const auto failed_quadrature =
      run({"circle", "--subset", "finite:3", "--audit", "--tol", "1e-18", "--abs-tol", "1e-30", "--max-subdivisions", "2"});
  EXPECT_EQ(failed_quadrature.code, kComputation);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(Cli, ConfigFileWithOverride) {
  const auto path = std::filesystem::temp_directory_path() / "rhocalc_cli_test.ini";
  {
    std::ofstream file(path);
    file << "format=json\n[lens]\nn=5\nweights=1,2\n";
  }
  const auto from_file = run({"--config", path.string(), "lens"});
  const auto report = Json::parse(from_file.out);
  EXPECT_EQ(report["results"]["lens"]["name"], "L(5;1,2)");
  const auto overridden = Json::parse(run({"--config", path.string(), "lens", "--n", "7"}).out);
  EXPECT_EQ(overridden["results"]["lens"]["name"], "L(7;1,2)");
  std::filesystem::remove(path);
}

TEST(Cli, DeterministicJson) {
  const std::vector<std::string> args = {"--format", "json", "circle", "--subset", "geo:2", "--terms", "30"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> zoo = {"--format", "json", "growth", "--group", "lamplighter:2", "--max-radius", "6"};
  EXPECT_EQ(run(zoo).out, run(zoo).out);
}

TEST(Cli, MetaBlock) {
  const auto report = run_json({"--meta", "ringcheck", "--orders", "3,inf", "--values", "1/3,1/5"});
  ASSERT_TRUE(report.contains("meta"));
  EXPECT_TRUE(report["meta"].contains("timestamp"));
  EXPECT_EQ(report["results"]["ring"], "Z[1/3]");
  EXPECT_EQ(report["results"]["membership"][0]["contains"], true);
  EXPECT_EQ(report["results"]["membership"][1]["contains"], false);
}

TEST(Cli, ZooScript) {
  const auto report = run_json({"zoo", "--group", "qsemi"}, "# comment\nmultiply e:0 q:1 ; e:0^-1\none-test q:-2\nintegers 0\n");
  const auto& lines = report["results"]["lines"];
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["result"], "q:2");
  EXPECT_EQ(lines[1]["result"], false);
  EXPECT_EQ(lines[2]["result"], Json::array({"1"}));
  const auto bad = run({"zoo", "--group", "qsemi"}, "normalize zz\n");
  EXPECT_EQ(bad.code, kValidation);
}

TEST(Cli, TsvBall) {
  const auto r = run({"--format", "tsv", "growth", "--group", "lamplighter:2", "--element", "lamp:0", "--max-radius", "2"});
  EXPECT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "normal_form\tdistance");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 5);
}

TEST(Cli, InduceAndCircle) {
  const auto induce = run_json({"induce", "--sub", "cyclic:2", "--target", "cyclic:4", "--image", "2", "--rho", "3,5"});
  EXPECT_EQ(induce["results"]["classes"][2]["value"]["exact"], "5");
  EXPECT_EQ(induce["results"]["classes"][1]["value"]["exact"], "0");
  EXPECT_EQ(induce["results"]["class_sum_preserved"], true);
  const auto circle = run_json({"circle", "--subset", "finite:1,2,3"});
  EXPECT_EQ(circle["results"]["exact_sum"]["exact"], "11/6*I/pi");
  const auto divergent = run_json({"circle", "--subset", "primes", "--terms", "20", "--ahat", "0"});
  EXPECT_EQ(divergent["results"]["verdict"]["kind"], "Divergent");
  EXPECT_EQ(divergent["results"]["product_verdict"]["kind"], "Convergent");
}

TEST(Cli, VerifySubset) {
  const auto r = run({"verify", "--criteria", "2,8"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("criterion 2: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("criterion 8: PASS"), std::string::npos);
  EXPECT_EQ(run({"verify", "--criteria", "12"}).code, kValidation);
}

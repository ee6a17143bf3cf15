#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <set>
#include <string>

#include "overring/cli.hpp"
#include "overring/serialization.hpp"

using namespace overring::cli;
namespace ser = overring::serialization;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_with(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig gens(Command cmd, std::string g, bool json = false) {
  RunConfig c;
  c.command = cmd;
  c.gens = std::move(g);
  c.format = json ? Format::json : Format::text;
  return c;
}

RunConfig preset(std::string p, bool json = false) {
  RunConfig c;
  c.command = Command::tower_report;
  c.preset = std::move(p);
  c.format = json ? Format::json : Format::text;
  return c;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, NsgReportJson) {
  const auto o = run_with(gens(Command::nsg_report, "2,5", true));
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"overring_count\":4,\"sd_count\":3,\"phi_surjective\":true"), std::string::npos);
  EXPECT_NE(o.out.find("\"schema\":1"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  for (const auto& c : {gens(Command::nsg_report, "3,4,5", true), preset("nls5", true), preset("gs8:4", true),
                        preset("tlsd5:9", true)}) {
    const auto line = first_line(run_with(c).out);
    EXPECT_EQ(ser::dump(ser::to_json(ser::report_from_json(ser::Json::parse(line)))), line);
  }
}

TEST(Cli, InvalidInputExitsTwo) {
  auto o = run_with(gens(Command::nsg_report, "2,4"));
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("gcd"), std::string::npos);

  o = run_with(preset("tlsd5:2"));
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("n must be >= 3"), std::string::npos);

  o = run_with(gens(Command::nsg_sd, "2,x"));
  EXPECT_EQ(o.code, 2);

  RunConfig none;
  none.command = Command::nsg_report;
  EXPECT_EQ(run_with(none).code, 2);

  RunConfig two = gens(Command::nsg_report, "2,5");
  two.preset = "nls5";
  EXPECT_EQ(run_with(two).code, 2);

  RunConfig small = gens(Command::nsg_report, "2,5");
  small.f_max = 2;
  EXPECT_EQ(run_with(small).code, 2);

  EXPECT_EQ(run_with(gens(Command::nsg_report, "2,5")).code, 0);
  o = run_with(preset("nls5"));
  EXPECT_EQ(o.code, 0);
  o = run_with(gens(Command::nsg_phi, "2,5"));
  EXPECT_EQ(o.code, 0);
}

TEST(Cli, NsgCommandsNeedSemigroup) {
  RunConfig c;
  c.command = Command::nsg_sd;
  c.preset = "nls5";
  const auto o = run_with(c);
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("numerical semigroup"), std::string::npos);
}

TEST(Cli, MalformedDescriptorFile) {
  const std::string path = ::testing::TempDir() + "bad_descriptor.json";
  {
    std::ofstream f(path);
    f << "{\"kind\": \"tower\", \"base\": ";
  }
  RunConfig c;
  c.command = Command::tower_report;
  c.file = path;
  const auto o = run_with(c);
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("malformed JSON"), std::string::npos);

  RunConfig missing = c;
  missing.file = path + ".absent";
  EXPECT_EQ(run_with(missing).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, DescriptorFile) {
  const std::string path = ::testing::TempDir() + "prufer.json";
  {
    std::ofstream f(path);
    f << R"({"kind":"prufer_y","dim":4})";
  }
  RunConfig c;
  c.command = Command::tower_report;
  c.file = path;
  c.format = Format::json;
  const auto o = run_with(c);
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"overring_count\":7"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, OracleOnlyAddsRows) {
  for (auto cmd : {Command::nsg_report, Command::nsg_overrings, Command::nsg_sd, Command::nsg_phi}) {
    for (bool json : {false, true}) {
      auto plain = gens(cmd, "4,6,7,9", json);
      auto checked = plain;
      checked.oracle = true;
      const auto a = run_with(plain);
      const auto b = run_with(checked);
      EXPECT_EQ(a.code, 0);
      EXPECT_EQ(b.code, 0);
      ASSERT_GT(b.out.size(), a.out.size());
      EXPECT_EQ(b.out.substr(0, a.out.size()), a.out);
    }
  }
}

TEST(Cli, TextLatticeIsIndented) {
  const auto o = run_with(gens(Command::nsg_overrings, "2,5"));
  EXPECT_NE(o.out.find("<2,5>"), std::string::npos);
  EXPECT_NE(o.out.find("\n  <2,3>"), std::string::npos);
  EXPECT_NE(o.out.find("\n    <1>"), std::string::npos);
}

TEST(Cli, PullbackPresets) {
  auto o = run_with(preset("dtuo5", true));
  EXPECT_NE(o.out.find("\"t_linked_under\":false"), std::string::npos);
  o = run_with(preset("k-plus-xkx", true));
  EXPECT_NE(o.out.find("\"t_linked_under\":true"), std::string::npos);
}

TEST(Cli, CheckPaperPasses) {
  RunConfig c;
  c.command = Command::check_paper;
  c.f_max = 8;
  const auto o = run_with(c);
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_NE(o.out.find("0 failed"), std::string::npos);

  RunConfig with_input = c;
  with_input.gens = "2,5";
  EXPECT_EQ(run_with(with_input).code, 2);
}

TEST(Cli, ExitOneIffSomeRowFails) {
  const auto rows = check_paper(6);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) EXPECT_EQ(r.passed(), r.expected == r.actual);
  std::set<int> criteria;
  for (const auto& r : rows) criteria.insert(r.criterion);
  EXPECT_EQ(criteria.size(), 12u);
}

TEST(Cli, ParseHelpers) {
  EXPECT_EQ(parse_generator_list("2,5"), (std::vector<int>{2, 5}));
  EXPECT_EQ(parse_generator_list("3 4 5"), (std::vector<int>{3, 4, 5}));
  EXPECT_THROW(parse_generator_list(""), std::invalid_argument);
  EXPECT_EQ(parse_command("check-paper"), Command::check_paper);
  EXPECT_FALSE(parse_command("nope"));
  EXPECT_EQ(to_string(Command::nsg_phi), "nsg-phi");
}

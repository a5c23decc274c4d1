#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "flipgraph/cli.hpp"
#include "flipgraph/error.hpp"
#include "flipgraph/serialize.hpp"
#include "flipgraph/verify.hpp"

using namespace flipgraph;

#ifndef FLIPGRAPH_EXAMPLES_DIR
#error "FLIPGRAPH_EXAMPLES_DIR must be defined"
#endif

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const char* env_budget = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err, env_budget);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& name) {
  return std::string(FLIPGRAPH_EXAMPLES_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("flipgraph_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Json, RoundTripIsFixedPoint) {
  for (const auto& entry : std::filesystem::directory_iterator(FLIPGRAPH_EXAMPLES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const auto first = parse_coloured(text);
    const std::string once = to_json(first.ct, first.colour_count).dump();
    const auto second = parse_coloured(once);
    EXPECT_EQ(second.ct, first.ct) << entry.path();
    EXPECT_EQ(to_json(second.ct, second.colour_count).dump(), once) << entry.path();
  }
}

TEST(Json, CanonicalizesDiagonalOrder) {
  const auto a = parse_coloured(R"({"n":6,"m":2,"diagonals":[[4,2],[0,4],[2,0]],"colours":[1,0,1,1]})");
  EXPECT_EQ(to_json(a.ct, 2).dump(), R"({"n":6,"m":2,"diagonals":[[0,2],[0,4],[2,4]],"colours":[1,0,1,1]})");
}

TEST(Json, ErrorsNameTheField) {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse_coloured(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse);
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message(R"({"n":4,"m":2,"diagonals":[[0,2]]})").find("'colours'"), std::string::npos);
  EXPECT_NE(message(R"({"n":4,"m":2,"diagonals":[[0,2]],"colours":[0]})").find("'colours'"), std::string::npos);
  EXPECT_NE(message(R"({"n":4,"m":2,"diagonals":[[0,2]],"colours":[0,2]})").find("colours[1]"), std::string::npos);
  EXPECT_NE(message(R"({"n":"4","m":2,"diagonals":[],"colours":[]})").find("'n'"), std::string::npos);
  EXPECT_NE(message(R"({"n":5,"m":2,"diagonals":[[0,2],[1,3]],"colours":[0,0,0]})").find("'diagonals'"),
            std::string::npos);
  EXPECT_NE(message("{\"n\":4,\n\"m\":2,,}").find("line 2"), std::string::npos);
}

TEST(Keys, CanonicalKey) {
  const auto sq = ColouredTriangulation::make(fan(4, 0), {0, 1});
  EXPECT_EQ(canonical_key(sq), "4;0-2;01");
  const auto wide = ColouredTriangulation::make(fan(4, 0), {3, 11});
  EXPECT_EQ(canonical_key(wide), "4;0-2;3.11");
}

TEST(Cli, CensusExamples) {
  auto r = cli({"census", "--vertices", "6", "--colours", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1,28\n4,16\n5,12\n6,12\n");
  EXPECT_EQ(cli({"census", "--vertices", "3", "--colours", "2"}).out, "1,2\n");
  EXPECT_EQ(cli({"census", "-n", "4", "--header"}).out, "size,count\n1,4\n2,2\n");
  const auto json = Json::parse(cli({"census", "-n", "5", "--format", "json"}).out);
  EXPECT_EQ(json.size(), 2u);
  EXPECT_EQ(json[1]["size"], 3);
}

TEST(Cli, ByteIdenticalAcrossWorkers) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"census", "-n", "8"},
           {"export", "-n", "6", "--format", "dot"},
           {"export", "-n", "6", "--format", "json", "--drop-isolated"},
           {"verify", "-n", "7"},
           {"census", "-n", "6", "-m", "3"}}) {
    auto one = cmd;
    one.insert(one.end(), {"--workers", "1"});
    auto four = cmd;
    four.insert(four.end(), {"--workers", "4"});
    const auto a = cli(one);
    const auto b = cli(four);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

TEST(Cli, VerifyReports) {
  const auto six = cli({"verify", "-n", "6"});
  EXPECT_EQ(six.code, kExitOk) << six.out;
  EXPECT_EQ(six.out.find("FAIL"), std::string::npos);
  const auto eight = cli({"verify", "-n", "8"});
  EXPECT_NE(eight.out.find("min_nontrivial_size expected ≥6 actual 6 PASS"), std::string::npos);
  const auto three = cli({"verify", "-n", "5", "-m", "3"});
  EXPECT_EQ(three.code, kExitOk) << three.out;
}

TEST(Cli, ExportAndComponent) {
  const auto dot = cli({"export", "-i", example("fan_path_hexagon.json")});
  EXPECT_EQ(dot.code, kExitOk);
  EXPECT_EQ(dot.out.rfind("graph component {", 0), 0u);
  EXPECT_EQ(std::count(dot.out.begin(), dot.out.end(), '\n'), 1 + 4 + 3 + 1);
  const auto full = cli({"export", "-n", "4"});
  EXPECT_EQ(std::count(full.out.begin(), full.out.end(), '\n'), 1 + 8 + 2 + 1);
  const auto dropped = cli({"export", "-n", "4", "--drop-isolated"});
  EXPECT_EQ(std::count(dropped.out.begin(), dropped.out.end(), '\n'), 1 + 4 + 2 + 1);
  const auto comp = Json::parse(cli({"component", "-i", example("square_plus.json")}).out);
  EXPECT_EQ(comp["ids"], Json::array({0, 7}));
  EXPECT_EQ(comp["members"][1]["key"], "4;1-3;11");
  EXPECT_EQ(comp["stats"]["shape_class"], "path");
}

TEST(Cli, AnalyzeAndEquiv) {
  const auto a = Json::parse(cli({"analyze", example("square_plus.json")}).out);
  EXPECT_EQ(a["weighting"], Json::array({-1, 1, -1, 1}));
  EXPECT_EQ(a["valuation"], Json::array({0}));
  EXPECT_EQ(a["flippable"], Json::parse("[[0,2]]"));
  const auto h = Json::parse(cli({"analyze", example("heptagon.json")}).out);
  EXPECT_EQ(h["colouring"], Json::parse(R"(["a","b","c","d","b","a","c"])"));
  EXPECT_EQ(cli({"equiv", example("hexagon_left.json"), example("hexagon_right.json")}).out,
            "not-equivalent\n");
  EXPECT_EQ(cli({"equiv", example("heptagon.json"), example("heptagon.json")}).out, "equivalent\n");
}

TEST(Cli, Enumerate) {
  const auto r = cli({"enumerate", "-n", "4"});
  EXPECT_EQ(r.out, "4;0-2;00\n4;0-2;01\n4;0-2;10\n4;0-2;11\n4;1-3;00\n4;1-3;01\n4;1-3;10\n4;1-3;11\n");
  const auto j = Json::parse(cli({"enumerate", "-n", "5", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 40u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"census"}).code, kExitUsage);
  EXPECT_EQ(cli({"census", "-n", "2"}).code, kExitUsage);
  EXPECT_EQ(cli({"census", "-n", "6", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(cli({"census", "-n", "6", "--sigma", "0,0"}).code, kExitUsage);
  EXPECT_EQ(cli({"census", "-n", "6", "-m", "3", "--sigma", "1,0"}).code, kExitUsage);
  EXPECT_EQ(cli({"census", "-n", "6", "--format", "dot"}).code, kExitUsage);
  const auto budget = cli({"census", "-n", "9", "--budget", "1000"});
  EXPECT_EQ(budget.code, kExitBudget);
  EXPECT_FALSE(budget.err.empty());
  EXPECT_EQ(cli({"census", "-n", "9"}, "1000").code, kExitBudget);
  EXPECT_EQ(cli({"census", "-n", "6"}, "1000").code, kExitOk);
  EXPECT_EQ(cli({"census", "-n", "6", "--budget", "1000"}, "5").code, kExitOk);
  EXPECT_EQ(cli({"census", "-n", "6"}, "lots").code, kExitUsage);
  const auto bad = temp_file("bad.json", "{\"n\": 4,\n \"m\": 2\n");
  const auto parse = cli({"analyze", bad});
  EXPECT_EQ(parse.code, kExitData);
  EXPECT_NE(parse.err.find("line"), std::string::npos);
  const auto field = temp_file("field.json", R"({"n":4,"m":2,"diagonals":[[0,1]],"colours":[0,0]})");
  const auto f = cli({"analyze", field});
  EXPECT_EQ(f.code, kExitData);
  EXPECT_NE(f.err.find("diagonals"), std::string::npos);
  EXPECT_EQ(cli({"analyze", "/nonexistent/file.json"}).code, kExitUsage);
  EXPECT_EQ(cli({"census", "--help"}).code, kExitOk);
}

TEST(Cli, OutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "flipgraph_test_out.csv").string();
  EXPECT_EQ(cli({"census", "-n", "5", "--out", path}).out, "");
  std::ifstream in(path);
  const std::string body{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  EXPECT_EQ(body, "1,10\n3,10\n");
}

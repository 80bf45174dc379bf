#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "htg/grid_io.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run htg_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = htg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Summary {
  std::string command;
  std::size_t input = 0;
  std::size_t output = 0;
  double ms = -1;
};

Summary summary_of(const std::string& out) {
  static const std::regex line(R"(htg (\S+) input_cells=(\d+) output_cells=(\d+) elapsed_ms=(\d+\.\d{3})\n$)");
  std::smatch m;
  if (!std::regex_search(out, m, line)) {
    ADD_FAILURE() << "no summary line in: " << out;
    return {};
  }
  return {m[1], std::stoull(m[2]), std::stoull(m[3]), std::stod(m[4])};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("htg_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

std::string slurp(const std::string& p) { return htg::read_text_file(p); }

}  // namespace

TEST_F(CliTest, GenIsByteIdentical) {
  ASSERT_EQ(htg_run({"gen", "paper2d", "--seed", "42", "--out", path("a.htg")}).code, 0);
  ASSERT_EQ(htg_run({"gen", "paper2d", "--seed", "42", "--out", path("b.htg")}).code, 0);
  EXPECT_EQ(slurp(path("a.htg")), slurp(path("b.htg")));
  const auto r = htg_run({"gen", "uniform(3,3,1)", "--out", path("c.htg")});
  EXPECT_EQ(summary_of(r.out).output, 28u);
  EXPECT_EQ(htg::read_grid_file(path("c.htg")).total_cells(), 28u);
  EXPECT_EQ(summary_of(htg_run({"gen", "uniform(2,2,0)", "--out", path("d.htg")}).out).output, 1u);
}

TEST_F(CliTest, Stats) {
  htg_run({"gen", "uniform(2,2,2)", "--out", path("u.htg")});
  const auto r = htg_run({"stats", path("u.htg")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"total_cells\": 21"), std::string::npos);
  EXPECT_NE(r.out.find("\"leaf_count\": 16"), std::string::npos);
  const auto s = summary_of(r.out);
  EXPECT_EQ(s.command, "stats");
  EXPECT_EQ(s.input, 21u);
  EXPECT_EQ(s.output, 16u);
}

TEST_F(CliTest, SurfaceCountsMatchFiles) {
  htg_run({"gen", "uniform(3,3,1)", "--out", path("u.htg")});
  const auto r = htg_run({"surface", path("u.htg"), "--format", "obj", "--out", path("u.obj")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(summary_of(r.out).output, 54u);
  std::ifstream in(path("u.obj"));
  std::size_t faces = 0;
  for (std::string line; std::getline(in, line);) faces += line.rfind("f ", 0) == 0;
  EXPECT_EQ(faces, 54u);

  htg_run({"gen", "paper2d", "--mask-density", "0.2", "--out", path("p.htg")});
  const auto e = htg_run({"elevate", path("p.htg"), "--height-scale", "0.5", "--out", path("e.json")});
  ASSERT_EQ(e.code, 0) << e.err;
  const std::string doc = slurp(path("e.json"));
  EXPECT_NE(doc.find("\"kind\": \"polymesh\""), std::string::npos);
  EXPECT_EQ(summary_of(e.out).output, oracle::surface_2d(htg::read_grid_file(path("p.htg"))).size());
}

// Full view of paper2d with a threshold sweep; counts follow the oracle.
TEST_F(CliTest, AdaptiveSweepMatchesOracle) {
  htg_run({"gen", "paper2d", "--out", path("p.htg")});
  const auto g = htg::read_grid_file(path("p.htg"));
  std::size_t previous = SIZE_MAX;
  for (const char* s : {"1", "4", "16", "64"}) {
    const auto r = htg_run({"adaptive", path("p.htg"), "--camera", std::string("400,600,1,") + s + ",1,1.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    htg::ViewRect rect{{0, 0}, {2, 3}};
    const auto expected = oracle::adaptive(g, oracle::depth_cap(400, 1, std::stod(s), 2), rect).size();
    const auto n = summary_of(r.out).output;
    EXPECT_EQ(n, expected) << s;
    EXPECT_LE(n, previous);
    previous = n;
  }
}

TEST_F(CliTest, Selections) {
  htg_run({"gen", "uniform(2,2,1)", "--out", path("u.htg")});
  auto r = htg_run({"select-locations", path("u.htg"), "--points", "0.25,0.75", "--preserve-topology", "--out",
                    path("m.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(slurp(path("m.json")).find("\"mask\": \"00010\""), std::string::npos);
  EXPECT_EQ(summary_of(r.out).output, 1u);

  r = htg_run({"select-ids", path("u.htg"), "--ids", "1,2,3,4", "--format", "obj", "--out", path("s.obj")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(summary_of(r.out).output, 4u);

  std::ofstream(path("req.txt")) << "# cells by id\n0\n3, 4\n";
  r = htg_run({"select-ids", path("u.htg"), "--request", path("req.txt")});
  EXPECT_EQ(summary_of(r.out).output, 1u);

  std::ofstream(path("pts.txt")) << "0.1 0.1\n0.9,0.9\n# comment\n";
  r = htg_run({"select-locations", path("u.htg"), "--request", path("pts.txt"), "--out", path("sel.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(summary_of(r.out).output, 2u);
  EXPECT_NE(slurp(path("sel.json")).find("\"kind\": \"unstructured\""), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  htg_run({"gen", "uniform(2,2,1)", "--out", path("u.htg")});
  htg_run({"gen", "uniform(3,2,1)", "--out", path("c.htg")});
  std::ofstream(path("bad.htg")) << "{\"version\": 7}";

  EXPECT_EQ(htg_run({"surface", path("bad.htg")}).code, htg::cli::kParseError);
  EXPECT_EQ(htg_run({"adaptive", path("u.htg")}).code, htg::cli::kBadParams);
  EXPECT_EQ(htg_run({"adaptive", path("u.htg"), "--camera", "1,2,3"}).code, htg::cli::kBadParams);
  EXPECT_EQ(htg_run({"adaptive", path("u.htg"), "--camera", "100,100,0,1,0,0"}).code, htg::cli::kBadParams);
  EXPECT_EQ(htg_run({"gen", "paper9d", "--out", path("x.htg")}).code, htg::cli::kBadParams);
  EXPECT_EQ(htg_run({"gen", "paper2d", "--mask-density", "2", "--out", path("x.htg")}).code, htg::cli::kBadParams);
  EXPECT_EQ(htg_run({"frobnicate"}).code, htg::cli::kBadParams);
  EXPECT_EQ(htg_run({"elevate", path("c.htg")}).code, htg::cli::kWrongDimension);
  EXPECT_EQ(htg_run({"select-locations", path("u.htg"), "--points", "0.5,0.5,0.5"}).code, htg::cli::kWrongDimension);
  EXPECT_EQ(htg_run({"select-ids", path("u.htg"), "--ids", "1,x"}).code, htg::cli::kBadParams);
  EXPECT_EQ(htg_run({"select-ids", path("u.htg"), "--ids", "1", "--preserve-topology", "--format", "obj"}).code,
            htg::cli::kBadParams);
  EXPECT_EQ(htg_run({"stats", path("missing.htg")}).code, htg::cli::kIoError);
  const auto r = htg_run({"stats", path("bad.htg")});
  EXPECT_NE(r.err.find("version"), std::string::npos);
}

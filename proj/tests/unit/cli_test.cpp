#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "bellmatch/cli/commands.hpp"
#include "bellmatch/cli/io.hpp"
#include "json.hpp"
#include "test_support.hpp"

using namespace bellmatch;
using namespace bellmatch::cli;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bellmatch_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path generate(const std::string& name, double ta, double tb, std::size_t n,
                    std::uint64_t seed) {
    std::ostringstream out, err;
    const fs::path p = path(name);
    EXPECT_EQ(cmd_generate({ta, tb, n, Seed{seed}, p}, out, err), ExitStatus::ok) << err.str();
    return p;
  }

  void write_list(const std::string& name, const std::string& text) {
    write_text(path(name), text);
  }

  std::ostringstream out_, err_;
  fs::path dir_;
};

nlohmann::json load_json(const fs::path& p) { return nlohmann::json::parse(read_text(p)); }

}  // namespace

TEST(RunRecordFormat, round_trip_preserves_run) {
  const PairedRun run = sample_pair_run({0.25, -1.5, 300, Seed{9}});
  const RunRecord back = parse_run_record(to_json(RunRecord::from_run(run)));
  EXPECT_EQ(back.a, run.a_list);
  EXPECT_EQ(back.b, run.b_list);
  EXPECT_EQ(back.theta_a, 0.25);
  EXPECT_EQ(back.theta_b, -1.5);
  EXPECT_EQ(back.seed, 9U);
  EXPECT_EQ(summarize_run(back.a, back.b), summarize_run(run.a_list, run.b_list));
}

TEST(RunRecordFormat, canonical_layout) {
  RunRecord r{0.0, 0.5, std::nullopt, DataList{1, -1}, DataList{-1, -1}};
  EXPECT_EQ(to_json(r),
            "{\"format_version\":1,\"theta_a\":0.0,\"theta_b\":0.5,\"n\":2,\"seed\":null,"
            "\"pairs\":[[1,-1],[-1,-1]]}\n");
  const RunRecord back = parse_run_record(to_json(r));
  EXPECT_FALSE(back.seed.has_value());
}

TEST(RunRecordFormat, rejects_malformed_records) {
  const char* bad[] = {
      "not json",
      "[1,2]",
      R"({"format_version":2,"theta_a":0,"theta_b":0,"n":1,"pairs":[[1,-1]]})",
      R"({"format_version":1,"theta_b":0,"n":1,"pairs":[[1,-1]]})",
      R"({"format_version":1,"theta_a":0,"theta_b":0,"n":2,"pairs":[[1,-1]]})",
      R"({"format_version":1,"theta_a":0,"theta_b":0,"n":1,"pairs":[[0,-1]]})",
      R"({"format_version":1,"theta_a":0,"theta_b":0,"n":1,"pairs":[[true,-1]]})",
      R"({"format_version":1,"theta_a":0,"theta_b":0,"n":1,"pairs":[[1,-1,1]]})",
      R"({"format_version":1,"theta_a":"x","theta_b":0,"n":1,"pairs":[[1,-1]]})",
      R"({"format_version":1,"theta_a":0,"theta_b":0,"n":0,"pairs":[]})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_run_record(text), FormatError) << text;
}

TEST(ListFileFormat, parses_signs_and_comments) {
  EXPECT_EQ(parse_list_text("# header\n+1 -1, 1\n-1 # tail\n"), (DataList{1, -1, 1, -1}));
  EXPECT_THROW(parse_list_text("1 0 1"), InvalidInput);
  EXPECT_THROW(parse_list_text("1 x"), InvalidInput);
}

TEST(AngleParsing, expressions_and_degrees) {
  EXPECT_DOUBLE_EQ(parse_angle("0.5", false), 0.5);
  EXPECT_DOUBLE_EQ(parse_angle("pi", false), pi);
  EXPECT_DOUBLE_EQ(parse_angle("-pi/4", false), -pi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("3pi/4", false), 3 * pi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("2*pi", false), 2 * pi);
  EXPECT_DOUBLE_EQ(parse_angle("90", true), pi / 2);
  EXPECT_THROW(parse_angle("pi", true), InvalidInput);
  EXPECT_THROW(parse_angle("abc", false), InvalidInput);
  EXPECT_THROW(parse_angle("pi/0", false), InvalidInput);
  const AxisRange ax = parse_axis("0:180:5", true);
  EXPECT_DOUBLE_EQ(ax.stop, pi);
  EXPECT_EQ(ax.steps, 5U);
  EXPECT_TRUE(parse_axis("pi/2", false).is_fixed());
  EXPECT_THROW(parse_axis("0:1", false), InvalidInput);
  EXPECT_THROW(parse_axis("0:1:0", false), InvalidInput);
}

TEST_F(CliTest, generate_equal_angles_and_determinism) {
  const fs::path p1 = generate("r1.json", 0.0, 0.0, 5, 7);
  const fs::path p2 = generate("r2.json", 0.0, 0.0, 5, 7);
  EXPECT_EQ(read_text(p1), read_text(p2));
  const RunRecord r = read_run_record(p1);
  ASSERT_EQ(r.n(), 5U);
  for (std::size_t i = 0; i < r.n(); ++i) EXPECT_EQ(value(r.a[i]), -value(r.b[i]));
}

TEST_F(CliTest, generate_summary_matches_reread_file) {
  std::ostringstream out, err;
  const fs::path p = path("r.json");
  ASSERT_EQ(cmd_generate({pi / 3, 0.0, 100000, Seed{1}, p}, out, err), ExitStatus::ok);
  const RunRecord r = read_run_record(p);
  const RunSummary s = summarize_run(r.a, r.b);
  EXPECT_NEAR(to_double(s.correlation), -0.5, 0.013);
  EXPECT_NE(out.str().find("correlation: " + format_real(to_double(s.correlation)) + " (" +
                           format_ratio(s.correlation) + ")"),
            std::string::npos)
      << out.str();
  EXPECT_EQ(s, summarize_run(sample_pair_run({pi / 3, 0.0, 100000, Seed{1}}).a_list,
                             sample_pair_run({pi / 3, 0.0, 100000, Seed{1}}).b_list));
}

TEST_F(CliTest, generate_errors) {
  EXPECT_EQ(cmd_generate({0, 0, 0, Seed{}, path("x.json")}, out_, err_), ExitStatus::invalid_input);
  EXPECT_EQ(cmd_generate({0, 0, 3, Seed{}, path("missing/dir/x.json")}, out_, err_),
            ExitStatus::io_error);
}

TEST_F(CliTest, match3_zero_pi_equality_case) {
  const fs::path ab = generate("ab.json", 0.0, 0.0, 10000, 1);
  const fs::path apb = generate("apb.json", pi, 0.0, 10000, 2);
  const fs::path out = path("m3.json");
  ASSERT_EQ(cmd_match3({ab, apb, out, {}}, out_, err_), ExitStatus::ok) << err_.str();
  const auto j = load_json(out);
  EXPECT_EQ(j["kind"], "matched-triple");
  EXPECT_LE(j["bell3"]["lhs"]["value"].get<double>(), 1.0);
  EXPECT_TRUE(j["bell3"]["holds"].get<bool>());
  EXPECT_DOUBLE_EQ(j["theory"]["lhs_matched"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["theory"]["lhs_unmatched_stationary"].get<double>(), 2.0);
  const auto& rep = j["report"];
  EXPECT_EQ(rep["matched"].get<std::size_t>() + rep["dropped_reference"].get<std::size_t>(),
            rep["requested"].get<std::size_t>());
  EXPECT_EQ(j["lists"]["a"].size(), rep["matched"].get<std::size_t>());
}

TEST_F(CliTest, match3_trims_shorter_candidate) {
  const fs::path ab = generate("ab.json", 0.1, 0.0, 1000, 1);
  const fs::path apb = generate("apb.json", 1.0, 0.0, 600, 2);
  ASSERT_EQ(cmd_match3({ab, apb, path("m.json"), {}}, out_, err_), ExitStatus::ok);
  EXPECT_GT(load_json(path("m.json"))["report"]["dropped_reference"].get<int>(), 0);
}

TEST_F(CliTest, match3_identical_files) {
  const fs::path ab = generate("ab.json", 0.4, 0.4, 500, 3);
  ASSERT_EQ(cmd_match3({ab, ab, path("m.json"), {}}, out_, err_), ExitStatus::ok);
  EXPECT_EQ(load_json(path("m.json"))["correlations"]["aap"]["exact"], "1");
}

TEST_F(CliTest, match3_error_codes) {
  const fs::path ab = generate("ab.json", 0.0, 0.0, 100, 1);
  const fs::path other_b = generate("apb.json", 0.0, 0.3, 100, 2);
  EXPECT_EQ(cmd_match3({ab, other_b, path("m.json"), {}}, out_, err_), ExitStatus::invalid_input);
  write_text(path("bad.json"), "{\"format_version\":1}");
  EXPECT_EQ(cmd_match3({ab, path("bad.json"), path("m.json"), {}}, out_, err_),
            ExitStatus::io_error);
  EXPECT_EQ(cmd_match3({ab, path("nope.json"), path("m.json"), {}}, out_, err_),
            ExitStatus::io_error);
}

TEST_F(CliTest, match4_chsh_and_equal_angles) {
  const fs::path ab = generate("ab.json", 0.0, pi / 4, 10000, 1);
  const fs::path apb = generate("apb.json", pi / 2, pi / 4, 10000, 2);
  const fs::path abp = generate("abp.json", 0.0, -pi / 4, 10000, 3);
  ASSERT_EQ(cmd_match4({ab, apb, abp, path("m4.json"), {}}, out_, err_), ExitStatus::ok);
  const auto j = load_json(path("m4.json"));
  EXPECT_NEAR(j["correlations"]["apbp"]["value"].get<double>(), -std::sqrt(2.0) / 4, 0.06);
  EXPECT_LE(j["chsh4"]["lhs"]["value"].get<double>(), 2.0);

  const fs::path e1 = generate("e1.json", 0.5, 0.5, 2000, 4);
  const fs::path e2 = generate("e2.json", 0.5, 0.5, 2000, 5);
  const fs::path e3 = generate("e3.json", 0.5, 0.5, 2000, 6);
  ASSERT_EQ(cmd_match4({e1, e2, e3, path("e.json"), {}}, out_, err_), ExitStatus::ok);
  EXPECT_EQ(load_json(path("e.json"))["correlations"]["apbp"]["exact"], "-1");
}

TEST_F(CliTest, corrupted_correlation_triggers_defect_exit) {
  const fs::path ab = generate("ab.json", 0.0, 0.0, 2000, 1);
  const fs::path apb = generate("apb.json", pi, 0.0, 2000, 2);
  const fs::path abp = generate("abp.json", 0.0, 0.0, 2000, 3);
  EXPECT_EQ(cmd_match3({ab, apb, path("m.json"), {Ratio(1, 2)}}, out_, err_),
            ExitStatus::identity_violated);
  EXPECT_EQ(cmd_match4({ab, ab, abp, path("m4.json"), {Ratio(-3)}}, out_, err_),
            ExitStatus::identity_violated);
  write_list("a", "1 1");
  write_list("b", "1 -1");
  write_list("bp", "-1 -1");
  EXPECT_EQ(cmd_check({{path("a"), path("b"), path("bp")}, {Ratio(1)}}, out_, err_),
            ExitStatus::identity_violated);
}

TEST_F(CliTest, check_hand_example_and_four_identical) {
  write_list("a", "1 1");
  write_list("b", "1 -1");
  write_list("bp", "-1 -1");
  std::ostringstream out;
  ASSERT_EQ(cmd_check({{path("a"), path("b"), path("bp")}, {}}, out, err_), ExitStatus::ok);
  EXPECT_NE(out.str().find("lhs: 1 (1)"), std::string::npos);
  EXPECT_NE(out.str().find("rhs: 1 (1)"), std::string::npos);
  EXPECT_NE(out.str().find("holds: true"), std::string::npos);

  write_list("same", "1 -1 -1 1 1");
  std::ostringstream out4;
  ASSERT_EQ(cmd_check({{path("same"), path("same"), path("same"), path("same")}, {}}, out4, err_),
            ExitStatus::ok);
  EXPECT_NE(out4.str().find("lhs: 2 (2)"), std::string::npos);
}

TEST_F(CliTest, check_random_files_hold) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 10; ++t) {
    for (const char* name : {"x", "y", "z"}) {
      const DataList l = bellmatch::testing::random_list(gen, 257);
      std::string text;
      for (int v : l.to_ints()) text += std::to_string(v) + "\n";
      write_list(name, text);
    }
    EXPECT_EQ(cmd_check({{path("x"), path("y"), path("z")}, {}}, out_, err_), ExitStatus::ok);
  }
}

TEST_F(CliTest, check_errors) {
  write_list("a", "1 1");
  write_list("b", "1 -1 1");
  write_list("c", "1 0");
  EXPECT_EQ(cmd_check({{path("a"), path("b"), path("a")}, {}}, out_, err_),
            ExitStatus::invalid_input);
  EXPECT_EQ(cmd_check({{path("a"), path("c"), path("a")}, {}}, out_, err_),
            ExitStatus::invalid_input);
  EXPECT_EQ(cmd_check({{path("a"), path("a")}, {}}, out_, err_), ExitStatus::invalid_input);
  EXPECT_EQ(cmd_check({{path("a"), path("a"), path("zz")}, {}}, out_, err_),
            ExitStatus::io_error);
}

TEST_F(CliTest, scan_fig2_default_grid) {
  ScanOptions opts;
  opts.kind = ScanKind::fig2;
  opts.workers = 2;
  opts.out = path("fig2.csv");
  std::ostringstream out;
  ASSERT_EQ(cmd_scan(opts, out, err_), ExitStatus::ok);
  std::istringstream csv(read_text(opts.out));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "alpha,alpha_prime,beta,n,empirical,theoretical,abs_error");
  std::getline(csv, line);
  EXPECT_EQ(line, "0,0,0,10000,1,1,0");
  double sq = 0;
  std::size_t rows = 1;
  while (std::getline(csv, line)) {
    ++rows;
    const double err = std::stod(line.substr(line.rfind(',') + 1));
    sq += err * err;
  }
  EXPECT_EQ(rows, 289U);
  EXPECT_LT(std::sqrt(sq / rows), 0.02);
  EXPECT_NE(out.str().find("rms_error:"), std::string::npos);
}

TEST_F(CliTest, scan_inequality_csvs) {
  ScanOptions opts;
  opts.kind = ScanKind::bell3;
  opts.mode = Mode::unmatched_stationary;
  opts.grid = default_inequality_grid(Inequality::bell3);
  opts.out = path("bell3.csv");
  ASSERT_EQ(cmd_scan(opts, out_, err_), ExitStatus::ok);
  const std::string bell = read_text(opts.out);
  EXPECT_EQ(bell.substr(0, bell.find('\n')), "theta_a,theta_ap,theta_b,mode,lhs,bound,violated");
  EXPECT_NE(bell.find("\n0,3.14159265,0,unmatched-stationary,2,1,true\n"), std::string::npos);

  opts.kind = ScanKind::chsh4;
  opts.mode = Mode::matched;
  opts.grid = default_inequality_grid(Inequality::chsh4);
  opts.out = path("chsh4.csv");
  ASSERT_EQ(cmd_scan(opts, out_, err_), ExitStatus::ok);
  const std::string chsh = read_text(opts.out);
  EXPECT_EQ(chsh.substr(0, chsh.find('\n')),
            "theta_a,theta_ap,theta_b,theta_bp,mode,lhs,bound,violated");
  EXPECT_EQ(chsh.find(",true\n"), std::string::npos);
  EXPECT_NE(chsh.find(",matched,"), std::string::npos);
}

TEST_F(CliTest, scan_invalid_grid) {
  ScanOptions opts;
  opts.kind = ScanKind::bell3;
  opts.grid.theta_a = AxisRange{1.0, 0.0, 4};
  opts.out = path("x.csv");
  EXPECT_EQ(cmd_scan(opts, out_, err_), ExitStatus::invalid_input);
  opts.kind = ScanKind::fig2;
  opts.fig2.alpha_prime = AxisRange{0.0, 1.0, 1};
  EXPECT_EQ(cmd_scan(opts, out_, err_), ExitStatus::invalid_input);
}

TEST_F(CliTest, scan_output_independent_of_workers) {
  ScanOptions opts;
  opts.kind = ScanKind::fig2;
  opts.fig2.alpha = {0.0, pi, 5};
  opts.fig2.alpha_prime = {0.0, pi, 5};
  opts.fig2.n_per_cell = 3000;
  opts.workers = 1;
  opts.out = path("w1.csv");
  ASSERT_EQ(cmd_scan(opts, out_, err_), ExitStatus::ok);
  opts.workers = 5;
  opts.out = path("w5.csv");
  ASSERT_EQ(cmd_scan(opts, out_, err_), ExitStatus::ok);
  EXPECT_EQ(read_text(path("w1.csv")), read_text(path("w5.csv")));
}

#ifdef BELLMATCH_BIN
TEST_F(CliTest, binary_end_to_end) {
  const std::string bin = BELLMATCH_BIN;
  auto run = [&](const std::string& args) {
    const std::string cmd = "\"" + bin + "\" " + args + " > \"" + path("log").string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  };
  const std::string ab = path("ab.json").string();
  const std::string apb = path("apb.json").string();
  EXPECT_EQ(run("generate --theta-a 0 --theta-b 0 --n 200 --seed 3 --out " + ab), 0);
  EXPECT_EQ(run("generate --theta-a 180 --theta-b 0 --degrees --n 200 --seed 4 --out " + apb), 0);
  EXPECT_DOUBLE_EQ(read_run_record(apb).theta_a, pi);
  EXPECT_EQ(run("match3 " + ab + " " + apb + " --out " + path("m.json").string()), 0);
  EXPECT_EQ(run("scan bell3 --mode unmatched --theta-a 0 --theta-ap 0:2pi:5 --out " +
                path("b.csv").string()),
            0);
  EXPECT_EQ(run("generate --theta-a 0 --n 5 --out " + ab), 2);
  EXPECT_EQ(run("scan fig2 --alpha 1:0:3 --out " + path("f.csv").string()), 2);
  EXPECT_EQ(run("bogus"), 2);
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("match3 " + ab + " " + path("none.json").string() + " --out x"), 3);
}
#endif

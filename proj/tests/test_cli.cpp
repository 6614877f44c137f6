#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "sawstrip/record_io.hpp"

using namespace sawstrip;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run sawstrip_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::path(SAWSTRIP_TEST_TMP) / "cli" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<double> last_row(const std::string& csv) {
  const Report r = Report::parse_csv(csv);
  std::vector<double> v;
  for (const auto& cell : r.rows.back()) v.push_back(std::strtod(cell.c_str(), nullptr));
  return v;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("enumerate honeycomb T=0") {
    const fs::path dir = fresh_dir("enumerate");
    const Run r = sawstrip_run({"enumerate", "--lattice", "honeycomb", "--width", "0", "--max-degree", "10",
                                "--output-dir", dir.string()});
    REQUIRE(r.code == 0);
    const GFRecord rec = read_record(dir / "honeycomb_T0_M10.json");
    for (int n = 0; n <= 10; ++n) {
      const double expect = (n >= 3 && n % 2 == 1) ? 2.0 : 0.0;
      CHECK(static_cast<double>(coefficient(rec.A, n)) == expect);
    }
  }

  TEST_CASE("enumerate writes to the directory named by the environment") {
    const fs::path dir = fresh_dir("env");
    ::setenv("SAWSTRIP_OUTPUT_DIR", dir.c_str(), 1);
    const Run r = sawstrip_run({"enumerate", "--lattice", "square", "--widths", "1-2", "-M", "20"});
    ::unsetenv("SAWSTRIP_OUTPUT_DIR");
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "square_T1_M20.json"));
    CHECK(fs::exists(dir / "square_T2_M20.json"));
  }

  TEST_CASE("enumerate refuses bad configurations") {
    const Run lm = sawstrip_run({"enumerate", "--half-length", "10", "--max-degree", "100"});
    CHECK(lm.code == cli::config_error);
    CHECK(lm.err.find("L") != std::string::npos);
    CHECK(sawstrip_run({"enumerate", "--lattice", "kagome"}).code == cli::config_error);
    const Run wide = sawstrip_run({"enumerate", "--lattice", "square", "--width", "12", "-M", "10"});
    CHECK(wide.code == cli::capacity_error);
    CHECK(wide.err.find("8") != std::string::npos);
  }

  TEST_CASE("analyze zc-lambda on the closed forms") {
    const Run r = sawstrip_run({"analyze", "zc-lambda", "--closed-form", "0,1,2"});
    REQUIRE(r.code == 0);
    const auto row = last_row(r.out);
    CHECK(row[1] == doctest::Approx(0.5411961001461970).epsilon(1e-12));
    CHECK(row[2] == doctest::Approx(0.3826834323650898).epsilon(1e-12));
  }

  TEST_CASE("analyze combo-scan crosses 1 at z_c for every width") {
    const Run r = sawstrip_run({"analyze", "combo-scan", "0.52", "0.56", "100", "--closed-form", "0,1,2"});
    REQUIRE(r.code == 0);
    const Report rep = Report::parse_csv(r.out);
    REQUIRE(rep.rows.size() == 100);
    for (std::size_t c = 1; c < rep.columns.size(); ++c) {
      bool crossed = false;
      for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        const double v0 = std::stod(rep.rows[i - 1][c]), v1 = std::stod(rep.rows[i][c]);
        if (v0 < 1.0 && v1 >= 1.0) {
          crossed = true;
          CHECK(std::stod(rep.rows[i - 1][0]) <= 0.5411961001);
          CHECK(std::stod(rep.rows[i][0]) >= 0.5411961001);
        }
      }
      CHECK(crossed);
    }
  }

  TEST_CASE("analyze extrapolate on the tabulated square estimates") {
    const std::string values =
        "0.3792132510996564,0.3791354275802486,0.3791014587212902,0.3790837649841775,0.3790736177161640,"
        "0.3790673896037665,0.3790633602596354,0.3790606406190476,0.3790587398862656,0.3790573721782793,"
        "0.3790563633515162,0.3790556032334455,0.379055019822686";
    const Run r = sawstrip_run({"analyze", "extrapolate", "--method", "bs", "--w", "1", "--values", values,
                                "--first-T", "2"});
    REQUIRE(r.code == 0);
    const Report rep = Report::parse_csv(r.out);
    CHECK(std::abs(std::stod(rep.rows.back()[3]) - 0.3790522775) < 5e-8);
    CHECK(sawstrip_run({"analyze", "extrapolate", "--method", "richardson", "--values", values}).code ==
          cli::config_error);
    CHECK(sawstrip_run({"analyze", "extrapolate", "--values", "0.5,0.4"}).code == cli::config_error);
  }

  TEST_CASE("rerun reproduces a report from its embedded configuration") {
    const fs::path dir = fresh_dir("rerun");
    const std::string report = (dir / "zc.csv").string();
    REQUIRE(sawstrip_run({"analyze", "zc-intersect", "--closed-form", "0,1,2", "-o", report}).code == 0);
    CHECK(sawstrip_run({"rerun", report, "--check"}).code == 0);
    std::string text = read_text(report);
    text.back() = text.back() == '\n' ? ' ' : '\n';
    write_text(report, text);
    CHECK(sawstrip_run({"rerun", report, "--check"}).code == cli::check_failed);
  }

  TEST_CASE("analyze refuses inconsistent inputs") {
    const fs::path dir = fresh_dir("mixed");
    REQUIRE(sawstrip_run({"enumerate", "--lattice", "square", "--widths", "1,2,4", "-M", "30", "--output-dir",
                          dir.string()})
                .code == 0);
    REQUIRE(sawstrip_run({"enumerate", "--lattice", "triangular", "--width", "2", "-M", "30", "--output-dir",
                          dir.string()})
                .code == 0);
    const std::string sq1 = (dir / "square_T1_M30.json").string();
    const std::string sq2 = (dir / "square_T2_M30.json").string();
    const std::string sq4 = (dir / "square_T4_M30.json").string();
    const std::string tr2 = (dir / "triangular_T2_M30.json").string();
    const Run mixed = sawstrip_run({"analyze", "zc-intersect", sq1, tr2});
    CHECK(mixed.code == cli::config_error);
    CHECK(!mixed.err.empty());
    CHECK(sawstrip_run({"analyze", "zc-intersect", sq2, sq4}).code == cli::config_error);
    CHECK(sawstrip_run({"analyze", "zc-intersect", sq1, sq2}).code == 0);
  }

  TEST_CASE("oracle agrees on small square strips") {
    const Run r = sawstrip_run({"oracle", "--lattice", "square", "--widths", "1-2", "-M", "10"});
    CHECK(r.code == 0);
    CHECK(r.err.find("MISMATCH") == std::string::npos);
  }
}

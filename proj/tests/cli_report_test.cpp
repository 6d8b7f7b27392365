#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "planecover/cli_report.hpp"
#include "planecover/error.hpp"
#include "test_config.hpp"

using namespace planecover;

namespace {

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::vector<const char*> argv = {"verify"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

}  // namespace

TEST_CASE("default configuration text round trips") {
  RunConfig defaults = RunConfig::defaults();
  CHECK(parse_run_config(default_config_text()) == defaults);
  CHECK(parse_run_config("") == defaults);
  CHECK(parse_run_config("# only a comment\n\n") == defaults);

  BuildingData bd = make_building_data(defaults);
  BuildingData ref = testcfg::default_building_data();
  REQUIRE(bd.divisors.size() == ref.divisors.size());
  for (std::size_t i = 0; i < bd.divisors.size(); ++i) {
    CHECK(bd.divisors[i].sigma.bits == ref.divisors[i].sigma.bits);
    REQUIRE(bd.divisors[i].components.size() ==
            ref.divisors[i].components.size());
    for (std::size_t k = 0; k < bd.divisors[i].components.size(); ++k) {
      CHECK(bd.divisors[i].components[k].label() ==
            ref.divisors[i].components[k].label());
      CHECK(bd.divisors[i].components[k].form().to_string() ==
            ref.divisors[i].components[k].form().to_string());
    }
  }
}

TEST_CASE("configuration parsing applies overrides and rejects bad keys") {
  RunConfig cfg = parse_run_config(
      "t = 3        # pencil parameter\n"
      "sigma.D1 = y\n"
      "line.T2 = [1, 1/2, 1]\n"
      "conic.H1 = [2, 0, 0, 2, 0, -2]\n");
  CHECK(cfg.t == Rat(3));
  CHECK(cfg.sigma[0].bits == 2u);
  CHECK(cfg.sigma[1].bits == 4u);
  CHECK(cfg.line_coeffs[1][1] == Rat(1, 2));
  CHECK(cfg.conic_coeffs[5] == Rat(-2));

  CHECK(parse_run_config("t = -5/7").t == Rat(-5, 7));
  CHECK(parse_run_config("sigma.D4 = Id").sigma[3].bits == 0u);

  auto kind_of = [](const std::string& text) {
    return error_kind([&] { parse_run_config(text); });
  };
  CHECK(kind_of("frob = 1") == ErrorKind::Config);
  CHECK(kind_of("t = 1\nt = 2") == ErrorKind::Config);
  CHECK(kind_of("just words") == ErrorKind::Config);
  CHECK(kind_of("t = 1.5") == ErrorKind::Config);
  CHECK(kind_of("t =") == ErrorKind::Config);
  CHECK(kind_of("line.T2 = [1, 0]") == ErrorKind::Config);
  CHECK(kind_of("line.T9 = [1, 0, 0]") == ErrorKind::Config);
  CHECK(kind_of("conic.H2 = [1, 0, 0, 1, 0, -1]") == ErrorKind::Config);
  CHECK(kind_of("sigma.D1 = w") == ErrorKind::Config);
  CHECK(kind_of("line.T1 = 1, 0, -1") == ErrorKind::Config);

  std::string msg =
      error_message([&] { parse_run_config("t = 1\nbogus = 2\n"); });
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(msg.find("bogus") != std::string::npos);
}

TEST_CASE("building data construction validates the geometry") {
  auto message_for = [](const std::string& text) {
    return error_message([&] { make_building_data(parse_run_config(text)); });
  };
  auto kind_for = [](const std::string& text) {
    return error_kind([&] { make_building_data(parse_run_config(text)); });
  };

  std::string msg = message_for("line.T2 = [2, 0, -2]");
  CHECK(msg.find("lines not distinct") != std::string::npos);
  CHECK(kind_for("line.T2 = [2, 0, -2]") == ErrorKind::Config);

  CHECK(kind_for("line.T3 = [0, 0, 0]") == ErrorKind::Config);
  CHECK(kind_for("conic.H1 = [1, 0, 0, -1, 0, 0]") == ErrorKind::Config);

  msg = message_for("t = 2");
  CHECK(msg.find("degenerate") != std::string::npos);
  CHECK(kind_for("t = 2") == ErrorKind::Config);
  CHECK(kind_for("t = -2") == ErrorKind::Config);

  // Smooth conic that misses tangency with the lines: still a
  // configuration diagnostic, not a crash deeper in the pipeline.
  CHECK(kind_for("conic.H1 = [1, 0, 0, 1, 0, -4]") == ErrorKind::Config);
}

TEST_CASE("report JSON is exact and stable") {
  TowerReport rep = run_pipeline(make_building_data(RunConfig::defaults()));
  std::string text = render_report(rep);
  CHECK(render_report(rep) == text);

  auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == "planecover.report/1");
  CHECK(j["all_passed"] == true);
  CHECK(j["headline"]["p_g"] == 3);
  CHECK(j["headline"]["q"] == 2);
  CHECK(j["headline"]["k_squared"] == 16);
  CHECK(j["headline"]["canonical_degree"] == 16);
  REQUIRE(j["checks"].size() == 14);
  CHECK(j["checks"][0]["name"] == "config_build");
  CHECK(j["checks"][13]["name"] == "beauville");
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
  REQUIRE(j["levels"].size() == 5);
  CHECK(j["levels"][0]["name"] == "X");
  CHECK(j["levels"][0]["canonical_degree"].is_null());
  CHECK(j["levels"][4]["canonical_degree"] == 16);
  REQUIRE(j["certificates"].size() == 3);
  CHECK(j["certificates"][2]["l_self"] == "-12");
  CHECK(j["certificates"][2]["l_k"] == "0");
  CHECK(j["counts"]["total_preimages"] == 24);
  CHECK(j["matches"].size() == 5);
  CHECK(j["work"]["tower_adjoins"].get<long>() > 0);
  CHECK(j["work"]["matrix_eliminations"].get<long>() > 0);
  for (const auto& c : j["certificates"]) {
    CHECK(c["l_self"].is_string());
    CHECK(c["l_k"].is_string());
  }
}

TEST_CASE("matrix dump carries provenance and the kernel column") {
  std::string text = render_matrix_dump(make_building_data(RunConfig::defaults()));
  CHECK(render_matrix_dump(make_building_data(RunConfig::defaults())) == text);

  auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == "planecover.matrix/1");
  CHECK(j["rows"] == 24);
  CHECK(j["cols"] == 12);
  REQUIRE(j["columns"].size() == 12);
  REQUIRE(j["entries"].size() == 24);
  CHECK(j["entries"][0]["node"] == 1);
  CHECK(j["entries"][23]["node"] == 24);
  for (const auto& row : j["entries"]) {
    CHECK(row["values"].size() == 12);
    CHECK(row["point"].get<std::string>().size() > 0);
    CHECK(row["sheet"].get<std::string>().size() > 0);
  }

  // The branch-line radical vanishes at every node: its column is the
  // kernel the uniqueness argument rests on.
  std::string zero = FieldElement(Rat(0)).to_string();
  int u7_col = -1;
  for (std::size_t k = 0; k < j["columns"].size(); ++k)
    if (j["columns"][k] == "u7") u7_col = static_cast<int>(k);
  REQUIRE(u7_col >= 0);
  for (const auto& row : j["entries"])
    CHECK(row["values"][u7_col] == zero);
}

TEST_CASE("command line driver maps outcomes to exit codes") {
  std::string out, err;

  SUBCASE("default run passes") {
    CHECK(cli({"--default"}, &out, &err) == 0);
    CHECK(out.find("result: PASS (14/14 checks)") != std::string::npos);
    CHECK(out.find("p_g = 3") != std::string::npos);
    CHECK(err.empty());
    CHECK(out.find("levels:") == std::string::npos);
  }

  SUBCASE("verbose adds levels and certificates") {
    CHECK(cli({"--default", "--verbose"}, &out, &err) == 0);
    CHECK(out.find("levels:") != std::string::npos);
    CHECK(out.find("certificates:") != std::string::npos);
    CHECK(out.find("work:") != std::string::npos);
  }

  SUBCASE("report and matrix files are written byte for byte") {
    std::string report = temp_path("planecover_report_test.json");
    std::string matrix = temp_path("planecover_matrix_test.json");
    CHECK(cli({"--default", "--report", report.c_str(), "--dump-matrix",
               matrix.c_str()},
              &out, &err) == 0);
    TowerReport rep = run_pipeline(make_building_data(RunConfig::defaults()));
    CHECK(slurp(report) == render_report(rep));
    auto jm = nlohmann::json::parse(slurp(matrix));
    CHECK(jm["rows"] == 24);
    std::filesystem::remove(report);
    std::filesystem::remove(matrix);
  }

  SUBCASE("config file with coincident lines exits 2") {
    std::string path = temp_path("planecover_bad_lines.cfg");
    std::ofstream(path) << "line.T2 = [2, 0, -2]\n";
    CHECK(cli({"--config", path.c_str()}, &out, &err) == 2);
    CHECK(err.find("lines not distinct") != std::string::npos);
    std::filesystem::remove(path);
  }

  SUBCASE("config file overriding t reruns the pipeline") {
    std::string path = temp_path("planecover_t3.cfg");
    std::ofstream(path) << "# alternate pencil member\nt = 3\n";
    CHECK(cli({"--config", path.c_str()}, &out, &err) == 0);
    CHECK(out.find("result: PASS (14/14 checks)") != std::string::npos);
    std::filesystem::remove(path);
  }

  SUBCASE("bad group labels fail a check, not the parse") {
    std::string path = temp_path("planecover_bad_sigma.cfg");
    std::ofstream(path) << "sigma.D1 = x\n";
    CHECK(cli({"--config", path.c_str()}, &out, &err) == 1);
    CHECK(err.find("check failed at stage ") != std::string::npos);
    CHECK(out.find("FAIL") != std::string::npos);
    std::filesystem::remove(path);
  }

  SUBCASE("usage errors") {
    CHECK(cli({}, &out, &err) == 2);
    CHECK(err.find("--default") != std::string::npos);
    CHECK(cli({"--default", "--config", "x.cfg"}, &out, &err) == 2);
    CHECK(cli({"--config", temp_path("planecover_missing.cfg").c_str()}, &out,
              &err) == 2);
    CHECK(cli({"--nonsense"}, &out, &err) == 2);
    CHECK(cli({"--help"}, &out, &err) == 0);
  }

  SUBCASE("parse errors in a config file exit 2 with the line number") {
    std::string path = temp_path("planecover_bad_key.cfg");
    std::ofstream(path) << "t = 1\nmystery = 7\n";
    CHECK(cli({"--config", path.c_str()}, &out, &err) == 2);
    CHECK(err.find("line 2") != std::string::npos);
    CHECK(err.find("mystery") != std::string::npos);
    std::filesystem::remove(path);
  }
}

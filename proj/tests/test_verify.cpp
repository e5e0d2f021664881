#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "qcat/verify.hpp"

namespace fs = std::filesystem;

namespace {

// Copy of the shipped data file with lines rewritten by `edit` (empty result drops the line).
fs::path data_copy(const std::string& tag, const std::function<std::string(const std::string&)>& edit) {
  const auto path = fs::temp_directory_path() / ("qcat_test_" + tag + ".txt");
  std::ifstream in(QCAT_DEFAULT_DATA_FILE);
  std::ofstream out(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto edited = edit(line);
    if (!edited.empty()) out << edited << '\n';
  }
  return path;
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("report JSON round trip") {
  qcat::VerificationReport r;
  r.suite = "unit";
  r.cases = {{"a", true, "fine"}, {"b/\"quoted\"", false, "x^1 q^2: 3 vs -4"}};
  r.elapsed_seconds = 0.25;
  const nlohmann::json j = r;
  CHECK(j.at("passed") == false);
  CHECK(j.at("version") == qcat::kVersion);
  const auto back = nlohmann::json::parse(j.dump()).get<qcat::VerificationReport>();
  CHECK(back == r);
  CHECK(r.failures() == 1);
  r.cases[1].pass = true;
  CHECK(r.passed());
}

TEST_CASE("named series") {
  const auto g = qcat::evaluate_named_series("G_3", 12);
  CHECK(g.series == qcat::g_series(3, 12, g.q_ceiling));
  const auto x = qcat::evaluate_named_series("X_{3,1}G_3", 4);
  CHECK(x.series.order() == 4);
  const auto s = qcat::evaluate_named_series("[q^1]G_4", 16);
  CHECK(s.series[4].known_terms() == qcat::LaurentPoly(-1));
  CHECK(s.series[8].known_terms().is_zero());
  CHECK_THROWS(qcat::evaluate_named_series("Z_3", 4));
  CHECK_THROWS(qcat::evaluate_named_series("X_{3,3}G_3", 4));
}

TEST_CASE("individual checks") {
  CHECK(qcat::check_product_formula(4, 12, -100, 100).pass);
  CHECK(qcat::check_cubic_identity(10).pass);
  CHECK(qcat::check_positivity(4, 1, 12).pass);
  CHECK(qcat::check_zero_slice(5, 12).pass);
  CHECK(qcat::check_slice_nonnegative(4, 4, 16).pass);
  CHECK(qcat::check_parity_support(6, 16).pass);
  const auto p50 = qcat::check_p50_numerator(30);
  CHECK(p50.pass);
  CHECK(p50.detail.find("64 terms") != std::string::npos);
}

TEST_CASE("a perturbed golden fails with a located mismatch") {
  const auto good = qcat::parse_closed_form_line("X_{3,1}G_3 | q^2 | [1 - x] [1 - q^6*x]");
  CHECK(qcat::check_golden(good, 30, std::nullopt).pass);

  const auto bad = qcat::parse_closed_form_line("X_{3,1}G_3 | q^2 | [1 - x] [1 - q^8*x]");
  const auto r = qcat::check_golden(bad, 30, std::nullopt);
  CHECK_FALSE(r.pass);
  CHECK(r.id == "golden/X_{3,1}G_3");
  CHECK(r.detail.find("x^1 q^8: 1 vs 0") != std::string::npos);

  const auto path = data_copy("perturbed", [](const std::string& line) {
    return starts_with(line, "X_{3,1}G_3") ? std::string("X_{3,1}G_3 | q^2 | [1 - x] [1 - q^7*x]") : line;
  });
  qcat::SuiteOptions options;
  options.x_order = 10;
  options.data_file = path;
  const auto report = qcat::verify_suite(options);
  const auto it = std::find_if(report.cases.begin(), report.cases.end(),
                               [](const auto& c) { return c.id == "golden/X_{3,1}G_3"; });
  REQUIRE(it != report.cases.end());
  CHECK_FALSE(it->pass);
  CHECK(it->detail.find("x^1 q^8: 1 vs 0") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("suite on a small window without the known-bad goldens") {
  const auto path = data_copy("small", [](const std::string& line) {
    return starts_with(line, "X_{5,4}G_5") || starts_with(line, "[q^1]G_4") ? std::string() : line;
  });
  qcat::SuiteOptions options;
  options.x_order = 5;
  options.data_file = path;
  const auto report = qcat::verify_suite(options);
  for (const auto& c : report.cases) {
    INFO(c.id << ": " << c.detail);
    CHECK(c.pass);
  }
  CHECK(report.passed());
  fs::remove(path);
}

TEST_CASE("suite output is independent of the worker count") {
  qcat::SuiteOptions options;
  options.x_order = 8;
  options.jobs = 1;
  const auto one = qcat::verify_suite(options);
  options.jobs = 3;
  const auto three = qcat::verify_suite(options);
  CHECK(one.cases == three.cases);
}

TEST_CASE("missing and malformed data files") {
  qcat::SuiteOptions options;
  options.data_file = "/nonexistent/closed_forms.txt";
  CHECK_THROWS_AS(qcat::verify_suite(options), qcat::ConfigError);

  const auto path = fs::temp_directory_path() / "qcat_test_malformed.txt";
  std::ofstream(path) << "F_3 | q^2 [1 - x\n";
  options.data_file = path;
  CHECK_THROWS_AS(qcat::verify_suite(options), qcat::ParseError);
  fs::remove(path);
}

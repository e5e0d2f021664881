// Copyright 2026 The qcatalan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qcat: sweeps, verification suite, figure tables and polynomial inspection.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 configuration error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qcat/combinatorics.hpp"
#include "qcat/qseries.hpp"
#include "qcat/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kConfig = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 1;
  int hi = 1;
};

Range parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  Range r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      std::size_t used = 0;
      r.lo = std::stoi(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(text);
      r.hi = std::stoi(text.substr(dots + 2), &used);
      if (used != text.size() - dots - 2) throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected A..B, got \"" + text + "\"");
  }
  if (r.lo < 1 || r.lo > r.hi) throw UsageError(std::string(flag) + ": empty or non-positive range " + text);
  return r;
}

// Writes to --out when given, else stdout.
class Output {
 public:
  Output(const std::string& path, bool append) {
    if (path.empty()) return;
    file_.open(path, append ? std::ios::app : std::ios::trunc);
    if (!file_) throw qcat::ConfigError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_row(const qcat::UnimodalityReport& r, int gcd) {
  std::ostringstream os;
  os << *r.m << ',' << r.n << ',' << gcd << ',' << r.degree << ',' << (r.parity_unimodal ? "true" : "false")
     << ',';
  if (r.first_violation) os << *r.first_violation;
  return os.str();
}

// (m, n) -> parity verdict for rows already in a CSV sweep file.
std::map<std::pair<int, int>, bool> read_existing_rows(const std::string& path) {
  std::map<std::pair<int, int>, bool> rows;
  std::ifstream in(path);
  if (!in) return rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.starts_with("m,")) continue;
    std::istringstream fields(line);
    std::string m, n, gcd, degree, parity;
    if (!std::getline(fields, m, ',') || !std::getline(fields, n, ',') || !std::getline(fields, gcd, ',') ||
        !std::getline(fields, degree, ',') || !std::getline(fields, parity, ',')) {
      throw qcat::ConfigError("malformed row in " + path + ": " + line);
    }
    rows[{std::stoi(m), std::stoi(n)}] = parity == "true";
  }
  return rows;
}

struct SweepArgs {
  std::string m = "1..20";
  std::string n = "1..20";
  unsigned jobs = 0;
  std::string format = "text";
  std::string out;
  bool resume = false;
};

int run_sweep(const SweepArgs& a) {
  const Range mr = parse_range(a.m, "--m");
  const Range nr = parse_range(a.n, "--n");
  if (a.resume && (a.format != "csv" || a.out.empty())) {
    throw UsageError("--resume needs --format csv and --out");
  }
  const auto start = std::chrono::steady_clock::now();

  std::map<std::pair<int, int>, bool> existing;
  if (a.resume) existing = read_existing_rows(a.out);
  std::vector<std::pair<int, int>> pairs;
  for (int m = mr.lo; m <= mr.hi; ++m) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      if (!existing.contains({m, n})) pairs.emplace_back(m, n);
    }
  }

  const bool append = a.resume && !existing.empty();
  Output out(a.out, append);
  auto& os = out.stream();
  if (a.format == "csv" && !append) os << "m,n,gcd,degree,parity_unimodal,first_violation\n";

  std::size_t total = 0;
  std::size_t failures = 0;
  for (const auto& [mn, ok] : existing) {
    if (mn.first < mr.lo || mn.first > mr.hi || mn.second < nr.lo || mn.second > nr.hi) continue;
    ++total;
    if (!ok) ++failures;
  }

  qcat::VerificationReport report;
  report.suite = "sweep";
  qcat::sweep_pairs(pairs, a.jobs, [&](std::size_t i, const qcat::UnimodalityReport& r) {
    const int gcd = std::gcd(pairs[i].first, pairs[i].second);
    ++total;
    if (!r.parity_unimodal) ++failures;
    if (a.format == "csv") {
      os << csv_row(r, gcd) << '\n' << std::flush;
    } else if (a.format == "text") {
      os << "m=" << *r.m << " n=" << r.n << " gcd=" << gcd << " degree=" << r.degree
         << " parity-unimodal: " << yes_no(r.parity_unimodal);
      if (r.first_violation) os << " first-violation: q^" << *r.first_violation;
      os << '\n';
    } else {
      std::string detail = "gcd " + std::to_string(gcd) + ", degree " + std::to_string(r.degree);
      if (r.first_violation) detail += ", first violation at q^" + std::to_string(*r.first_violation);
      report.cases.push_back({"m=" + std::to_string(*r.m) + ",n=" + std::to_string(r.n), r.parity_unimodal,
                              detail});
    }
  });

  if (a.format == "text") {
    os << (total - failures) << '/' << total << " pairs parity-unimodal\n";
  } else if (a.format == "json") {
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    os << nlohmann::json(report).dump(2) << '\n';
  }
  if (!a.out.empty()) std::cerr << (total - failures) << '/' << total << " pairs parity-unimodal\n";
  return failures == 0 ? kOk : kFailed;
}

struct VerifyArgs {
  int x_order = 30;
  std::optional<long long> q_ceiling;
  unsigned jobs = 0;
  std::string format = "text";
  std::string out;
  std::string data = QCAT_DEFAULT_DATA_FILE;
};

int run_verify(const VerifyArgs& a) {
  if (a.format == "csv") throw UsageError("verify-paper supports --format text or json");
  if (a.x_order < 1) throw UsageError("--x-order must be at least 1");
  if (a.q_ceiling && *a.q_ceiling <= 0) throw UsageError("--q-ceiling must be positive");
  qcat::SuiteOptions options;
  options.x_order = a.x_order;
  options.q_ceiling = a.q_ceiling;
  options.jobs = a.jobs;
  options.data_file = a.data;
  const auto report = qcat::verify_suite(options);

  Output out(a.out, false);
  auto& os = out.stream();
  if (a.format == "json") {
    os << nlohmann::json(report).dump(2) << '\n';
  } else {
    for (const auto& c : report.cases) os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.detail << '\n';
    os << (report.cases.size() - report.failures()) << '/' << report.cases.size() << " cases pass\n";
  }
  return report.passed() ? kOk : kFailed;
}

int run_poly(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("poly: expected catalan N | rational M N | cbar M N | k N");
  const std::string& kind = args[0];
  std::vector<int> v;
  try {
    for (std::size_t i = 1; i < args.size(); ++i) v.push_back(std::stoi(args[i]));
  } catch (const std::exception&) {
    throw UsageError("poly: arguments must be integers");
  }
  const auto want = [&](std::size_t count) {
    if (v.size() != count) throw UsageError("poly " + kind + ": expected " + std::to_string(count) + " integer(s)");
  };
  qcat::LaurentPoly p;
  try {
    if (kind == "catalan") {
      want(1);
      p = qcat::q_catalan(v[0]);
    } else if (kind == "rational") {
      want(2);
      p = qcat::rational_q_catalan(v[0], v[1]);
    } else if (kind == "cbar") {
      want(2);
      p = qcat::cbar(v[0], v[1]).polynomial;
    } else if (kind == "k") {
      want(1);
      p = qcat::k_poly(v[0]);
    } else {
      throw UsageError("poly: unknown kind \"" + kind + "\"");
    }
  } catch (const qcat::NonCoprimePair& e) {
    throw UsageError(std::string(e.what()) + ": try `poly cbar " + args[1] + " " + args[2] + "`");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << p.to_string() << " ; parity-unimodal: " << yes_no(qcat::is_parity_unimodal(p).holds) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Catalan unimodality toolkit"};
  app.set_version_flag("--version", std::string(qcat::kVersion));
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"text", "json", "csv"};

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check parity unimodality of cbar(m, n) over a grid");
  sweep_cmd->add_option("--m", sweep.m, "m range A..B")->capture_default_str();
  sweep_cmd->add_option("--n", sweep.n, "n range A..B")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads (0: all cores)");
  sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember(formats))->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "output file");
  sweep_cmd->add_flag("--resume", sweep.resume, "skip pairs already in the --out CSV file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the closed-form and identity verification suite");
  verify_cmd->add_option("--x-order", verify.x_order)->capture_default_str();
  verify_cmd->add_option("--q-ceiling", verify.q_ceiling, "q ceiling for series expansions (default: automatic)");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads (0: all cores)");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember(formats))->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "output file");
  verify_cmd->add_option("--data", verify.data, "closed-form data file")->capture_default_str();

  int figures_n = 3;
  auto* figures_cmd = app.add_subcommand("figures", "Tableaux, ranks and statistics for all Dyck paths of size n");
  figures_cmd->add_option("n", figures_n, "size, 1..6")->capture_default_str();

  std::vector<std::string> poly_args;
  auto* poly_cmd = app.add_subcommand("poly", "Print catalan N | rational M N | cbar M N | k N");
  poly_cmd->add_option("args", poly_args)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sweep_cmd) return run_sweep(sweep);
    if (*verify_cmd) return run_verify(verify);
    if (*figures_cmd) {
      if (figures_n < 1 || figures_n > 6) throw UsageError("figures: n must be in 1..6");
      std::cout << qcat::render_figures(figures_n);
      return kOk;
    }
    if (*poly_cmd) return run_poly(poly_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const qcat::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const qcat::ParseError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  }
  return kUsage;
}

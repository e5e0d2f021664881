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

#include "qcat/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "qcat/parallel.hpp"
#include "qcat/qseries.hpp"

namespace qcat {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.pass; }));
}

void to_json(nlohmann::json& j, const CaseResult& c) {
  j = nlohmann::json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}};
}

void from_json(const nlohmann::json& j, CaseResult& c) {
  j.at("id").get_to(c.id);
  j.at("pass").get_to(c.pass);
  j.at("detail").get_to(c.detail);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"suite", r.suite},
                     {"cases", r.cases},
                     {"passed", r.passed()},
                     {"elapsed_seconds", r.elapsed_seconds},
                     {"version", r.version}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("suite").get_to(r.suite);
  j.at("cases").get_to(r.cases);
  j.at("elapsed_seconds").get_to(r.elapsed_seconds);
  j.at("version").get_to(r.version);
}

namespace {

int parse_int(std::string_view& s) {
  std::size_t used = 0;
  const int v = std::stoi(std::string(s), &used);
  s.remove_prefix(used);
  return v;
}

void expect_prefix(std::string_view& s, std::string_view prefix, std::string_view whole) {
  if (!s.starts_with(prefix)) throw ParseError("bad series name \"" + std::string(whole) + "\"");
  s.remove_prefix(prefix.size());
}

XSeries constant_series(const LaurentPoly& in_x, int x_order) {
  std::vector<QSeries> out;
  for (int k = 0; k <= x_order; ++k) out.push_back(QSeries::exact(LaurentPoly::monomial(in_x.coeff(k), 0)));
  return XSeries(std::move(out));
}

XSeries polynomial_series(const BivariatePoly& p, int x_order) {
  std::vector<std::vector<Term>> rows(static_cast<std::size_t>(x_order) + 1);
  for (const auto& t : p.terms()) {
    if (t.x < 0) throw std::invalid_argument("negative x-exponent");
    if (t.x <= x_order) rows[static_cast<std::size_t>(t.x)].push_back({t.q, t.coef});
  }
  std::vector<QSeries> out;
  for (auto& r : rows) out.push_back(QSeries::exact(LaurentPoly::from_terms(std::move(r))));
  return XSeries(std::move(out));
}

std::string mismatch_detail(const SeriesComparison& c) {
  return c.equal ? "equal" : "first mismatch at " + to_string(*c.first_mismatch);
}

std::string window_detail(int x_order, Exponent ceiling) {
  std::ostringstream os;
  os << "x^0..x^" << x_order;
  if (ceiling != kExact) os << ", q below " << ceiling;
  return os.str();
}

XSeries positivity_subject(int m, int r, int x_order) {
  const int d = std::gcd(m, r);
  const int inner = m * x_order + r;
  return x_section(m, r, d == 1 ? g_series(m, inner) : h_series(m, d, inner));
}

}  // namespace

NamedSeries evaluate_named_series(std::string_view name, int x_order, std::optional<Exponent> q_ceiling) {
  const std::string_view whole = name;
  std::string_view s = name;
  if (s.starts_with("X_{")) {
    s.remove_prefix(3);
    const int m = parse_int(s);
    expect_prefix(s, ",", whole);
    const int r = parse_int(s);
    expect_prefix(s, "}", whole);
    auto inner = evaluate_named_series(s, m * x_order + r, q_ceiling);
    return {x_section(m, r, inner.series), inner.q_ceiling};
  }
  if (s.starts_with("[q^")) {
    s.remove_prefix(3);
    const int i = parse_int(s);
    expect_prefix(s, "]", whole);
    auto inner = evaluate_named_series(s, x_order, q_ceiling);
    return {constant_series(q_slice(inner.series, i), x_order), inner.q_ceiling};
  }
  if (s.size() < 3 || s[1] != '_') throw ParseError("bad series name \"" + std::string(whole) + "\"");
  const char kind = s[0];
  s.remove_prefix(2);
  const int m = parse_int(s);
  const Exponent ceiling = q_ceiling.value_or(default_q_ceiling(m, x_order));
  if (kind == 'F' && s.empty()) return {f_product(m, x_order, ceiling), ceiling};
  if (kind == 'G' && s.empty()) return {g_series(m, x_order, ceiling), ceiling};
  if (kind == 'H') {
    expect_prefix(s, "^", whole);
    const int r = parse_int(s);
    if (s.empty()) return {h_series(m, std::gcd(m, r), x_order, ceiling), ceiling};
  }
  throw ParseError("bad series name \"" + std::string(whole) + "\"");
}

CaseResult check_product_formula(int m, int x_order, Exponent lo, Exponent hi) {
  const Exponent ceiling = std::max(default_q_ceiling(m, x_order), hi + 1);
  const auto direct = f_direct(m, x_order, ceiling);
  const auto product = f_product(m, x_order, ceiling);
  const auto cmp = series_equal(direct, product, x_order, lo, hi, 1);
  std::ostringstream os;
  os << "x^1..x^" << x_order << ", q^" << lo << "..q^" << hi << ": " << mismatch_detail(cmp);
  return {"product-formula/m=" + std::to_string(m), cmp.equal, os.str()};
}

CaseResult check_cubic_identity(int k_max) {
  for (int r = 1; r <= 2; ++r) {
    for (int k = 0; k <= k_max; ++k) {
      if (!cubic_catalan_identity(k, r)) {
        return {"cubic-identity", false, "fails at k=" + std::to_string(k) + ", r=" + std::to_string(r)};
      }
    }
  }
  return {"cubic-identity", true, "k=0.." + std::to_string(k_max) + ", r=1,2"};
}

CaseResult check_golden(const NamedClosedForm& golden, int x_order, std::optional<Exponent> q_ceiling) {
  const auto computed = evaluate_named_series(golden.name, x_order, q_ceiling);
  const auto expanded = expand_closed_form(golden.form, x_order, computed.q_ceiling);
  const auto cmp = series_equal(computed.series, expanded, x_order);
  const Exponent window = std::min(computed.series.ceiling(), expanded.ceiling());
  return {"golden/" + golden.name, cmp.equal, window_detail(x_order, window) + ": " + mismatch_detail(cmp)};
}

CaseResult check_decomposition(const std::string& target, const std::vector<NamedClosedForm>& parts, int x_order) {
  const auto computed = evaluate_named_series(target, x_order);
  auto sum = XSeries::zero(x_order);
  for (const auto& p : parts) sum = sum + expand_closed_form(p.form, x_order, computed.q_ceiling);
  const auto cmp = series_equal(computed.series, sum, x_order);
  return {"decomposition/" + target, cmp.equal,
          std::to_string(parts.size()) + " parts, " + window_detail(x_order, sum.ceiling()) + ": " +
              mismatch_detail(cmp)};
}

CaseResult check_positivity(int m, int r, int x_order) {
  const auto s = positivity_subject(m, r, x_order);
  const auto check = nonneg_check(s, x_order);
  std::string id = "positivity/m=" + std::to_string(m) + "/r=" + std::to_string(r);
  if (check.nonnegative) return {id, true, "nonnegative to x^" + std::to_string(x_order)};
  const auto& e = *check.first_negative;
  return {id, false,
          "negative coefficient " + e.value.get_str() + " at x^" + std::to_string(e.x_exp) + " q^" +
              std::to_string(e.q_exp)};
}

CaseResult check_p50_numerator(int x_order) {
  const std::string id = "positivity/P_{5,0}";
  // The numerator has x-degree 6; expand far enough past it to see the zeros.
  const int order = std::max(x_order, 12);
  const auto s = positivity_subject(5, 0, order);
  const auto den = parse_numerator("[1 - x^2] [1 - x^3] [1 - q^10*x] [1 - q^20*x]");
  const auto numerator = polynomial_series(den, order) * s;
  int degree = -1;
  std::size_t terms = 0;
  for (int k = 0; k <= order; ++k) {
    const auto& c = numerator[k].known_terms();
    if (c.is_zero()) continue;
    degree = k;
    if (*c.low_degree() < 2) return {id, false, "numerator not divisible by q^2"};
    for (const auto& t : c.terms()) {
      if (t.coef <= 0) return {id, false, "non-positive coefficient at x^" + std::to_string(k)};
      ++terms;
    }
  }
  if (degree > order - 4) return {id, false, "numerator does not terminate before x^" + std::to_string(order)};
  return {id, terms == 64,
          std::to_string(terms) + " terms, all positive, x-degree " + std::to_string(degree)};
}

CaseResult check_zero_slice(int m, int x_order) {
  const auto slice = q_slice(g_series(m, x_order), 0);
  return {"slice/q0/m=" + std::to_string(m), slice.is_zero(),
          slice.is_zero() ? "zero to x^" + std::to_string(x_order) : "nonzero: " + slice.to_string('x')};
}

CaseResult check_slice_negatives(int m, int x_order, const LaurentPoly& expected) {
  const auto slice = q_slice(g_series(m, x_order), 1);
  std::vector<Term> negatives;
  for (const auto& t : slice.terms()) {
    if (t.coef < 0) negatives.push_back(t);
  }
  const auto found = LaurentPoly::from_terms(std::move(negatives));
  return {"slice/q1-negatives/m=" + std::to_string(m), found == expected,
          "to x^" + std::to_string(x_order) + ": " + found.to_string('x')};
}

CaseResult check_slice_nonnegative(int m, Exponent i_max, int x_order) {
  const auto g = g_series(m, x_order);
  const std::string id = "slice/nonnegative/m=" + std::to_string(m);
  for (Exponent i = 2; i <= i_max; ++i) {
    const auto slice = q_slice(g, i);
    for (const auto& t : slice.terms()) {
      if (t.coef < 0) {
        return {id, false,
                "[q^" + std::to_string(i) + " x^" + std::to_string(t.exp) + "] = " + t.coef.get_str()};
      }
    }
  }
  return {id, true, "q^2..q^" + std::to_string(i_max) + ", to x^" + std::to_string(x_order)};
}

CaseResult check_parity_support(int m, int x_order) {
  const auto slice = q_slice(g_series(m, x_order), 1);
  const std::string id = "parity-support/m=" + std::to_string(m);
  for (const auto& t : slice.terms()) {
    if (m % 2 != 0 || t.exp % 2 != 0) {
      return {id, false, "[q x^" + std::to_string(t.exp) + "] = " + t.coef.get_str()};
    }
  }
  return {id, true, std::to_string(slice.size()) + " nonzero entries to x^" + std::to_string(x_order)};
}

VerificationReport verify_suite(const SuiteOptions& options) {
  if (options.x_order < 1) throw std::invalid_argument("x-order must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const auto data = load_closed_forms(options.data_file);
  const int n = options.x_order;

  std::vector<std::function<CaseResult()>> cases;
  for (int m = 1; m <= 8; ++m) cases.emplace_back([=] { return check_product_formula(m, n, -300, 300); });
  cases.emplace_back([] { return check_cubic_identity(30); });

  std::map<std::string, std::vector<NamedClosedForm>> groups;
  for (const auto& g : data) {
    const auto slash = g.name.find('/');
    if (slash != std::string::npos) {
      groups[g.name.substr(0, slash)].push_back(g);
      continue;
    }
    cases.emplace_back([&g, n, q = options.q_ceiling] { return check_golden(g, n, q); });
  }
  for (const auto& [target, parts] : groups) {
    cases.emplace_back([&target, &parts, n] { return check_decomposition(target, parts, n); });
  }

  for (int m = 1; m <= 5; ++m) {
    for (int r = 0; r < m; ++r) cases.emplace_back([=] { return check_positivity(m, r, n); });
  }
  cases.emplace_back([n] { return check_p50_numerator(n); });

  for (int m = 3; m <= 8; ++m) cases.emplace_back([=] { return check_zero_slice(m, n); });
  cases.emplace_back([] {
    const auto expected = -LaurentPoly::from_terms({{6, 1}, {10, 1}, {18, 2}, {22, 1}, {30, 2}, {34, 1}, {42, 2}, {54, 1}});
    return check_slice_negatives(6, 60, expected);
  });
  cases.emplace_back([] {
    return check_slice_negatives(10, 40, -LaurentPoly::from_terms({{6, 1}, {10, 1}}));
  });
  for (int m = 3; m <= 8; ++m) cases.emplace_back([=] { return check_slice_nonnegative(m, 10, n); });
  for (int m = 3; m <= 8; ++m) cases.emplace_back([=] { return check_parity_support(m, n); });

  VerificationReport report;
  report.suite = "verify-paper";
  report.cases.resize(cases.size());
  detail::ordered_parallel_for(
      cases.size(), options.jobs,
      [&](std::size_t i) {
        try {
          return cases[i]();
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          return CaseResult{"case-" + std::to_string(i), false, std::string("error: ") + e.what()};
        }
      },
      [&](std::size_t i, const CaseResult& r) { report.cases[i] = r; });
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qcat

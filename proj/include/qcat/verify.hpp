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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcat/closed_form_io.hpp"
#include "qcat/genfun.hpp"

namespace qcat {

inline constexpr const char* kVersion = QCAT_VERSION;

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;

  friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double elapsed_seconds = 0.0;
  std::string version = kVersion;

  bool passed() const;
  std::size_t failures() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

void to_json(nlohmann::json& j, const CaseResult& c);
void from_json(const nlohmann::json& j, CaseResult& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

/// A series named in the closed-form data file, evaluated from the
/// product formula. Names: F_m, G_m, H_m^r (prefactor degree gcd(m, r)),
/// X_{m,r}Y and [q^i]Y for a name Y.
struct NamedSeries {
  XSeries series;
  Exponent q_ceiling = 0;  ///< ceiling used for the underlying product expansion
};

NamedSeries evaluate_named_series(std::string_view name, int x_order, std::optional<Exponent> q_ceiling = {});

struct SuiteOptions {
  int x_order = 30;
  std::optional<Exponent> q_ceiling;
  std::filesystem::path data_file = QCAT_DEFAULT_DATA_FILE;
  unsigned jobs = 0;
};

// Individual checks. Each one returns a single case; verify_suite strings them together.
CaseResult check_product_formula(int m, int x_order, Exponent lo, Exponent hi);
CaseResult check_cubic_identity(int k_max);
CaseResult check_golden(const NamedClosedForm& golden, int x_order, std::optional<Exponent> q_ceiling);
/// The members of group "Y/..." sum to Y.
CaseResult check_decomposition(const std::string& target, const std::vector<NamedClosedForm>& parts, int x_order);
CaseResult check_positivity(int m, int r, int x_order);
/// X_{5,0}H_5^0 times (1-x^2)(1-x^3)(1-q^10 x)(1-q^20 x), divided by q^2:
/// a polynomial with 64 terms, all positive.
CaseResult check_p50_numerator(int x_order);
CaseResult check_zero_slice(int m, int x_order);
/// Negative terms of [q^1]G_m within x_order equal `expected` (a polynomial in x).
CaseResult check_slice_negatives(int m, int x_order, const LaurentPoly& expected);
CaseResult check_slice_nonnegative(int m, Exponent i, int x_order);
/// [q^1 x^n]G_m is nonzero only for m, n both even.
CaseResult check_parity_support(int m, int x_order);

VerificationReport verify_suite(const SuiteOptions& options);

}  // namespace qcat

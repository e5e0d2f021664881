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

// Text format for closed forms, one per line:
//
//   name | numerator | factor-list
//
// Monomials are written c*x^a*q^b; any of the three parts may be left out
// ("x", "-q^2", "3*q^-1", "2*x*q^6"). The numerator is either a plain sum
// or a product of bracketed sums, e.g. "[q^2][1 - q^2][1 - q^4]". The
// factor list is a sequence of bracketed two-term sums, each standing for
// one denominator factor (A - B); "[1 - x]^2" repeats a factor. Blank
// lines and lines starting with '#' are ignored.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/genfun.hpp"

namespace qcat {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or unreadable data file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedClosedForm {
  std::string name;
  ClosedForm form;
  int line = 0;
};

BivariatePoly parse_numerator(std::string_view text);
std::vector<BinomialFactor> parse_factor_list(std::string_view text);
ClosedForm parse_closed_form(std::string_view numerator, std::string_view factors);
NamedClosedForm parse_closed_form_line(std::string_view line, int line_number = 0);

std::vector<NamedClosedForm> read_closed_forms(std::istream& in);
std::vector<NamedClosedForm> load_closed_forms(const std::filesystem::path& path);

/// Canonical c*x^a*q^b rendering of |coef| (the sign is handled by the caller).
std::string format_monomial(const Monomial& m);
/// "numerator | factor-list" in canonical form; parses back to the same ClosedForm.
std::string format_closed_form(const ClosedForm& cf);

}  // namespace qcat

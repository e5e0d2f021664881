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

#include "qcat/closed_form_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace qcat {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Exponent signed_exponent() {
    const bool paren = accept('(');
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    const Exponent v = std::stoll(digits());
    if (paren) expect(')');
    return negative ? -v : v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Monomial parse_term(Cursor& c) {
  Monomial m;
  bool seen = false;
  if (c.at_digit()) {
    m.coef = Integer(c.digits());
    seen = true;
    c.accept('*');
  }
  for (;;) {
    const char v = c.peek();
    if (v != 'x' && v != 'q') break;
    c.accept(v);
    const Exponent e = c.accept('^') ? c.signed_exponent() : 1;
    (v == 'x' ? m.x : m.q) += e;
    seen = true;
    if (!c.accept('*')) break;
  }
  if (!seen) c.fail("expected a monomial");
  return m;
}

// Signed terms of a sum, stopping before ']' or end of input.
std::vector<Monomial> parse_sum(Cursor& c) {
  std::vector<Monomial> terms;
  bool negative = false;
  if (c.accept('-')) negative = true;
  else c.accept('+');
  for (;;) {
    Monomial m = parse_term(c);
    if (negative) m.coef = -m.coef;
    terms.push_back(std::move(m));
    if (c.accept('+')) negative = false;
    else if (c.accept('-')) negative = true;
    else break;
  }
  return terms;
}

struct Group {
  std::vector<Monomial> terms;
  int power = 1;
};

std::vector<Group> parse_groups(Cursor& c) {
  std::vector<Group> groups;
  while (!c.done()) {
    c.expect('[');
    Group g{parse_sum(c)};
    c.expect(']');
    if (c.accept('^')) {
      const Exponent p = c.signed_exponent();
      if (p < 1) c.fail("group power must be positive");
      g.power = static_cast<int>(p);
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void append_signed(std::ostringstream& os, const Monomial& m, bool first) {
  if (first) {
    if (m.coef < 0) os << '-';
  } else {
    os << (m.coef < 0 ? " - " : " + ");
  }
  os << format_monomial(m);
}

}  // namespace

BivariatePoly parse_numerator(std::string_view text) {
  Cursor c(text);
  if (c.done()) c.fail("empty numerator");
  if (c.peek() != '[') {
    auto terms = parse_sum(c);
    if (!c.done()) c.fail("unexpected trailing input");
    return BivariatePoly::from_terms(std::move(terms));
  }
  BivariatePoly product = BivariatePoly::from_terms({Monomial{}});
  for (auto& g : parse_groups(c)) {
    const auto factor = BivariatePoly::from_terms(std::move(g.terms));
    for (int i = 0; i < g.power; ++i) product = product * factor;
  }
  return product;
}

std::vector<BinomialFactor> parse_factor_list(std::string_view text) {
  Cursor c(text);
  std::vector<BinomialFactor> out;
  for (auto& g : parse_groups(c)) {
    if (g.terms.size() != 2) {
      throw ParseError("denominator factor must have exactly two terms in \"" + std::string(text) + "\"");
    }
    BinomialFactor f{g.terms[0], g.terms[1]};
    f.b.coef = -f.b.coef;
    for (int i = 0; i < g.power; ++i) out.push_back(f);
  }
  return out;
}

ClosedForm parse_closed_form(std::string_view numerator, std::string_view factors) {
  return {parse_numerator(numerator), parse_factor_list(factors)};
}

NamedClosedForm parse_closed_form_line(std::string_view line, int line_number) {
  const auto bar1 = line.find('|');
  const auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos || line.find('|', bar2 + 1) != std::string_view::npos) {
    throw ParseError("line " + std::to_string(line_number) + ": expected 'name | numerator | factors'");
  }
  NamedClosedForm out;
  out.name = std::string(trim(line.substr(0, bar1)));
  if (out.name.empty()) throw ParseError("line " + std::to_string(line_number) + ": empty name");
  try {
    out.form = parse_closed_form(line.substr(bar1 + 1, bar2 - bar1 - 1), line.substr(bar2 + 1));
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
  }
  out.line = line_number;
  return out;
}

std::vector<NamedClosedForm> read_closed_forms(std::istream& in) {
  std::vector<NamedClosedForm> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_closed_form_line(t, number));
  }
  return out;
}

std::vector<NamedClosedForm> load_closed_forms(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open closed-form data file " + path.string());
  return read_closed_forms(in);
}

std::string format_monomial(const Monomial& m) {
  return Integer(abs(m.coef)).get_str() + "*x^" + std::to_string(m.x) + "*q^" + std::to_string(m.q);
}

std::string format_closed_form(const ClosedForm& cf) {
  std::ostringstream os;
  os << '[';
  const auto& terms = cf.numerator.terms();
  if (terms.empty()) os << '0';
  for (std::size_t i = 0; i < terms.size(); ++i) append_signed(os, terms[i], i == 0);
  os << "] |";
  for (const auto& f : cf.denominator) {
    Monomial neg_b = f.b;
    neg_b.coef = -neg_b.coef;
    os << " [";
    append_signed(os, f.a, true);
    append_signed(os, neg_b, false);
    os << ']';
  }
  return os.str();
}

}  // namespace qcat

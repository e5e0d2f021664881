#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "qcat/closed_form_io.hpp"

using qcat::Monomial;

TEST_CASE("monomials in any order and with optional parts") {
  const auto p = qcat::parse_numerator("x - q^2 + 3*q^-1 + 2*x*q^6 + q^(-4)*x^2");
  const std::vector<Monomial> expected = {{3, 0, -1}, {-1, 0, 2}, {1, 1, 0}, {2, 1, 6}, {1, 2, -4}};
  CHECK(p.terms() == expected);
  CHECK(qcat::parse_numerator("q^2*x") == qcat::parse_numerator("x*q^2"));
  CHECK(qcat::parse_numerator("x + x").terms() == std::vector<Monomial>{{2, 1, 0}});
  CHECK(qcat::parse_numerator("x - x").is_zero());
}

TEST_CASE("bracketed products and powers") {
  CHECK(qcat::parse_numerator("[1 + x]^2") == qcat::parse_numerator("1 + 2*x + x^2"));
  CHECK(qcat::parse_numerator("[q^2] [1 - q^2]") == qcat::parse_numerator("q^2 - q^4"));
  CHECK(qcat::parse_numerator("[-x] [1 - x]") == qcat::parse_numerator("x^2 - x"));
}

TEST_CASE("factor lists") {
  const auto f = qcat::parse_factor_list("[1 - x] [x - q^2] [1 - q^6]^2");
  REQUIRE(f.size() == 4);
  CHECK(f[0].a == Monomial{1, 0, 0});
  CHECK(f[0].b == Monomial{1, 1, 0});
  CHECK(f[1].a == Monomial{1, 1, 0});
  CHECK(f[1].b == Monomial{1, 0, 2});
  CHECK(f[3].b == Monomial{1, 0, 6});
  // A plus sign means the second monomial enters negated.
  const auto g = qcat::parse_factor_list("[1 + q*x]");
  CHECK(g[0].b == Monomial{-1, 1, 1});
}

TEST_CASE("lines") {
  const auto nc = qcat::parse_closed_form_line("X_{3,1}G_3 | q^2 | [1 - x] [1 - q^6*x]", 7);
  CHECK(nc.name == "X_{3,1}G_3");
  CHECK(nc.line == 7);
  CHECK(nc.form.denominator.size() == 2);

  std::istringstream in("# comment\n\nA | 1 | [1 - x]\n  \nB | x | [1 - q*x]\n");
  const auto all = qcat::read_closed_forms(in);
  REQUIRE(all.size() == 2);
  CHECK(all[0].name == "A");
  CHECK(all[0].line == 3);
  CHECK(all[1].line == 5);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(qcat::parse_closed_form_line("A | 1"), qcat::ParseError);
  CHECK_THROWS_AS(qcat::parse_closed_form_line(" | 1 | [1 - x]"), qcat::ParseError);
  CHECK_THROWS_AS(qcat::parse_numerator("x^"), qcat::ParseError);
  CHECK_THROWS_AS(qcat::parse_numerator("y"), qcat::ParseError);
  CHECK_THROWS_AS(qcat::parse_numerator("[1 + x"), qcat::ParseError);
  CHECK_THROWS_AS(qcat::parse_factor_list("[1 - x - q]"), qcat::ParseError);
  CHECK_THROWS_AS(qcat::parse_factor_list("1 - x"), qcat::ParseError);
  CHECK_THROWS_AS(qcat::load_closed_forms("/nonexistent/closed_forms.txt"), qcat::ConfigError);
}

TEST_CASE("format round trip") {
  CHECK(qcat::format_monomial({-3, 2, -1}) == "3*x^2*q^-1");
  CHECK(qcat::format_monomial({1, 0, 0}) == "1*x^0*q^0");
  CHECK(qcat::format_monomial({1, 1, 1}) == "1*x^1*q^1");

  for (const auto& nc : qcat::load_closed_forms(QCAT_DEFAULT_DATA_FILE)) {
    const auto text = qcat::format_closed_form(nc.form);
    const auto again = qcat::parse_closed_form_line(nc.name + " | " + text);
    INFO(nc.name << ": " << text);
    CHECK(again.form.numerator == nc.form.numerator);
    CHECK(again.form.denominator == nc.form.denominator);
  }
}

TEST_CASE("shipped data file") {
  const auto all = qcat::load_closed_forms(QCAT_DEFAULT_DATA_FILE);
  CHECK(all.size() == 27);
  std::set<std::string> names;
  for (const auto& nc : all) names.insert(nc.name);
  CHECK(names.size() == all.size());
  for (const char* n : {"F_3", "F_4", "F_5", "F_6", "G_3", "G_4", "G_5", "H_3^0", "H_4^0", "H_4^2", "H_5^0",
                        "X_{3,0}H_3^0", "X_{4,0}H_4^0", "X_{4,2}H_4^2", "X_{5,1}G_5", "X_{5,4}G_5"}) {
    CHECK(names.count(n) == 1);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qcat/qseries.hpp"

using qcat::Integer;
using qcat::LaurentPoly;

namespace {

LaurentPoly P(std::initializer_list<long> c, long low = 0) { return LaurentPoly::from_coefficients(c, low); }

// q-Pascal table built independently of the library's product formula.
std::vector<std::vector<LaurentPoly>> pascal_table(int a_max) {
  std::vector<std::vector<LaurentPoly>> t(static_cast<std::size_t>(a_max) + 1);
  for (int a = 0; a <= a_max; ++a) {
    t[a].resize(static_cast<std::size_t>(a) + 1);
    t[a][0] = t[a][a] = LaurentPoly(1);
    for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b].shifted(b);
  }
  return t;
}

// [a]! as a product of q-integers.
LaurentPoly q_factorial(int a) {
  LaurentPoly f(1);
  for (int i = 1; i <= a; ++i) f = f * qcat::q_integer(i);
  return f;
}

Integer binomial(int a, int b) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(qcat::q_integer(0).is_zero());
  CHECK(qcat::q_integer(1) == LaurentPoly(1));
  CHECK(qcat::q_integer(3) == P({1, 1, 1}));
  CHECK(qcat::q_integer(5).value_at_one() == 5);
  for (int n = 0; n < 20; ++n) {
    CHECK(P({1, -1}) * qcat::q_integer(n) == LaurentPoly(1) - LaurentPoly::monomial(1, n));
  }
}

TEST_CASE("q-binomials") {
  CHECK(qcat::q_binomial(4, 2) == P({1, 1, 2, 1, 1}));
  CHECK(qcat::q_binomial(9, 0) == LaurentPoly(1));
  CHECK(qcat::q_binomial(3, 2) == P({1, 1, 1}));
  CHECK(qcat::q_binomial(3, 4).is_zero());
}

TEST_CASE("q-binomials match the Pascal recurrence and the factorial quotient up to 40") {
  const auto table = pascal_table(40);
  for (int a = 0; a <= 40; ++a) {
    for (int b = 0; b <= a; ++b) {
      const auto g = qcat::q_binomial(a, b);
      REQUIRE(g == table[a][b]);
      CHECK(*g.degree() == b * (a - b));
      CHECK(g.value_at_one() == binomial(a, b));
      CHECK(qcat::is_symmetric_polynomial(g));
      CHECK(qcat::is_unimodal(g).holds);
    }
  }
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= a; ++b) {
      CHECK(qcat::q_binomial(a, b) == qcat::exact_div(q_factorial(a), q_factorial(b) * q_factorial(a - b)));
    }
  }
}

TEST_CASE("catalan polynomials") {
  CHECK(qcat::q_catalan(0) == LaurentPoly(1));
  CHECK(qcat::q_catalan(1) == LaurentPoly(1));
  CHECK(qcat::q_catalan(2) == P({1, 0, 1}));
  CHECK(qcat::q_catalan(3).to_string() == "1 + q^2 + q^3 + q^4 + q^6");
  CHECK(qcat::q_catalan(4).to_string() ==
        "1 + q^2 + q^3 + 2*q^4 + q^5 + 2*q^6 + q^7 + 2*q^8 + q^9 + q^10 + q^12");
  for (int n = 1; n <= 30; ++n) {
    const auto c = qcat::q_catalan(n);
    CHECK(c == qcat::rational_q_catalan(n + 1, n));
    CHECK(*c.degree() == n * (n - 1));
    CHECK(qcat::is_symmetric_polynomial(c));
    CHECK(c.value_at_one() == binomial(2 * n, n) / (n + 1));
  }
}

TEST_CASE("rational catalan polynomials") {
  CHECK(qcat::rational_q_catalan(4, 3) == qcat::q_catalan(3));
  CHECK(qcat::rational_q_catalan(3, 1) == LaurentPoly(1));
  CHECK(qcat::rational_q_catalan(3, 2) == P({1, 0, 1}));
  CHECK_THROWS_AS(qcat::rational_q_catalan(4, 2), qcat::NonCoprimePair);
}

TEST_CASE("both quotient formulas, symmetry in (m,n) and degree for coprime pairs up to 30") {
  for (int m = 1; m <= 30; ++m) {
    for (int n = 1; n <= 30; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const auto c = qcat::rational_q_catalan(m, n);
      CHECK(c == qcat::exact_div(qcat::q_binomial(m + n - 1, n), qcat::q_integer(m)));
      CHECK(c == qcat::rational_q_catalan(n, m));
      CHECK(*c.degree() == (m - 1) * (n - 1));
      CHECK(c.has_nonnegative_coefficients());
    }
  }
}

TEST_CASE("cbar") {
  CHECK(qcat::cbar(2, 2).polynomial == P({1, 1, 1}));
  CHECK(qcat::cbar(3, 2).polynomial == P({1, 0, 1}));
  CHECK(qcat::cbar(2, 4).polynomial == P({1, 1, 1, 1, 1}));
  CHECK(qcat::cbar(5, 0).polynomial == LaurentPoly(1));
  for (int m = 1; m <= 20; ++m) {
    for (int n = 1; n <= 20; ++n) {
      const auto f = qcat::cbar(m, n);
      const int d = std::gcd(m, n);
      CHECK(f.gcd == d);
      CHECK(f.is_coprime_case == (d == 1));
      CHECK(*f.polynomial.degree() == (m - 1) * (n - 1) + d - 1);
      CHECK(f.polynomial.has_nonnegative_coefficients());
      CHECK(f.polynomial.value_at_one() * (m + n) == binomial(m + n, n) * d);
      CHECK(f.polynomial * qcat::q_integer(m + n) == qcat::q_integer(d) * qcat::q_binomial(m + n, n));
    }
  }
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= 5; ++k) CHECK(qcat::cbar(m, k * m).polynomial == qcat::q_binomial(k * m + m - 1, k * m));
  }
}

TEST_CASE("K polynomials") {
  CHECK(qcat::k_poly(2) == P({1, 1}));
  CHECK(qcat::k_poly(3) == P({1, 1, 1, 1, 1}));
  CHECK(qcat::k_poly(4).to_string() ==
        "1 + q + q^2 + 2*q^3 + 2*q^4 + 2*q^5 + 2*q^6 + q^7 + q^8 + q^9");
  CHECK(*qcat::k_poly(3).degree() == 4);
  for (int n = 1; n <= 60; ++n) {
    const auto k = qcat::k_poly(n);
    CHECK(P({1, 1}) * qcat::q_catalan(n) == (LaurentPoly(1) + LaurentPoly::monomial(1, n)) * k);
    CHECK(*k.degree() == (n - 1) * (n - 1));
  }
}

TEST_CASE("coefficient relation between (1+q)C_n and K_n") {
  // (1+q) C_n = (1+q^n) K_n gives c_i = k_i + k_{i-n}.
  for (int n = 1; n <= 40; ++n) {
    const auto c = P({1, 1}) * qcat::q_catalan(n);
    const auto k = qcat::k_poly(n);
    const long top = *c.degree() + 1;
    for (long i = 0; i < top; ++i) {
      CHECK(c.coeff(i + 1) - c.coeff(i) == (k.coeff(i + 1) - k.coeff(i)) + (k.coeff(i + 1 - n) - k.coeff(i - n)));
    }
  }
}

TEST_CASE("check_pair") {
  CHECK(qcat::check_pair(3, 4).parity_unimodal);
  CHECK(qcat::check_pair(2, 2).parity_unimodal);
  for (int n = 1; n <= 10; ++n) {
    const auto r = qcat::check_pair(1, n);
    CHECK(r.parity_unimodal);
    CHECK(r.degree == 0);
  }
}

TEST_CASE("sweeps are ordered and independent of the worker count") {
  const auto small = qcat::sweep(1, 5);
  REQUIRE(small.size() == 5);
  for (const auto& r : small) CHECK(r.parity_unimodal);

  const auto one = qcat::sweep(20, 20, 1);
  const auto four = qcat::sweep(20, 20, 4);
  REQUIRE(one.size() == 400);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(*one[i].m == static_cast<int>(i / 20) + 1);
    CHECK(one[i].n == static_cast<int>(i % 20) + 1);
    CHECK(one[i].parity_unimodal);
    CHECK(one[i].degree == four[i].degree);
    CHECK(*four[i].m == *one[i].m);
    CHECK(four[i].n == one[i].n);
  }
}

TEST_CASE("cubic catalan identity") {
  CHECK(P({-1, 0, 1}) * qcat::rational_q_catalan(3, 4) == P({-1, 0, 0, -1, 0, 1, 0, 0, 1}));
  for (int k = 0; k <= 30; ++k) {
    CHECK(qcat::cubic_catalan_identity(k, 1));
    CHECK(qcat::cubic_catalan_identity(k, 2));
  }
}

TEST_CASE("inner unimodality scan") {
  const auto rows = qcat::inner_unimodality_scan(2, 3);
  CHECK(rows[0].inner_unimodal);
  CHECK(rows[1].inner_unimodal);
  for (const auto& r : qcat::inner_unimodality_scan(16, 30)) CHECK(r.inner_unimodal);
  CHECK_THROWS(qcat::inner_unimodality_scan(1, 3));
}

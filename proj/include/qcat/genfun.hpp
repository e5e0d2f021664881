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

// Truncated series in Q((q))[[x]].
//
// A QSeries is a Laurent series in q that is known exactly below its
// ceiling and has no support below its floor. Every coefficient of the
// generating functions handled here is bounded below in q, so the
// negative-exponent part of a coefficient is always known exactly once
// the ceiling is positive. That is what makes PT' exact.
//
// Rational functions are expanded in the iterated Laurent series field
// where 0 < x << q << 1: a monomial with a smaller x-exponent dominates,
// and among equal x-exponents the smaller q-exponent dominates.

#include <limits>
#include <string>
#include <vector>

#include "qcat/laurent.hpp"

namespace qcat {

/// Ceiling value carried by series that are exact in q.
inline constexpr Exponent kExact = std::numeric_limits<Exponent>::max();

class BeyondCeiling : public std::domain_error {
 public:
  explicit BeyondCeiling(const std::string& what) : std::domain_error("beyond ceiling: " + what) {}
};

class UnboundedBelow : public std::domain_error {
 public:
  UnboundedBelow() : std::domain_error("unbounded below") {}
};

class Incomparable : public std::domain_error {
 public:
  explicit Incomparable(const std::string& what) : std::domain_error("incomparable: " + what) {}
};

class WindowExceedsExactness : public std::domain_error {
 public:
  explicit WindowExceedsExactness(const std::string& what)
      : std::domain_error("window exceeds exactness: " + what) {}
};

class QSeries {
 public:
  /// The exact zero series.
  QSeries() = default;

  static QSeries exact(LaurentPoly p);
  /// Keeps the terms of p below `ceiling`. `floor` is a lower bound on the
  /// support of the full series (nullopt: no known bound).
  static QSeries truncated(const LaurentPoly& p, std::optional<Exponent> floor, Exponent ceiling);

  const LaurentPoly& known_terms() const noexcept { return terms_; }
  std::optional<Exponent> min_exponent() const noexcept { return floor_; }
  Exponent ceiling() const noexcept { return ceiling_; }
  bool is_exact() const noexcept { return ceiling_ == kExact; }

  /// Throws BeyondCeiling for e >= ceiling.
  Integer coeff(Exponent e) const;

  /// Drops everything at or above `c` (no-op when c is not below the current ceiling).
  QSeries truncated_at(Exponent c) const;
  /// q^k * s
  QSeries shifted(Exponent k) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const LaurentPoly& p, const QSeries& s);
  /// Structural equality: same terms, floor and ceiling.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  LaurentPoly terms_;
  std::optional<Exponent> floor_{0};
  Exponent ceiling_ = kExact;
};

/// t / (1 - ratio * q^step) expanded in positive powers of q, step > 0.
/// The result is known below min(t.ceiling(), ceiling).
QSeries geometric_divide(const QSeries& t, const Integer& ratio, Exponent step, Exponent ceiling);

/// Power series in x truncated at x^order with QSeries coefficients.
class XSeries {
 public:
  XSeries() : coeffs_(1) {}
  explicit XSeries(std::vector<QSeries> coeffs);
  static XSeries zero(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const QSeries& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<QSeries>& coefficients() const noexcept { return coeffs_; }
  /// Smallest ceiling over all coefficients (kExact when every coefficient is exact).
  Exponent ceiling() const;

  XSeries truncated_x(int order) const;
  XSeries truncated_q(Exponent ceiling) const;

  XSeries operator-() const;
  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const LaurentPoly& p, const XSeries& s);
  friend bool operator==(const XSeries& a, const XSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<QSeries> coeffs_;
};

struct Monomial {
  Integer coef{1};
  Exponent x = 0;
  Exponent q = 0;
};

bool operator==(const Monomial& a, const Monomial& b);

/// a dominates b when a has the smaller x-exponent, or equal x-exponents
/// and the smaller q-exponent. Coefficients are ignored. Throws
/// Incomparable when the exponent vectors coincide.
bool monomial_dominates(const Monomial& a, const Monomial& b);

/// Polynomial in x and q^(+-1) as a normalized monomial list (sorted by
/// (x, q), nonzero coefficients).
class BivariatePoly {
 public:
  BivariatePoly() = default;
  static BivariatePoly from_terms(std::vector<Monomial> terms);
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Monomial> terms_;
};

/// One denominator factor (a - b).
struct BinomialFactor {
  Monomial a;
  Monomial b;
};

bool operator==(const BinomialFactor& l, const BinomialFactor& r);

/// numerator / prod (a_i - b_i)
struct ClosedForm {
  BivariatePoly numerator;
  std::vector<BinomialFactor> denominator;

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

/// Unique expansion of `cf` under 0 < x << q << 1, truncated at x^x_order
/// and known in q below q_ceiling. Coefficients that come out as finite
/// Laurent polynomials stay exact.
XSeries expand_closed_form(const ClosedForm& cf, int x_order, Exponent q_ceiling);

/// Ceiling used when none is given: 4 * x_order * m + 8.
Exponent default_q_ceiling(int m, int x_order);

/// sum_{n >= 0} (q^2 - q^-2) N C_{m,n}(q) x^n built coefficient by
/// coefficient from cbar. For gcd(m, n) = d > 1 the coefficient is the
/// positive-power expansion of (q^2 - q^-2) q^-(m-1)(n-1) cbar(q^2) / [d]_{q^2}.
XSeries f_direct(int m, int x_order, std::optional<Exponent> q_ceiling = std::nullopt);

/// (q^2 - q^-2) (q - q^-1) / (q^m - q^-m) prod_{i<m} 1 / (1 - x q^(1-m+2i)).
ClosedForm f_product_form(int m);
XSeries f_product(int m, int x_order, std::optional<Exponent> q_ceiling = std::nullopt);

/// PT'_q: negate the negative-exponent part and substitute q -> q^-1.
XSeries pt_prime(const XSeries& s);

/// G_m = PT' F_m.
XSeries g_series(int m, int x_order, std::optional<Exponent> q_ceiling = std::nullopt);

/// X_{m,r}: coefficient of x^k in the result is the coefficient of x^(km+r).
XSeries x_section(int m, int r, const XSeries& s);

/// (q^d - q^-d) / (q - q^-1) = q^(d-1) + q^(d-3) + ... + q^(1-d).
LaurentPoly symmetric_q_integer(int d);

/// H_m^d = PT' [ (q^d - q^-d)/(q - q^-1) F_m ]; d must divide m.
XSeries h_series(int m, int d, int x_order, std::optional<Exponent> q_ceiling = std::nullopt);

/// [q^i] of every x-coefficient, as a polynomial in x.
LaurentPoly q_slice(const XSeries& s, Exponent i);

struct SeriesMismatch {
  int x_exp = 0;
  Exponent q_exp = 0;
  Integer left;
  Integer right;
};

struct SeriesComparison {
  bool equal = true;
  std::optional<SeriesMismatch> first_mismatch;
};

/// Compares x^x_from..x^x_order on q-exponents lo..hi (inclusive). Throws
/// WindowExceedsExactness if the window reaches a ceiling of either input.
SeriesComparison series_equal(const XSeries& a, const XSeries& b, int x_order, Exponent lo, Exponent hi,
                              int x_from = 0);
/// Same, on every q-exponent below the smaller of the two ceilings.
SeriesComparison series_equal(const XSeries& a, const XSeries& b, int x_order, int x_from = 0);

struct NegativeEntry {
  int x_exp = 0;
  Exponent q_exp = 0;
  Integer value;
};

struct NonnegCheck {
  bool nonnegative = true;
  std::optional<NegativeEntry> first_negative;
};

NonnegCheck nonneg_check(const XSeries& s, int x_order);

std::string to_string(const SeriesMismatch& m);

}  // namespace qcat

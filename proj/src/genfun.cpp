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

#include "qcat/genfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qcat/qseries.hpp"

namespace qcat {

namespace {

Exponent add_ceiling(Exponent ceiling, Exponent k) { return ceiling == kExact ? kExact : ceiling + k; }

std::optional<Exponent> support_floor(const QSeries& s) {
  if (s.is_exact()) return s.known_terms().low_degree();
  return s.min_exponent();
}

}  // namespace

// ---------------------------------------------------------------- QSeries

QSeries QSeries::exact(LaurentPoly p) {
  QSeries s;
  s.floor_ = p.low_degree().value_or(0);
  s.terms_ = std::move(p);
  return s;
}

QSeries QSeries::truncated(const LaurentPoly& p, std::optional<Exponent> floor, Exponent ceiling) {
  QSeries s;
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    if (t.exp >= ceiling) break;
    if (floor && t.exp < *floor) throw std::invalid_argument("QSeries: term below declared floor");
    kept.push_back(t);
  }
  s.terms_ = LaurentPoly::from_terms(std::move(kept));
  s.floor_ = floor;
  s.ceiling_ = ceiling;
  return s;
}

Integer QSeries::coeff(Exponent e) const {
  if (e >= ceiling_) throw BeyondCeiling("q^" + std::to_string(e) + " (ceiling " + std::to_string(ceiling_) + ")");
  return terms_.coeff(e);
}

QSeries QSeries::truncated_at(Exponent c) const {
  if (c >= ceiling_) return *this;
  return truncated(terms_, floor_, c);
}

QSeries QSeries::shifted(Exponent k) const {
  QSeries s = *this;
  s.terms_ = terms_.shifted(k);
  if (s.floor_) *s.floor_ += k;
  s.ceiling_ = add_ceiling(ceiling_, k);
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  s.terms_ = -terms_;
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const Exponent ceiling = std::min(a.ceiling_, b.ceiling_);
  std::optional<Exponent> floor;
  if (a.floor_ && b.floor_) floor = std::min(*a.floor_, *b.floor_);
  if (ceiling == kExact) return QSeries::exact(a.terms_ + b.terms_);
  return QSeries::truncated(a.terms_ + b.terms_, floor, ceiling);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  if ((a.is_exact() && a.terms_.is_zero()) || (b.is_exact() && b.terms_.is_zero())) return {};
  if (a.is_exact() && b.is_exact()) return QSeries::exact(a.terms_ * b.terms_);

  const auto fa = support_floor(a);
  const auto fb = support_floor(b);
  Exponent ceiling = kExact;
  if (!a.is_exact()) {
    if (!fb) throw UnboundedBelow();
    ceiling = std::min(ceiling, a.ceiling_ + *fb);
  }
  if (!b.is_exact()) {
    if (!fa) throw UnboundedBelow();
    ceiling = std::min(ceiling, b.ceiling_ + *fa);
  }
  std::optional<Exponent> floor;
  if (fa && fb) floor = *fa + *fb;
  return QSeries::truncated(a.terms_ * b.terms_, floor, ceiling);
}

QSeries operator*(const LaurentPoly& p, const QSeries& s) { return QSeries::exact(p) * s; }

bool operator==(const QSeries& a, const QSeries& b) {
  return a.terms_ == b.terms_ && a.ceiling_ == b.ceiling_ && (a.is_exact() || a.floor_ == b.floor_);
}

QSeries geometric_divide(const QSeries& t, const Integer& ratio, Exponent step, Exponent ceiling) {
  if (step <= 0) throw std::invalid_argument("geometric_divide: step must be positive");
  if (t.is_exact() && t.known_terms().is_zero()) return {};
  const auto floor = support_floor(t);
  if (!floor) throw UnboundedBelow();
  const Exponent c = std::min(t.ceiling(), ceiling);
  if (c <= *floor) return QSeries::truncated({}, floor, c);

  std::vector<Integer> u(static_cast<std::size_t>(c - *floor));
  for (const auto& term : t.known_terms().terms()) {
    if (term.exp >= c) break;
    u[static_cast<std::size_t>(term.exp - *floor)] = term.coef;
  }
  const auto s = static_cast<std::size_t>(step);
  for (std::size_t i = s; i < u.size(); ++i) {
    if (u[i - s] != 0) mpz_addmul(u[i].get_mpz_t(), ratio.get_mpz_t(), u[i - s].get_mpz_t());
  }
  return QSeries::truncated(LaurentPoly::from_dense(u, *floor), floor, c);
}

// ---------------------------------------------------------------- XSeries

XSeries::XSeries(std::vector<QSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("XSeries: need at least the x^0 coefficient");
}

XSeries XSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("XSeries: negative order");
  return XSeries(std::vector<QSeries>(static_cast<std::size_t>(order) + 1));
}

Exponent XSeries::ceiling() const {
  Exponent c = kExact;
  for (const auto& q : coeffs_) c = std::min(c, q.ceiling());
  return c;
}

XSeries XSeries::truncated_x(int order) const {
  if (order < 0 || order > this->order()) throw std::invalid_argument("XSeries: truncation order out of range");
  return XSeries(std::vector<QSeries>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

XSeries XSeries::truncated_q(Exponent ceiling) const {
  std::vector<QSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& q : coeffs_) out.push_back(q.truncated_at(ceiling));
  return XSeries(std::move(out));
}

XSeries XSeries::operator-() const {
  std::vector<QSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& q : coeffs_) out.push_back(-q);
  return XSeries(std::move(out));
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<QSeries> out;
  for (int k = 0; k <= n; ++k) out.push_back(a[k] + b[k]);
  return XSeries(std::move(out));
}

XSeries operator-(const XSeries& a, const XSeries& b) { return a + (-b); }

XSeries operator*(const XSeries& a, const XSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<QSeries> out;
  for (int k = 0; k <= n; ++k) {
    QSeries acc;
    for (int i = 0; i <= k; ++i) acc = acc + a[i] * b[k - i];
    out.push_back(std::move(acc));
  }
  return XSeries(std::move(out));
}

XSeries operator*(const LaurentPoly& p, const XSeries& s) {
  std::vector<QSeries> out;
  out.reserve(s.coeffs_.size());
  for (const auto& q : s.coeffs_) out.push_back(p * q);
  return XSeries(std::move(out));
}

// ------------------------------------------------------------ closed forms

bool operator==(const Monomial& a, const Monomial& b) {
  return a.coef == b.coef && a.x == b.x && a.q == b.q;
}

bool operator==(const BinomialFactor& l, const BinomialFactor& r) { return l.a == r.a && l.b == r.b; }

bool monomial_dominates(const Monomial& a, const Monomial& b) {
  if (a.x == b.x && a.q == b.q) {
    throw Incomparable("equal exponent vectors x^" + std::to_string(a.x) + " q^" + std::to_string(a.q));
  }
  if (a.x != b.x) return a.x < b.x;
  return a.q < b.q;
}

BivariatePoly BivariatePoly::from_terms(std::vector<Monomial> terms) {
  std::map<std::pair<Exponent, Exponent>, Integer> acc;
  for (auto& t : terms) acc[{t.x, t.q}] += t.coef;
  BivariatePoly p;
  for (auto& [key, c] : acc) {
    if (c != 0) p.terms_.push_back({std::move(c), key.first, key.second});
  }
  return p;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  std::vector<Monomial> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.coef * t.coef, s.x + t.x, s.q + t.q});
  }
  return BivariatePoly::from_terms(std::move(out));
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  std::vector<Monomial> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return BivariatePoly::from_terms(std::move(out));
}

namespace {

// 1/(a - b) = sign * lead^-1 * 1/(1 - ratio * x^dx q^dq), lead the dominant monomial.
struct GeometricFactor {
  Integer scale;      // sign / lead.coef
  Exponent shift_q;   // -lead.q
  Integer ratio;
  Exponent dx;
  Exponent dq;
};

GeometricFactor orient(const BinomialFactor& f) {
  const bool a_leads = monomial_dominates(f.a, f.b);
  const Monomial& lead = a_leads ? f.a : f.b;
  const Monomial& rest = a_leads ? f.b : f.a;
  if (abs(lead.coef) != 1) {
    throw std::domain_error("dominant monomial of a denominator factor must have coefficient +-1");
  }
  if (lead.x != 0) throw std::domain_error("dominant monomial of a denominator factor must be free of x");
  GeometricFactor g;
  g.scale = a_leads ? lead.coef : Integer(-lead.coef);
  g.shift_q = -lead.q;
  g.ratio = rest.coef * lead.coef;
  g.dx = rest.x;
  g.dq = rest.q - lead.q;
  return g;
}

}  // namespace

XSeries expand_closed_form(const ClosedForm& cf, int x_order, Exponent q_ceiling) {
  if (x_order < 0) throw std::invalid_argument("expand_closed_form: negative x-order");

  std::vector<std::vector<Term>> rows(static_cast<std::size_t>(x_order) + 1);
  for (const auto& t : cf.numerator.terms()) {
    if (t.x < 0) throw std::domain_error("expand_closed_form: numerator has a negative power of x");
    if (t.x <= x_order) rows[static_cast<std::size_t>(t.x)].push_back({t.q, t.coef});
  }
  std::vector<QSeries> u;
  u.reserve(rows.size());
  for (auto& r : rows) u.push_back(QSeries::exact(LaurentPoly::from_terms(std::move(r))));

  std::vector<GeometricFactor> factors;
  for (const auto& f : cf.denominator) factors.push_back(orient(f));
  // Factors carrying x keep every coefficient a finite Laurent polynomial,
  // so they go first and only the pure-q factors ever truncate.
  std::stable_partition(factors.begin(), factors.end(), [](const GeometricFactor& g) { return g.dx > 0; });

  Integer scale = 1;
  Exponent shift = 0;
  for (const auto& g : factors) {
    scale *= g.scale;
    shift += g.shift_q;
  }
  const Exponent internal_ceiling = q_ceiling == kExact ? kExact : q_ceiling - shift;

  for (const auto& g : factors) {
    if (g.dx > 0) {
      const auto mult = LaurentPoly::monomial(g.ratio, g.dq);
      for (std::size_t n = static_cast<std::size_t>(g.dx); n < u.size(); ++n) {
        u[n] = u[n] + mult * u[n - static_cast<std::size_t>(g.dx)];
      }
    } else {
      for (auto& c : u) c = geometric_divide(c, g.ratio, g.dq, internal_ceiling);
    }
  }

  const auto lead = LaurentPoly::monomial(scale, shift);
  for (auto& c : u) {
    c = lead * c;
    if (c.is_exact()) continue;
    c = c.truncated_at(q_ceiling);
    if (c.ceiling() < q_ceiling) {
      throw std::logic_error("expand_closed_form: lost exactness below the requested ceiling");
    }
  }
  return XSeries(std::move(u));
}

// ----------------------------------------------------- generating functions

Exponent default_q_ceiling(int m, int x_order) {
  return 4 * static_cast<Exponent>(x_order) * m + 8;
}

namespace {

const LaurentPoly& q2_minus_q_minus2() {
  static const LaurentPoly p = LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2);
  return p;
}

void require_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
}

}  // namespace

XSeries f_direct(int m, int x_order, std::optional<Exponent> q_ceiling) {
  require_m(m);
  if (x_order < 0) throw std::invalid_argument("f_direct: negative x-order");
  const Exponent ceiling = q_ceiling.value_or(default_q_ceiling(m, x_order));
  const auto one_minus_q2 = LaurentPoly::from_coefficients({1, 0, -1});

  std::vector<QSeries> coeffs;
  for (int n = 0; n <= x_order; ++n) {
    const auto family = cbar(m, n);
    const Exponent shift = -static_cast<Exponent>(m - 1) * (n - 1);
    const auto base = q2_minus_q_minus2() * family.polynomial.substitute_power(2).shifted(shift);
    if (family.gcd == 1) {
      coeffs.push_back(QSeries::exact(base));
    } else {
      // 1/[d]_{q^2} = (1 - q^2) / (1 - q^(2d))
      coeffs.push_back(geometric_divide(QSeries::exact(one_minus_q2 * base), 1, 2 * family.gcd, ceiling));
    }
  }
  return XSeries(std::move(coeffs));
}

ClosedForm f_product_form(int m) {
  require_m(m);
  ClosedForm cf;
  cf.numerator = BivariatePoly::from_terms({{1, 0, 3}, {-1, 0, 1}, {-1, 0, -1}, {1, 0, -3}});
  cf.denominator.push_back({{1, 0, m}, {1, 0, -m}});
  for (int i = 0; i < m; ++i) cf.denominator.push_back({{1, 0, 0}, {1, 1, 1 - m + 2 * i}});
  return cf;
}

XSeries f_product(int m, int x_order, std::optional<Exponent> q_ceiling) {
  return expand_closed_form(f_product_form(m), x_order, q_ceiling.value_or(default_q_ceiling(m, x_order)));
}

XSeries pt_prime(const XSeries& s) {
  std::vector<QSeries> out;
  out.reserve(s.coefficients().size());
  for (const auto& c : s.coefficients()) {
    if (!c.is_exact() && !c.min_exponent()) throw UnboundedBelow();
    if (c.ceiling() < 0) throw BeyondCeiling("negative part of a coefficient is truncated");
    out.push_back(QSeries::exact(-reciprocal_subst(extract(c.known_terms(), Region::negative))));
  }
  return XSeries(std::move(out));
}

XSeries g_series(int m, int x_order, std::optional<Exponent> q_ceiling) {
  return pt_prime(f_product(m, x_order, q_ceiling));
}

XSeries x_section(int m, int r, const XSeries& s) {
  if (m < 1 || r < 0 || r >= m) throw std::invalid_argument("x_section: need 0 <= r < m");
  if (r > s.order()) throw std::invalid_argument("x_section: residue exceeds the input order");
  std::vector<QSeries> out;
  for (int k = 0; k * m + r <= s.order(); ++k) out.push_back(s[k * m + r]);
  return XSeries(std::move(out));
}

LaurentPoly symmetric_q_integer(int d) {
  if (d < 1) throw std::invalid_argument("symmetric_q_integer: d must be positive");
  std::vector<Term> terms;
  for (int j = 0; j < d; ++j) terms.push_back({d - 1 - 2 * j, Integer(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

XSeries h_series(int m, int d, int x_order, std::optional<Exponent> q_ceiling) {
  require_m(m);
  if (d < 1 || m % d != 0) throw std::invalid_argument("h_series: d must divide m");
  return pt_prime(symmetric_q_integer(d) * f_product(m, x_order, q_ceiling));
}

LaurentPoly q_slice(const XSeries& s, Exponent i) {
  std::vector<Term> out;
  for (int k = 0; k <= s.order(); ++k) out.push_back({k, s[k].coeff(i)});
  return LaurentPoly::from_terms(std::move(out));
}

namespace {

SeriesComparison compare_window(const XSeries& a, const XSeries& b, int x_order, int x_from,
                                 std::optional<Exponent> lo, std::optional<Exponent> hi) {
  for (int k = x_from; k <= x_order; ++k) {
    Exponent top = hi.value_or(std::min(a[k].ceiling(), b[k].ceiling()));
    if (!hi && top != kExact) --top;
    const auto window = [&](const QSeries& s) {
      std::vector<Term> kept;
      for (const auto& t : s.known_terms().terms()) {
        if ((!lo || t.exp >= *lo) && t.exp <= top) kept.push_back(t);
      }
      return kept;
    };
    const auto ta = window(a[k]);
    const auto tb = window(b[k]);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ta.size() || j < tb.size()) {
      if (i < ta.size() && j < tb.size() && ta[i].exp == tb[j].exp) {
        if (ta[i].coef != tb[j].coef) return {false, SeriesMismatch{k, ta[i].exp, ta[i].coef, tb[j].coef}};
        ++i;
        ++j;
      } else if (j == tb.size() || (i < ta.size() && ta[i].exp < tb[j].exp)) {
        return {false, SeriesMismatch{k, ta[i].exp, ta[i].coef, 0}};
      } else {
        return {false, SeriesMismatch{k, tb[j].exp, 0, tb[j].coef}};
      }
    }
  }
  return {};
}

void require_x_window(const XSeries& a, const XSeries& b, int x_order) {
  if (x_order < 0 || x_order > a.order() || x_order > b.order()) {
    throw WindowExceedsExactness("x-order " + std::to_string(x_order) + " beyond series orders " +
                                 std::to_string(a.order()) + ", " + std::to_string(b.order()));
  }
}

}  // namespace

SeriesComparison series_equal(const XSeries& a, const XSeries& b, int x_order, Exponent lo, Exponent hi,
                              int x_from) {
  require_x_window(a, b, x_order);
  for (int k = x_from; k <= x_order; ++k) {
    if (hi >= a[k].ceiling() || hi >= b[k].ceiling()) {
      throw WindowExceedsExactness("q^" + std::to_string(hi) + " at x^" + std::to_string(k) +
                                   " (ceilings " + std::to_string(a[k].ceiling()) + ", " +
                                   std::to_string(b[k].ceiling()) + ")");
    }
  }
  return compare_window(a, b, x_order, x_from, lo, hi);
}

SeriesComparison series_equal(const XSeries& a, const XSeries& b, int x_order, int x_from) {
  require_x_window(a, b, x_order);
  return compare_window(a, b, x_order, x_from, std::nullopt, std::nullopt);
}

NonnegCheck nonneg_check(const XSeries& s, int x_order) {
  if (x_order > s.order()) throw WindowExceedsExactness("x-order beyond series order");
  for (int k = 0; k <= x_order; ++k) {
    for (const auto& t : s[k].known_terms().terms()) {
      if (t.coef < 0) return {false, NegativeEntry{k, t.exp, t.coef}};
    }
  }
  return {};
}

std::string to_string(const SeriesMismatch& m) {
  std::ostringstream os;
  os << "x^" << m.x_exp << " q^" << m.q_exp << ": " << m.left.get_str() << " vs " << m.right.get_str();
  return os.str();
}

}  // namespace qcat

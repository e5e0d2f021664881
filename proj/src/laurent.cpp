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

#include "qcat/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qcat {

namespace {

// Dense accumulation is used whenever the exponent span is not much larger
// than the number of partial products.
bool prefer_dense(std::size_t products, Exponent span) {
  return span >= 0 && static_cast<std::uint64_t>(span) <= 4 * products + 1024;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->exp < ib->exp)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->exp < ia->exp) {
      out.push_back({ib->exp, subtract ? Integer(-ib->coef) : ib->coef});
      ++ib;
    } else {
      Integer c = subtract ? Integer(ia->coef - ib->coef) : Integer(ia->coef + ib->coef);
      if (c != 0) out.push_back({ia->exp, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.push_back({0, std::move(constant)});
}

LaurentPoly LaurentPoly::monomial(Integer coef, Exponent exp) {
  LaurentPoly p;
  if (coef != 0) p.terms_.push_back({exp, std::move(coef)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::from_dense(std::span<const Integer> coeffs, Exponent low) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) p.terms_.push_back({low + static_cast<Exponent>(i), coeffs[i]});
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::initializer_list<long> coeffs, Exponent low) {
  std::vector<Integer> v(coeffs.begin(), coeffs.end());
  return from_dense(v, low);
}

std::optional<Exponent> LaurentPoly::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exp;
}

std::optional<Exponent> LaurentPoly::low_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp;
}

Integer LaurentPoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coef;
  return 0;
}

std::vector<Integer> LaurentPoly::coefficient_sequence() const {
  if (terms_.empty()) return {};
  if (terms_.front().exp < 0) throw NegativeSupport();
  std::vector<Integer> seq(static_cast<std::size_t>(terms_.back().exp) + 1);
  for (const auto& t : terms_) seq[static_cast<std::size_t>(t.exp)] = t.coef;
  return seq;
}

Integer LaurentPoly::value_at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coef;
  return s;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef > 0; });
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += k;
  return p;
}

LaurentPoly LaurentPoly::substitute_power(Exponent k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: exponent multiplier must be nonzero");
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp *= k;
  if (k < 0) std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

std::string LaurentPoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer mag = abs(t.coef);
    if (first) {
      if (t.coef < 0) os << '-';
    } else {
      os << (t.coef < 0 ? " - " : " + ");
    }
    first = false;
    if (t.exp == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (t.exp != 1) os << '^' << t.exp;
  }
  return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const Exponent low = lhs.terms_.front().exp + rhs.terms_.front().exp;
  const Exponent high = lhs.terms_.back().exp + rhs.terms_.back().exp;
  const std::size_t products = lhs.size() * rhs.size();

  if (prefer_dense(products, high - low)) {
    std::vector<Integer> acc(static_cast<std::size_t>(high - low) + 1);
    for (const auto& a : lhs.terms_) {
      for (const auto& b : rhs.terms_) {
        auto& slot = acc[static_cast<std::size_t>(a.exp + b.exp - low)];
        mpz_addmul(slot.get_mpz_t(), a.coef.get_mpz_t(), b.coef.get_mpz_t());
      }
    }
    return LaurentPoly::from_dense(acc, low);
  }

  std::map<Exponent, Integer> acc;
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      auto& slot = acc[a.exp + b.exp];
      mpz_addmul(slot.get_mpz_t(), a.coef.get_mpz_t(), b.coef.get_mpz_t());
    }
  }
  LaurentPoly p;
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.push_back({e, std::move(c)});
  }
  return p;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  return std::equal(lhs.terms_.begin(), lhs.terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
                    [](const Term& a, const Term& b) { return a.exp == b.exp && a.coef == b.coef; });
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
  if (num.is_zero()) return {};

  const auto dterms = den.terms();
  const Exponent dlow = dterms.front().exp;
  const Exponent dspan = dterms.back().exp - dlow;
  const Exponent nlow = *num.low_degree();
  const Exponent nhigh = *num.degree();
  if (nhigh - nlow < dspan) throw InexactDivision();

  // Long division from the low end against a dense remainder.
  std::vector<Integer> rem(static_cast<std::size_t>(nhigh - nlow) + 1);
  for (const auto& t : num.terms()) rem[static_cast<std::size_t>(t.exp - nlow)] = t.coef;

  const Integer& lead = dterms.front().coef;
  const std::size_t steps = static_cast<std::size_t>(nhigh - nlow - dspan) + 1;
  std::vector<Integer> quot(steps);
  Integer t;
  for (std::size_t i = 0; i < steps; ++i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) throw InexactDivision();
    mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (const auto& d : dterms) {
      auto& slot = rem[i + static_cast<std::size_t>(d.exp - dlow)];
      mpz_submul(slot.get_mpz_t(), t.get_mpz_t(), d.coef.get_mpz_t());
    }
    quot[i] = t;
  }
  for (std::size_t i = steps; i < rem.size(); ++i) {
    if (rem[i] != 0) throw InexactDivision();
  }
  return LaurentPoly::from_dense(quot, nlow - dlow);
}

LaurentPoly extract(const LaurentPoly& p, Region region) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const bool keep = region == Region::positive ? t.exp > 0
                      : region == Region::zero   ? t.exp == 0
                                                 : t.exp < 0;
    if (keep) out.push_back(t);
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly reciprocal_subst(const LaurentPoly& p) { return p.substitute_power(-1); }

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (*p.low_degree() < 0) throw NegativeSupport();
  return p.substitute_power(2).shifted(-*p.degree());
}

Symmetry symmetry_class(const LaurentPoly& p) {
  const LaurentPoly r = reciprocal_subst(p);
  if (r == p) return Symmetry::symmetric;
  if (r == -p) return Symmetry::antisymmetric;
  return Symmetry::neither;
}

bool is_symmetric_polynomial(const LaurentPoly& p) {
  if (p.is_zero()) return true;
  if (*p.low_degree() < 0) throw NegativeSupport();
  return reciprocal_subst(p).shifted(*p.degree()) == p;
}

ModalityCheck check_unimodal_sequence(std::span<const Integer> seq) {
  bool falling = false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const int c = cmp(seq[i], seq[i - 1]);
    if (c < 0) {
      falling = true;
    } else if (c > 0 && falling) {
      return {false, static_cast<Exponent>(i)};
    }
  }
  return {};
}

ModalityCheck is_unimodal(const LaurentPoly& p) {
  const auto seq = p.coefficient_sequence();
  return check_unimodal_sequence(seq);
}

ModalityCheck is_parity_unimodal(const LaurentPoly& p) {
  const auto seq = p.coefficient_sequence();
  ModalityCheck result;
  for (std::size_t parity = 0; parity < 2; ++parity) {
    std::vector<Integer> sub;
    for (std::size_t i = parity; i < seq.size(); i += 2) sub.push_back(seq[i]);
    const auto check = check_unimodal_sequence(sub);
    if (check.holds) continue;
    const Exponent at = *check.first_violation * 2 + static_cast<Exponent>(parity);
    if (result.holds || at < *result.first_violation) result = {false, at};
  }
  return result;
}

ModalityWitnesses modality_witnesses(const LaurentPoly& p) {
  if (!is_symmetric_polynomial(p)) throw NotSymmetric();
  const auto q_minus_1 = LaurentPoly::from_coefficients({-1, 1});
  const auto q2_minus_1 = LaurentPoly::from_coefficients({-1, 0, 1});
  return {extract(normalize(q_minus_1 * p), Region::positive),
          extract(normalize(q2_minus_1 * p), Region::positive)};
}

UnimodalityReport make_unimodality_report(std::optional<int> m, int n, const LaurentPoly& p) {
  UnimodalityReport r;
  r.m = m;
  r.n = n;
  r.degree = p.degree().value_or(0);
  r.symmetric = is_symmetric_polynomial(p);
  const auto parity = is_parity_unimodal(p);
  r.parity_unimodal = parity.holds;
  r.first_violation = parity.first_violation;
  return r;
}

}  // namespace qcat

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

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcat {

using Integer = mpz_class;
using Exponent = std::int64_t;

/// Raised when a Laurent-polynomial quotient does not exist.
class InexactDivision : public std::domain_error {
 public:
  InexactDivision() : std::domain_error("inexact division") {}
};

/// Raised by operations that require a genuine polynomial (no q^-k terms).
class NegativeSupport : public std::domain_error {
 public:
  NegativeSupport() : std::domain_error("negative support") {}
};

class NotSymmetric : public std::domain_error {
 public:
  NotSymmetric() : std::domain_error("not symmetric") {}
};

struct Term {
  Exponent exp = 0;
  Integer coef;
};

/**
 * Laurent polynomial in one variable with arbitrary-precision integer
 * coefficients.
 *
 * Terms are kept sorted by strictly increasing exponent and no stored
 * coefficient is zero, so two equal polynomials have identical term lists.
 * Values are immutable once built; every operation returns a new value.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);

  static LaurentPoly monomial(Integer coef, Exponent exp);
  /// Sorts, merges equal exponents and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// coeffs[i] is the coefficient of q^(low + i).
  static LaurentPoly from_dense(std::span<const Integer> coeffs, Exponent low = 0);
  static LaurentPoly from_coefficients(std::initializer_list<long> coeffs, Exponent low = 0);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Highest / lowest exponent; empty for the zero polynomial.
  std::optional<Exponent> degree() const noexcept;
  std::optional<Exponent> low_degree() const noexcept;

  Integer coeff(Exponent e) const;
  /// Coefficients of q^0 .. q^degree including internal zeros.
  /// Throws NegativeSupport when the polynomial has q^-k terms.
  std::vector<Integer> coefficient_sequence() const;

  Integer value_at_one() const;
  bool has_nonnegative_coefficients() const;

  /// q^k * p
  LaurentPoly shifted(Exponent k) const;
  /// p(q^k) for k != 0.
  LaurentPoly substitute_power(Exponent k) const;

  /// Canonical ascending form, e.g. "q^-1 + 2 - 3*q^4". The zero polynomial is "0".
  std::string to_string(char var = 'q') const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

 private:
  std::vector<Term> terms_;
};

/// Returns Q with Q * den == num, or throws InexactDivision.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

enum class Region { positive, zero, negative };

/// PT / CT / NT: the part of p supported on exponents > 0, = 0 or < 0.
LaurentPoly extract(const LaurentPoly& p, Region region);

/// p(q^-1)
LaurentPoly reciprocal_subst(const LaurentPoly& p);

/// P(q^2) q^(-deg P), with N(0) = 0. Throws NegativeSupport for q^-k terms.
LaurentPoly normalize(const LaurentPoly& p);

enum class Symmetry { symmetric, antisymmetric, neither };

/// Classification under q -> q^-1. The zero polynomial is symmetric.
Symmetry symmetry_class(const LaurentPoly& p);

/// Palindromic coefficient sequence a_i = a_{deg-i} of a genuine polynomial.
bool is_symmetric_polynomial(const LaurentPoly& p);

struct ModalityCheck {
  bool holds = true;
  /// Smallest index i where a rise a_i > a_{i-1} follows an earlier fall.
  std::optional<Exponent> first_violation;
};

ModalityCheck check_unimodal_sequence(std::span<const Integer> seq);
ModalityCheck is_unimodal(const LaurentPoly& p);
/// Both the even-index and odd-index subsequences are unimodal; the
/// violation is reported as an exponent of p.
ModalityCheck is_parity_unimodal(const LaurentPoly& p);

struct ModalityWitnesses {
  LaurentPoly unimodal;  ///< PT N((q-1) P)
  LaurentPoly parity;    ///< PT (q^2 - q^-2) N P
};

/// Sign witnesses for a symmetric polynomial: each is coefficientwise
/// nonnegative exactly when p is unimodal (resp. parity-unimodal).
ModalityWitnesses modality_witnesses(const LaurentPoly& p);

struct UnimodalityReport {
  std::optional<int> m;  ///< absent when the subject is a single index n
  int n = 0;
  Exponent degree = 0;
  bool symmetric = true;
  bool parity_unimodal = true;
  std::optional<Exponent> first_violation;
};

UnimodalityReport make_unimodality_report(std::optional<int> m, int n, const LaurentPoly& p);

}  // namespace qcat

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

#include "qcat/qseries.hpp"

#include <numeric>
#include <string>

#include "qcat/parallel.hpp"

namespace qcat {

namespace {

// In-place dense helpers over coefficient vectors indexed from q^0.

// p *= (1 - q^k)
void mul_one_minus_qk(std::vector<Integer>& p, std::size_t k) {
  const std::size_t old = p.size();
  p.resize(old + k);
  for (std::size_t i = p.size(); i-- > k;) p[i] -= p[i - k];
}

// p /= (1 - q^k); the quotient must be a polynomial.
void div_one_minus_qk(std::vector<Integer>& p, std::size_t k) {
  for (std::size_t i = k; i < p.size(); ++i) p[i] += p[i - k];
  for (std::size_t i = p.size() - k; i < p.size(); ++i) {
    if (p[i] != 0) throw InexactDivision();
  }
  p.resize(p.size() - k);
}

std::vector<Integer> dense_q_binomial(int a, int b) {
  const int k = std::min(b, a - b);
  std::vector<Integer> p{Integer(1)};
  // After step i the vector holds [a-k+i choose i]_q.
  for (int i = 1; i <= k; ++i) {
    mul_one_minus_qk(p, static_cast<std::size_t>(a - k + i));
    div_one_minus_qk(p, static_cast<std::size_t>(i));
  }
  return p;
}

void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

NonCoprimePair::NonCoprimePair(int m, int n)
    : std::domain_error("non-coprime pair (" + std::to_string(m) + ", " + std::to_string(n) +
                        "): gcd is " + std::to_string(std::gcd(m, n)) + ", use cbar") {}

LaurentPoly q_integer(int n) {
  if (n < 0) throw std::invalid_argument("q_integer: n must be nonnegative");
  std::vector<Integer> c(static_cast<std::size_t>(n), Integer(1));
  return LaurentPoly::from_dense(c);
}

LaurentPoly q_binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return {};
  return LaurentPoly::from_dense(dense_q_binomial(a, b));
}

LaurentPoly rational_q_catalan(int m, int n) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (std::gcd(m, n) != 1) throw NonCoprimePair(m, n);
  return exact_div(q_binomial(m + n, n), q_integer(m + n));
}

QCatalanFamily cbar(int m, int n) {
  require_positive(m, "m");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  QCatalanFamily f;
  f.m = m;
  f.n = n;
  f.gcd = std::gcd(m, n);
  f.is_coprime_case = f.gcd == 1;
  if (n == 0) {
    f.polynomial = LaurentPoly(1);
    return f;
  }
  // [d] / [m+n] = (1 - q^d) / (1 - q^(m+n)).
  auto p = dense_q_binomial(m + n, n);
  mul_one_minus_qk(p, static_cast<std::size_t>(f.gcd));
  try {
    div_one_minus_qk(p, static_cast<std::size_t>(m + n));
  } catch (const InexactDivision&) {
    throw std::logic_error("cbar(" + std::to_string(m) + ", " + std::to_string(n) +
                           ") is not a polynomial");
  }
  f.polynomial = LaurentPoly::from_dense(p);
  return f;
}

LaurentPoly q_catalan(int n) {
  if (n < 0) throw std::invalid_argument("q_catalan: n must be nonnegative");
  if (n == 0) return LaurentPoly(1);
  return cbar(n + 1, n).polynomial;
}

LaurentPoly k_poly(int n) {
  require_positive(n, "n");
  const auto one_plus_q = LaurentPoly::from_coefficients({1, 1});
  const auto one_plus_qn = LaurentPoly(1) + LaurentPoly::monomial(1, n);
  return exact_div(one_plus_q * q_catalan(n), one_plus_qn);
}

UnimodalityReport check_pair(int m, int n) {
  require_positive(m, "m");
  require_positive(n, "n");
  const auto family = cbar(m, n);
  auto report = make_unimodality_report(m, n, family.polynomial);
  const bool witness = modality_witnesses(family.polynomial).parity.has_nonnegative_coefficients();
  if (witness != report.parity_unimodal) {
    throw std::logic_error("parity verdict disagrees with its witness at (" +
                           std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  return report;
}

void sweep_pairs(std::span<const std::pair<int, int>> pairs, unsigned jobs,
                 const std::function<void(std::size_t, const UnimodalityReport&)>& sink) {
  detail::ordered_parallel_for(
      pairs.size(), jobs, [&](std::size_t i) { return check_pair(pairs[i].first, pairs[i].second); },
      [&](std::size_t i, const UnimodalityReport& r) { sink(i, r); });
}

std::vector<UnimodalityReport> sweep(int m_max, int n_max, unsigned jobs) {
  require_positive(m_max, "m_max");
  require_positive(n_max, "n_max");
  std::vector<std::pair<int, int>> pairs;
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 1; n <= n_max; ++n) pairs.emplace_back(m, n);
  }
  std::vector<UnimodalityReport> out(pairs.size());
  sweep_pairs(pairs, jobs, [&](std::size_t i, const UnimodalityReport& r) { out[i] = r; });
  return out;
}

bool cubic_catalan_identity(int k, int residue) {
  if (k < 0 || (residue != 1 && residue != 2)) {
    throw std::invalid_argument("cubic_catalan_identity: need k >= 0 and residue in {1, 2}");
  }
  const int n = 3 * k + residue;
  const auto lhs = LaurentPoly::from_coefficients({-1, 0, 1}) * rational_q_catalan(3, n);
  std::vector<Term> rhs;
  for (int i = 0; i <= k; ++i) {
    rhs.push_back({n - (3 * i + residue), Integer(-1)});
    rhs.push_back({n + (3 * i + residue), Integer(1)});
  }
  return lhs == LaurentPoly::from_terms(std::move(rhs));
}

std::vector<InnerUnimodality> inner_unimodality_scan(int n_min, int n_max) {
  if (n_min < 2) throw std::invalid_argument("inner_unimodality_scan: n_min must be at least 2");
  std::vector<InnerUnimodality> out;
  for (int n = n_min; n <= n_max; ++n) {
    const auto seq = q_catalan(n).coefficient_sequence();
    const std::size_t last = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) - 1;
    std::vector<Integer> inner(seq.begin() + 1, seq.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    const auto check = check_unimodal_sequence(inner);
    InnerUnimodality row{n, check.holds, std::nullopt};
    if (check.first_violation) row.first_violation = *check.first_violation + 1;
    out.push_back(row);
  }
  return out;
}

}  // namespace qcat

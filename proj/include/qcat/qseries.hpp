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

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qcat/laurent.hpp"

namespace qcat {

class NonCoprimePair : public std::domain_error {
 public:
  NonCoprimePair(int m, int n);
};

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
LaurentPoly q_integer(int n);

/// Gaussian polynomial [a choose b]_q; zero outside 0 <= b <= a.
LaurentPoly q_binomial(int a, int b);

/// C_{m,n}(q) = [m+n choose n]_q / [m+n] for coprime (m, n).
LaurentPoly rational_q_catalan(int m, int n);

struct QCatalanFamily {
  int m = 0;
  int n = 0;
  int gcd = 0;
  LaurentPoly polynomial;  ///< [gcd] C_{m,n}(q)
  bool is_coprime_case = false;
};

/// The always-polynomial [gcd(m,n)] C_{m,n}(q). n = 0 gives 1.
QCatalanFamily cbar(int m, int n);

/// C_n(q) = [2n choose n]_q / [n+1].
LaurentPoly q_catalan(int n);

/// K_n(q) = (1+q) C_n(q) / (1+q^n).
LaurentPoly k_poly(int n);

/// Parity-unimodality report for cbar(m, n), cross-checked against the
/// sign of modality_witnesses(p).parity. Throws std::logic_error if the two disagree.
UnimodalityReport check_pair(int m, int n);

/// Runs check_pair over `pairs` on `jobs` workers (0 = hardware threads).
/// `sink` is called on the calling thread in input order.
void sweep_pairs(std::span<const std::pair<int, int>> pairs, unsigned jobs,
                 const std::function<void(std::size_t, const UnimodalityReport&)>& sink);

/// All pairs 1 <= m <= m_max, 1 <= n <= n_max in lexicographic order.
std::vector<UnimodalityReport> sweep(int m_max, int n_max, unsigned jobs = 0);

/// Checks (q^2-1) C_{3,3k+r}(q) == q^(3k+r) (sum_i q^(3i+r) - sum_i q^-(3i+r)), i = 0..k.
bool cubic_catalan_identity(int k, int residue);

struct InnerUnimodality {
  int n = 0;
  bool inner_unimodal = true;
  std::optional<Exponent> first_violation;  ///< exponent of C_n
};

/// Unimodality of the coefficients of q^1 .. q^(n(n-1)-1) in C_n(q).
std::vector<InnerUnimodality> inner_unimodality_scan(int n_min, int n_max);

}  // namespace qcat

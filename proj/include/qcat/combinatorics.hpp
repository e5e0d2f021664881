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

// Rational Dyck paths and the two-row tableau statistics of the square case.

#include <string>
#include <string_view>
#include <vector>

#include "qcat/laurent.hpp"

namespace qcat {

/// Lattice path from (0,0) to (m,n) with unit N and E steps, never below y = n x / m.
struct DyckPath {
  std::string steps;  ///< letters 'N' and 'E'
  int m = 0;          ///< number of E steps
  int n = 0;          ///< number of N steps

  /// Throws std::invalid_argument if the word is not a path in D_{m,n}.
  static DyckPath from_word(std::string_view word, int m, int n);
  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

struct TwoRowSYT {
  std::vector<int> row1;
  std::vector<int> row2;

  bool is_standard() const;
  friend bool operator==(const TwoRowSYT&, const TwoRowSYT&) = default;
};

struct RankTableau {
  std::vector<int> row1;
  std::vector<int> row2;

  friend bool operator==(const RankTableau&, const RankTableau&) = default;
};

/// All of D_{m,n}, lexicographic in the step word with N < E.
std::vector<DyckPath> enumerate_paths(int m, int n);

/// Whole cells between the path and the line y = n x / m.
int area(const DyckPath& d);
/// sum over D_{m,n} of q^area(D)
LaurentPoly area_polynomial(int m, int n);

/// Square case only: step i goes to the first row if it is N, else to the second.
TwoRowSYT path_to_syt(const DyckPath& d);

/// sum(row1) - n(n+1)/2
int coarea(const TwoRowSYT& t);
RankTableau rank_tableau(const TwoRowSYT& t);
/// Sum of the first-row ranks.
int bounce(const TwoRowSYT& t);
/// Sum of the entries i for which i+1 sits in a strictly smaller column.
int maj(const TwoRowSYT& t);
int maj(const DyckPath& d);

enum class Statistic { maj, coarea_plus_bounce };

/// sum over D_{n,n} of q^stat
LaurentPoly statistic_polynomial(int n, Statistic stat);

/// Text table of every tableau of shape (n,n) with its ranks and statistics, 1 <= n <= 6.
std::string render_figures(int n);

}  // namespace qcat

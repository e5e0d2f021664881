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

#include "qcat/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcat {

namespace {

void require_shape(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("path dimensions must be positive");
}

void extend(std::string& word, int x, int y, int m, int n, std::vector<DyckPath>& out) {
  if (x == m && y == n) {
    out.push_back({word, m, n});
    return;
  }
  if (y < n) {
    word.push_back('N');
    extend(word, x, y + 1, m, n, out);
    word.pop_back();
  }
  // An E step keeps the path weakly above the line iff m*y >= n*(x+1).
  if (x < m && static_cast<long>(m) * y >= static_cast<long>(n) * (x + 1)) {
    word.push_back('E');
    extend(word, x + 1, y, m, n, out);
    word.pop_back();
  }
}

// Column of every entry 1..2n, indexed from 1.
std::vector<int> columns(const TwoRowSYT& t) {
  std::vector<int> col(t.row1.size() + t.row2.size() + 1, 0);
  for (std::size_t j = 0; j < t.row1.size(); ++j) col[static_cast<std::size_t>(t.row1[j])] = static_cast<int>(j);
  for (std::size_t j = 0; j < t.row2.size(); ++j) col[static_cast<std::size_t>(t.row2[j])] = static_cast<int>(j);
  return col;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

DyckPath DyckPath::from_word(std::string_view word, int m, int n) {
  require_shape(m, n);
  int x = 0;
  int y = 0;
  for (const char c : word) {
    if (c == 'N') ++y;
    else if (c == 'E') ++x;
    else throw std::invalid_argument("path letters must be N or E");
    if (static_cast<long>(m) * y < static_cast<long>(n) * x) {
      throw std::invalid_argument("path goes below the diagonal: " + std::string(word));
    }
  }
  if (x != m || y != n) throw std::invalid_argument("path does not end at (m, n): " + std::string(word));
  return {std::string(word), m, n};
}

bool TwoRowSYT::is_standard() const {
  if (row1.size() != row2.size()) return false;
  std::vector<int> all(row1);
  all.insert(all.end(), row2.begin(), row2.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) return false;
  }
  for (std::size_t j = 0; j < row1.size(); ++j) {
    if (row1[j] >= row2[j]) return false;
    if (j > 0 && (row1[j] <= row1[j - 1] || row2[j] <= row2[j - 1])) return false;
  }
  return true;
}

std::vector<DyckPath> enumerate_paths(int m, int n) {
  require_shape(m, n);
  std::vector<DyckPath> out;
  std::string word;
  extend(word, 0, 0, m, n, out);
  return out;
}

int area(const DyckPath& d) {
  int total = 0;
  int height = 0;
  int column = 0;
  for (const char c : d.steps) {
    if (c == 'N') {
      ++height;
      continue;
    }
    // Cells in this column lie fully above the line from row ceil(n(column+1)/m) up.
    const long num = static_cast<long>(d.n) * (column + 1);
    const int lowest = static_cast<int>((num + d.m - 1) / d.m);
    total += std::max(0, height - lowest);
    ++column;
  }
  return total;
}

LaurentPoly area_polynomial(int m, int n) {
  std::vector<Term> terms;
  for (const auto& d : enumerate_paths(m, n)) terms.push_back({area(d), Integer(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

TwoRowSYT path_to_syt(const DyckPath& d) {
  if (d.m != d.n) throw std::invalid_argument("path_to_syt needs a square path");
  TwoRowSYT t;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    (d.steps[i] == 'N' ? t.row1 : t.row2).push_back(static_cast<int>(i) + 1);
  }
  return t;
}

int coarea(const TwoRowSYT& t) {
  const int n = static_cast<int>(t.row1.size());
  return std::accumulate(t.row1.begin(), t.row1.end(), 0) - n * (n + 1) / 2;
}

RankTableau rank_tableau(const TwoRowSYT& t) {
  const std::size_t size = t.row1.size() + t.row2.size();
  std::vector<int> rank(size + 1, 0);
  std::vector<int> in_row1(size + 1, 0);
  for (const int v : t.row1) in_row1[static_cast<std::size_t>(v)] = 1;
  const auto col = columns(t);
  for (std::size_t i = 2; i <= size; ++i) {
    if (in_row1[i]) rank[i] = rank[i - 1];
    else rank[i] = rank[static_cast<std::size_t>(t.row1[static_cast<std::size_t>(col[i])])] + 1;
  }
  RankTableau r;
  for (const int v : t.row1) r.row1.push_back(rank[static_cast<std::size_t>(v)]);
  for (const int v : t.row2) r.row2.push_back(rank[static_cast<std::size_t>(v)]);
  return r;
}

int bounce(const TwoRowSYT& t) {
  const auto r = rank_tableau(t);
  return std::accumulate(r.row1.begin(), r.row1.end(), 0);
}

int maj(const TwoRowSYT& t) {
  const auto col = columns(t);
  int total = 0;
  for (std::size_t i = 1; i + 1 < col.size(); ++i) {
    if (col[i + 1] < col[i]) total += static_cast<int>(i);
  }
  return total;
}

int maj(const DyckPath& d) { return maj(path_to_syt(d)); }

LaurentPoly statistic_polynomial(int n, Statistic stat) {
  std::vector<Term> terms;
  for (const auto& d : enumerate_paths(n, n)) {
    const auto t = path_to_syt(d);
    const int e = stat == Statistic::maj ? maj(t) : coarea(t) + bounce(t);
    terms.push_back({e, Integer(1)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string render_figures(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("figures: n must be in 1..6");
  const auto paths = enumerate_paths(n, n);

  // One column per tableau; rows of the table are built as cells and padded afterwards.
  const std::vector<std::string> labels = {"tableau", "", "row-1 sum", "coarea", "ranks", "", "bounce",
                                           "q^(coarea+bounce)", "maj", "q^maj"};
  std::vector<std::vector<std::string>> cells(labels.size());
  for (const auto& d : paths) {
    const auto t = path_to_syt(d);
    const auto r = rank_tableau(t);
    const int ca = coarea(t);
    const int b = bounce(t);
    const int mj = maj(t);
    const std::vector<std::string> column = {join(t.row1),
                                             join(t.row2),
                                             std::to_string(std::accumulate(t.row1.begin(), t.row1.end(), 0)),
                                             std::to_string(ca),
                                             join(r.row1),
                                             join(r.row2),
                                             std::to_string(b),
                                             "q^" + std::to_string(ca + b),
                                             std::to_string(mj),
                                             "q^" + std::to_string(mj)};
    for (std::size_t i = 0; i < column.size(); ++i) cells[i].push_back(column[i]);
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::size_t cell_width = 0;
  for (const auto& row : cells) {
    for (const auto& c : row) cell_width = std::max(cell_width, c.size());
  }

  constexpr std::size_t kPerBlock = 8;
  std::ostringstream os;
  os << "n = " << n << ", " << paths.size() << " tableaux\n";
  for (std::size_t start = 0; start < paths.size(); start += kPerBlock) {
    const std::size_t stop = std::min(paths.size(), start + kPerBlock);
    os << '\n';
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::string line = labels[i];
      line.resize(label_width, ' ');
      for (std::size_t j = start; j < stop; ++j) {
        std::string c = cells[i][j];
        c.resize(cell_width, ' ');
        line += "  " + c;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
  }
  os << "\ncoarea+bounce: " << statistic_polynomial(n, Statistic::coarea_plus_bounce).to_string() << '\n';
  os << "maj:           " << statistic_polynomial(n, Statistic::maj).to_string() << '\n';
  return os.str();
}

}  // namespace qcat

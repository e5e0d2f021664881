#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "qcat/combinatorics.hpp"
#include "qcat/qseries.hpp"

using qcat::DyckPath;
using qcat::LaurentPoly;
using qcat::TwoRowSYT;

namespace {

// Lattice-point count of paths staying weakly above y = n x / m.
long count_paths(int m, int n) {
  std::vector<std::vector<long>> ways(static_cast<std::size_t>(m) + 1, std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
  ways[0][0] = 1;
  for (int x = 0; x <= m; ++x) {
    for (int y = 0; y <= n; ++y) {
      if (static_cast<long>(m) * y < static_cast<long>(n) * x || (x == 0 && y == 0)) continue;
      long w = 0;
      if (x > 0) w += ways[x - 1][y];
      if (y > 0) w += ways[x][y - 1];
      ways[x][y] = w;
    }
  }
  return ways[m][n];
}

// Cell-by-cell area: the unit cell with lower-left corner (i, j) counts when
// the path passes above it and the cell lies entirely above the line.
int grid_area(const DyckPath& d) {
  std::vector<int> height(static_cast<std::size_t>(d.m), 0);
  int x = 0;
  int y = 0;
  for (const char c : d.steps) {
    if (c == 'N') ++y;
    else height[static_cast<std::size_t>(x++)] = y;
  }
  int total = 0;
  for (int i = 0; i < d.m; ++i) {
    for (int j = 0; j < height[static_cast<std::size_t>(i)]; ++j) {
      if (static_cast<long>(j) * d.m >= static_cast<long>(d.n) * (i + 1)) ++total;
    }
  }
  return total;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TwoRowSYT syt(std::vector<int> a, std::vector<int> b) { return {std::move(a), std::move(b)}; }

}  // namespace

TEST_CASE("path validation") {
  CHECK(DyckPath::from_word("NNEEE", 3, 2).steps == "NNEEE");
  CHECK_THROWS(DyckPath::from_word("ENNEE", 3, 2));
  CHECK_THROWS(DyckPath::from_word("NNEE", 3, 2));
  CHECK_THROWS(DyckPath::from_word("NXEEE", 3, 2));
  CHECK_THROWS(qcat::enumerate_paths(0, 3));
}

TEST_CASE("small path sets") {
  CHECK(qcat::enumerate_paths(3, 3).size() == 5);
  CHECK(qcat::enumerate_paths(1, 1).size() == 1);
  const auto d32 = qcat::enumerate_paths(3, 2);
  REQUIRE(d32.size() == 2);
  CHECK(d32[0].steps == "NNEEE");
  CHECK(d32[1].steps == "NENEE");
  CHECK(qcat::area(d32[0]) == 1);
  CHECK(qcat::area(d32[1]) == 0);
  CHECK(qcat::area_polynomial(3, 2) == LaurentPoly::from_coefficients({1, 1}));
  CHECK(qcat::area(DyckPath::from_word("NENENE", 3, 3)) == 0);
}

TEST_CASE("enumeration is sorted, distinct and valid") {
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      const auto paths = qcat::enumerate_paths(m, n);
      CHECK(static_cast<long>(paths.size()) == count_paths(m, n));
      for (std::size_t i = 0; i < paths.size(); ++i) {
        CHECK(DyckPath::from_word(paths[i].steps, m, n) == paths[i]);
        // N sorts before E, which is the reverse of ASCII.
        if (i > 0) CHECK(paths[i - 1].steps > paths[i].steps);
      }
    }
  }
}

TEST_CASE("path counts for coprime pairs up to 12") {
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; n <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const auto count = qcat::enumerate_paths(m, n).size();
      CHECK(qcat::rational_q_catalan(m, n).value_at_one() == static_cast<long>(count));
      CHECK(static_cast<long>(count) == count_paths(m, n));
    }
  }
}

TEST_CASE("area against a cell count, and its maximum") {
  for (int m = 1; m <= 10; ++m) {
    for (int n = 1; n <= 10; ++n) {
      if (std::gcd(m, n) != 1) continue;
      int best = 0;
      for (const auto& d : qcat::enumerate_paths(m, n)) {
        const int a = qcat::area(d);
        CHECK(a == grid_area(d));
        CHECK(a >= 0);
        best = std::max(best, a);
      }
      CHECK(best == (m - 1) * (n - 1) / 2);
      const auto ap = qcat::area_polynomial(m, n);
      CHECK(ap.value_at_one() == static_cast<long>(qcat::enumerate_paths(m, n).size()));
      CHECK(ap.coeff(0) == 1);
    }
  }
}

TEST_CASE("tableaux from paths") {
  CHECK(qcat::path_to_syt(DyckPath::from_word("NNNEEE", 3, 3)) == syt({1, 2, 3}, {4, 5, 6}));
  CHECK(qcat::path_to_syt(DyckPath::from_word("NNENEE", 3, 3)) == syt({1, 2, 4}, {3, 5, 6}));
  CHECK(qcat::path_to_syt(DyckPath::from_word("NENENE", 3, 3)) == syt({1, 3, 5}, {2, 4, 6}));
  CHECK_THROWS(qcat::path_to_syt(DyckPath::from_word("NNEEE", 3, 2)));
  CHECK_FALSE(syt({1, 4, 5}, {2, 3, 6}).is_standard());
  CHECK_FALSE(syt({2, 3}, {1, 4}).is_standard());
}

TEST_CASE("path_to_syt is a bijection onto standard tableaux") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::vector<int>> seen;
    const auto paths = qcat::enumerate_paths(n, n);
    for (const auto& d : paths) {
      const auto t = qcat::path_to_syt(d);
      CHECK(t.is_standard());
      seen.insert(t.row1);
    }
    CHECK(seen.size() == paths.size());
    // Brute force: every n-subset of 1..2n that forms a valid first row.
    std::size_t standard = 0;
    const int size = 2 * n;
    for (unsigned mask = 0; mask < (1u << size); ++mask) {
      if (std::popcount(mask) != n) continue;
      TwoRowSYT t;
      for (int i = 0; i < size; ++i) ((mask >> i) & 1u ? t.row1 : t.row2).push_back(i + 1);
      if (t.is_standard()) ++standard;
    }
    CHECK(standard == paths.size());
  }
}

TEST_CASE("tableau statistics") {
  CHECK(qcat::coarea(syt({1, 2, 3}, {4, 5, 6})) == 0);
  CHECK(qcat::coarea(syt({1, 3, 5}, {2, 4, 6})) == 3);
  CHECK(qcat::coarea(syt({1, 3, 4}, {2, 5, 6})) == 2);

  CHECK(qcat::rank_tableau(syt({1, 2, 3}, {4, 5, 6})) == qcat::RankTableau{{0, 0, 0}, {1, 1, 1}});
  CHECK(qcat::rank_tableau(syt({1, 3, 5}, {2, 4, 6})) == qcat::RankTableau{{0, 1, 2}, {1, 2, 3}});
  CHECK(qcat::rank_tableau(syt({1, 2, 4}, {3, 5, 6})) == qcat::RankTableau{{0, 0, 1}, {1, 1, 2}});

  CHECK(qcat::bounce(syt({1, 2, 3}, {4, 5, 6})) == 0);
  CHECK(qcat::bounce(syt({1, 3, 5}, {2, 4, 6})) == 3);
  CHECK(qcat::bounce(syt({1, 3, 4}, {2, 5, 6})) == 2);

  CHECK(qcat::maj(syt({1, 2, 3}, {4, 5, 6})) == 3);
  CHECK(qcat::maj(syt({1, 3, 5}, {2, 4, 6})) == 0);
  CHECK(qcat::maj(syt({1, 2, 4}, {3, 5, 6})) == 6);
  CHECK(qcat::maj(DyckPath::from_word("NNENEE", 3, 3)) == 6);
}

TEST_CASE("coarea covers 0..n(n-1)/2") {
  for (int n = 1; n <= 7; ++n) {
    std::set<int> values;
    for (const auto& d : qcat::enumerate_paths(n, n)) values.insert(qcat::coarea(qcat::path_to_syt(d)));
    CHECK(*values.begin() == 0);
    CHECK(*values.rbegin() == n * (n - 1) / 2);
    CHECK(values.size() == static_cast<std::size_t>(n * (n - 1) / 2 + 1));
  }
}

TEST_CASE("both statistics give the catalan polynomial up to n = 8") {
  CHECK(qcat::statistic_polynomial(1, qcat::Statistic::maj) == LaurentPoly(1));
  CHECK(qcat::statistic_polynomial(3, qcat::Statistic::maj).to_string() == "1 + q^2 + q^3 + q^4 + q^6");
  CHECK(qcat::enumerate_paths(8, 8).size() == 1430);
  for (int n = 1; n <= 8; ++n) {
    const auto c = qcat::q_catalan(n);
    CHECK(qcat::statistic_polynomial(n, qcat::Statistic::maj) == c);
    CHECK(qcat::statistic_polynomial(n, qcat::Statistic::coarea_plus_bounce) == c);
  }
}

TEST_CASE("figure tables") {
  CHECK(qcat::render_figures(3) == read_file(QCAT_TEST_DATA_DIR "/golden/figures_n3.txt"));
  const auto one = qcat::render_figures(1);
  CHECK(one.find("n = 1, 1 tableaux") == 0);
  CHECK(one.find("maj:           1\n") != std::string::npos);
  const auto four = qcat::render_figures(4);
  CHECK(four.find("14 tableaux") != std::string::npos);
  CHECK(four.find("maj:           " + qcat::q_catalan(4).to_string() + "\n") != std::string::npos);
  CHECK_THROWS(qcat::render_figures(7));
}

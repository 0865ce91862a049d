#include <doctest.h>

#include <limits>
#include <random>

#include "gorquiv/linalg.hpp"

using namespace gorquiv;

TEST_CASE("rationals are kept reduced with a positive denominator") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(to_string(Rational(-7, 21)) == "-1/3");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow throws instead of wrapping") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(-Rational(std::numeric_limits<std::int64_t>::min()),
                  std::overflow_error);
}

namespace {

Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

// Rank of a small integer matrix as the largest nonvanishing minor.
std::int64_t det(const std::vector<std::vector<std::int64_t>>& a) {
  if (a.size() == 1) {
    return a[0][0];
  }
  std::int64_t d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < a.size(); ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (k != j) {
          row.push_back(a[i][k]);
        }
      }
      minor.push_back(row);
    }
    d += (j % 2 == 0 ? 1 : -1) * a[0][j] * det(minor);
  }
  return d;
}

std::size_t minor_rank(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t r = a.size();
  const std::size_t c = a[0].size();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    // All k-subsets of rows and columns.
    for (unsigned rm = 0; rm < (1u << r); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) {
        continue;
      }
      for (unsigned cm = 0; cm < (1u << c); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) {
          continue;
        }
        std::vector<std::vector<std::int64_t>> sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (rm >> i & 1) {
            std::vector<std::int64_t> row;
            for (std::size_t j = 0; j < c; ++j) {
              if (cm >> j & 1) {
                row.push_back(a[i][j]);
              }
            }
            sub.push_back(row);
          }
        }
        if (det(sub) != 0) {
          return k;
        }
      }
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("rank and null space on a fixed matrix") {
  Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  NullSpace ns = null_space(m);
  REQUIRE(ns.basis.cols() == 1);
  CHECK((m * ns.basis).is_zero());
  CHECK(independent_columns(m) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("random integer matrices: rank matches minors, kernels are exact") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = size(rng);
    const std::size_t c = size(rng);
    std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(c));
    for (auto& row : a) {
      for (auto& x : row) {
        // Bias towards zeros so low ranks occur.
        x = entry(rng) * (entry(rng) > 0 ? 1 : 0);
      }
    }
    Matrix m = from_rows(a);
    const std::size_t rk = rank(m);
    CHECK(rk == minor_rank(a));
    CHECK(rank(m.transpose()) == rk);
    NullSpace ns = null_space(m);
    CHECK(ns.basis.cols() == c - rk);
    CHECK((m * ns.basis).is_zero());
    CHECK(rank(ns.basis) == ns.basis.cols());
    CHECK(independent_columns(m).size() == rk);
    EchelonForm e = row_reduce(m);
    CHECK(e.pivots.size() == rk);
  }
}

TEST_CASE("null space coordinates recover kernel vectors") {
  Matrix m = from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
  NullSpace ns = null_space(m);
  Matrix v = ns.basis * from_rows({{2}, {-3}});
  Matrix coords = null_space_coordinates(ns, v);
  CHECK(coords == from_rows({{2}, {-3}}));
}

TEST_CASE("concatenation and products") {
  Matrix a = from_rows({{1, 2}});
  Matrix b = from_rows({{3}});
  CHECK(hconcat(a, b) == from_rows({{1, 2, 3}}));
  CHECK(vconcat(a, from_rows({{4, 5}})) == from_rows({{1, 2}, {4, 5}}));
  CHECK(Matrix::identity(2) * from_rows({{1}, {2}}) == from_rows({{1}, {2}}));
  CHECK_THROWS(a * a);
}

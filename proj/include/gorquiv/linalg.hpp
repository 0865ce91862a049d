// Exact linear algebra over the rationals.
//
// Entries are reduced fractions of 64-bit integers. Every operation checks
// for overflow and throws std::overflow_error instead of wrapping.

#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorquiv {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational operator-() const { return Rational(checked_neg(num_), den_, kRaw); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  struct Raw {};
  static constexpr Raw kRaw{};
  Rational(std::int64_t n, std::int64_t d, Raw) : num_(n), den_(d) {}

  static std::int64_t checked_neg(std::int64_t x);
  static std::int64_t checked_mul(std::int64_t x, std::int64_t y);
  static std::int64_t checked_add(std::int64_t x, std::int64_t y);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // always positive, gcd(num_, den_) = 1
};

inline std::int64_t Rational::checked_neg(std::int64_t x) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, x, &r)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return r;
}

inline std::int64_t Rational::checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return r;
}

inline std::int64_t Rational::checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return r;
}

inline Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

inline Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    return Rational(Rational::checked_add(a.num_, b.num_), 1, Rational::kRaw);
  }
  std::int64_t g = std::gcd(a.den_, b.den_);
  std::int64_t n = Rational::checked_add(Rational::checked_mul(a.num_, b.den_ / g),
                                         Rational::checked_mul(b.num_, a.den_ / g));
  return Rational(n, Rational::checked_mul(a.den_, b.den_ / g));
}

inline Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    return Rational(Rational::checked_mul(a.num_, b.num_), 1, Rational::kRaw);
  }
  if (a.num_ == 0 || b.num_ == 0) {
    return Rational();
  }
  std::int64_t g1 = std::gcd(a.num_, b.den_);
  std::int64_t g2 = std::gcd(b.num_, a.den_);
  return Rational(Rational::checked_mul(a.num_ / g1, b.num_ / g2),
                  Rational::checked_mul(a.den_ / g2, b.den_ / g1),
                  Rational::kRaw);
}

inline Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) {
    throw std::domain_error("rational division by zero");
  }
  return a * Rational(b.den_, b.num_);
}

std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return r.numerator() == 0; }

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& idx) const;
  Matrix rows_subset(const std::vector<std::size_t>& idx) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// [a | b], both with the same number of rows.
Matrix hconcat(const Matrix& a, const Matrix& b);
// [a ; b], both with the same number of columns.
Matrix vconcat(const Matrix& a, const Matrix& b);

struct EchelonForm {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0} as the columns of the result. Row `free[k]` of the
// basis is the k-th unit vector, so coordinates of a kernel vector are read
// off those rows.
struct NullSpace {
  Matrix basis;
  std::vector<std::size_t> free;
};
NullSpace null_space(const Matrix& m);

// Coordinates of each column of `v` in the null-space basis `ns`.
Matrix null_space_coordinates(const NullSpace& ns, const Matrix& v);

// Indices of columns of `m` that form a basis of its column space, chosen
// greedily from left to right.
std::vector<std::size_t> independent_columns(const Matrix& m);

}  // namespace gorquiv

#include "gorquiv/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gorquiv {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) {
    os << '/' << r.denominator();
  }
  return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return gorquiv::is_zero(x); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      m(r, k) = (*this)(r, idx[k]);
    }
  }
  return m;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (std::size_t c = 0; c < cols_; ++c) {
      m(k, c) = (*this)(idx[k], c);
    }
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product: dimension mismatch");
  }
  Matrix p(a.rows_, b.cols_);
  // Operands are sparse in practice; index the nonzeros of b by row.
  std::vector<std::size_t> start(b.rows_ + 1, 0);
  std::vector<std::size_t> col;
  for (std::size_t k = 0; k < b.rows_; ++k) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (!is_zero(b(k, j))) {
        col.push_back(j);
      }
    }
    start[k + 1] = col.size();
  }
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < b.rows_; ++k) {
    if (start[k + 1] > start[k]) {
      live.push_back(k);
    }
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k : live) {
      const Rational& x = a(i, k);
      if (is_zero(x)) {
        continue;
      }
      for (std::size_t e = start[k]; e < start[k + 1]; ++e) {
        p(i, col[e]) += x * b(k, col[e]);
      }
    }
  }
  return p;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("hconcat: row mismatch");
  }
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m(r, c) = a(r, c);
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      m(r, a.cols() + c) = b(r, c);
    }
  }
  return m;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("vconcat: column mismatch");
  }
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      m(r, c) = a(r, c);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
      m(a.rows() + r, c) = b(r, c);
    }
  }
  return m;
}

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && is_zero(m(pivot, c))) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        std::swap(m(pivot, k), m(lead_row, k));
      }
    }
    Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) {
      m(lead_row, k) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) {
        continue;
      }
      Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!is_zero(m(lead_row, k))) {
          m(r, k) -= f * m(lead_row, k);
        }
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) {
    return 0;
  }
  return row_reduce(m).pivots.size();
}

NullSpace null_space(const Matrix& m) {
  NullSpace ns;
  EchelonForm e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) {
    is_pivot[p] = true;
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) {
      ns.free.push_back(c);
    }
  }
  ns.basis = Matrix(m.cols(), ns.free.size());
  for (std::size_t k = 0; k < ns.free.size(); ++k) {
    std::size_t f = ns.free[k];
    ns.basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      ns.basis(e.pivots[r], k) = -e.reduced(r, f);
    }
  }
  return ns;
}

Matrix null_space_coordinates(const NullSpace& ns, const Matrix& v) {
  return v.rows_subset(ns.free);
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  if (m.cols() == 0 || m.rows() == 0) {
    return {};
  }
  return row_reduce(m).pivots;
}

}  // namespace gorquiv

#pragma once

#include "oglat/int_types.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace oglat {

// Dense row-major matrix over arbitrary-precision integers. All Gram matrices,
// bases and isometry matrices live here; vectors are rows throughout.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  std::vector<Int> row(std::size_t i) const {
    return std::vector<Int>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  void set_row(std::size_t i, const std::vector<Int>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[a] += f * row[b]
  void add_row(std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += f * (*this)(b, j);
  }
  void add_col(std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += f * (*this)(i, b);
  }
  void scale_row(std::size_t i, const Int& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= f;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix multiply: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("IntMatrix subtract: shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

// row vector * matrix
inline std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat: shape mismatch");
  std::vector<Int> r(m.cols(), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Dense matrix over exact rationals, entries kept in lowest terms by cpp_rational.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::vector<Rat> row(std::size_t i) const {
    return std::vector<Rat>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  bool is_integral() const {
    for (const auto& v : data_)
      if (rat_den(v) != 1) return false;
    return true;
  }

  IntMatrix to_int() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rat_den((*this)(i, j)) != 1)
          throw std::domain_error("RatMatrix::to_int: non-integral entry");
        m(i, j) = rat_num((*this)(i, j));
      }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RatMatrix multiply: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline std::vector<Rat> vec_mat(const std::vector<Rat>& v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat: shape mismatch");
  std::vector<Rat> r(m.cols(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

inline std::vector<Rat> vec_mat(const std::vector<Rat>& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat: shape mismatch");
  std::vector<Rat> r(m.cols(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * Rat(m(i, j));
  }
  return r;
}

}  // namespace oglat

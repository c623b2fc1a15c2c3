#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "soscert/rational.hpp"

namespace soscert {

using QVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Sizes here are desk-scale
/// (quotient dimensions, Macaulay blocks), so plain Gaussian elimination is used.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rational& s) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& o) const = default;

  std::size_t rank() const;
  Rational determinant() const;
  /// Columns form a basis of the right null space.
  QMatrix nullspace() const;
  /// Some x with A x = b, or nullopt when inconsistent.
  std::optional<QVector> solve(const QVector& b) const;
  std::optional<QMatrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace soscert

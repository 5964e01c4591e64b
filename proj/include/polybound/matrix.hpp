#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polybound/rational.hpp"

namespace polybound {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> init);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;

  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact solution of A x = b, free variables pinned to 0; nullopt if the
/// system is inconsistent.
std::optional<Vector> solve_linear_system(const Matrix& a, const Vector& b);

std::size_t rank(Matrix a);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Basis of the right null space {x : A x = 0}.
std::vector<Vector> null_space(const Matrix& a);

/// Dimension of the affine hull of a point set; -1 for the empty set.
int affine_dimension(std::span<const Vector> points);

}  // namespace polybound

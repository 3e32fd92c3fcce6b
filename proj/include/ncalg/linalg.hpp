#pragma once

#include <cstddef>
#include <vector>

#include "ncalg/field.hpp"

namespace ncalg {

/// Dense matrix over a Field, row-major.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& x) { data_[i * cols_ + j] = x; }
  void add(std::size_t i, std::size_t j, const Scalar& x);

  /// Rank by Gaussian elimination; residue arithmetic in characteristic p.
  std::size_t rank() const;
  Matrix multiply(const Matrix& other) const;
  bool is_zero() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace ncalg

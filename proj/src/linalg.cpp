#include "ncalg/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "ncalg/error.hpp"

namespace ncalg {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

void Matrix::add(std::size_t i, std::size_t j, const Scalar& x) {
  Scalar& s = data_[i * cols_ + j];
  s = field_.add(s, x);
}

namespace {

std::size_t rank_mod_p(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols,
                       std::int64_t p) {
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1;
    std::int64_t e = p - 2;
    x %= p;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    const std::int64_t f = inv(a[rank * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = a[rank * cols + j] * f % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const std::int64_t m = a[i * cols + c];
      if (m == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = ((a[i * cols + j] - m * a[rank * cols + j]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(std::vector<mpq_class> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i * cols + c] == 0) continue;
      const mpq_class m = a[i * cols + c] / a[rank * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= m * a[rank * cols + j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  if (field_.is_prime_field()) {
    std::vector<std::int64_t> a(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) a[i] = data_[i].residue();
    return rank_mod_p(std::move(a), rows_, cols_, field_.characteristic());
  }
  std::vector<mpq_class> a(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) a[i] = data_[i].rational();
  return rank_rational(std::move(a), rows_, cols_);
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix shapes do not compose");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (field_.is_zero(x)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& y = other.at(k, j);
        if (!field_.is_zero(y)) out.add(i, j, field_.mul(x, y));
      }
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const Scalar& x) { return field_.is_zero(x); });
}

}  // namespace ncalg

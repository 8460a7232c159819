#pragma once

#include <string>
#include <vector>

#include "koszulkit/groebner.hpp"
#include "koszulkit/poly.hpp"

namespace koszulkit {

// Dense matrix over a polynomial ring, stored by columns. A matrix R^cols -> R^rows.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingHandle ring, std::size_t rows, std::size_t cols);
  Matrix(RingHandle ring, std::size_t rows, std::vector<Column> columns);

  static Matrix identity(RingHandle ring, std::size_t n);
  // Square matrix multiplying by `f` on every coordinate.
  static Matrix scalar(RingHandle ring, std::size_t n, const Poly& f);
  // Single row [f_1 .. f_k].
  static Matrix row(RingHandle ring, const std::vector<Poly>& entries);

  const RingHandle& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Poly& at(std::size_t i, std::size_t j) const { return cols_[j][i]; }
  void set(std::size_t i, std::size_t j, Poly p) { cols_[j][i] = std::move(p); }
  const Column& column(std::size_t j) const { return cols_[j]; }
  const std::vector<Column>& columns() const { return cols_; }
  void append_column(Column c);

  bool is_zero() const;
  Matrix operator*(const Matrix& o) const;
  Column apply(const Column& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-() const;
  Matrix transpose() const;
  Matrix scaled(const Poly& f) const;
  // Columns of *this followed by columns of o.
  Matrix hconcat(const Matrix& o) const;
  Matrix vconcat(const Matrix& o) const;
  Matrix block_diag(const Matrix& o) const;
  // Kronecker products A ⊗ I_n and I_n ⊗ A (coordinates (i, k) -> i * n + k).
  Matrix kron_identity(std::size_t n) const;
  Matrix identity_kron(std::size_t n) const;
  Matrix select_rows(const std::vector<std::size_t>& keep) const;
  Matrix select_cols(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  // "[x, y; 0, x^2]", rows separated by ';'.
  std::string to_string() const;

 private:
  RingHandle ring_;
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

Column zero_column(const RingHandle& ring, std::size_t n);
Column unit_column(const RingHandle& ring, std::size_t n, std::size_t i);
bool is_zero_column(const Column& c);

}  // namespace koszulkit

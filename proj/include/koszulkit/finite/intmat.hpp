#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace koszulkit::finite {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

// Overflow-checked arithmetic; throws Error on overflow.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
// Representative in [0, m).
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& columns);
  static IntMatrix diagonal(const IntVec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec column(std::size_t j) const;
  IntVec apply(const IntVec& x) const;
  IntMatrix operator*(const IntMatrix& b) const;
  IntMatrix operator+(const IntMatrix& b) const;
  IntMatrix transpose() const;
  // [A | B]
  IntMatrix hconcat(const IntMatrix& b) const;
  // Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

// E = A V with V unimodular and E in column echelon form: column k < rank has
// its first nonzero entry (positive) in row pivot_rows[k], strictly increasing.
struct ColumnEchelon {
  IntMatrix E;
  IntMatrix V;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
  // Z-basis of { x : A x = 0 }.
  std::vector<IntVec> kernel() const;
  // Some x with A x = b.
  std::optional<IntVec> solve(const IntVec& b) const;
};
ColumnEchelon column_echelon(const IntMatrix& A);

// U A V = diag(d) with U unimodular; only the row transform is tracked.
// `diagonal` has min(rows, cols) entries, each dividing the next (zeros last).
struct SmithForm {
  IntVec diagonal;
  IntMatrix U;
  IntMatrix U_inverse;
};
SmithForm smith_form(const IntMatrix& A);

}  // namespace koszulkit::finite

#include "koszulkit/finite/intmat.hpp"

#include <cstdlib>
#include <utility>

#include "koszulkit/error.hpp"

namespace koszulkit::finite {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in finite-ring linear algebra");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in finite-ring linear algebra");
  return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVec>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  if (x.size() != cols_) throw Error("matrix-vector size mismatch");
  IntVec y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j] != 0 && (*this)(i, j) != 0) s = checked_add(s, checked_mul((*this)(i, j), x[j]));
    }
    y[i] = s;
  }
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& b) const {
  if (cols_ != b.rows_) throw Error("matrix product size mismatch");
  IntMatrix c(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int v = (*this)(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) c(i, j) = checked_add(c(i, j), checked_mul(v, b(k, j)));
      }
    }
  }
  return c;
}

IntMatrix IntMatrix::operator+(const IntMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("matrix sum size mismatch");
  IntMatrix c(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) c.a_[k] = checked_add(a_[k], b.a_[k]);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& b) const {
  if (rows_ != b.rows_) throw Error("hconcat row mismatch");
  IntMatrix c(rows_, cols_ + b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) c(i, cols_ + j) = b(i, j);
  }
  return c;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix c(count, cols_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(first + i, j);
  }
  return c;
}

bool IntMatrix::is_zero() const {
  for (Int v : a_) {
    if (v != 0) return false;
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += " ";
      s += std::to_string((*this)(i, j));
    }
  }
  return s + "]";
}

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// col_dst -= q * col_src
void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, src) != 0) m(i, dst) = checked_add(m(i, dst), -checked_mul(q, m(i, src)));
  }
}

// row_dst -= q * row_src
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(src, j) != 0) m(dst, j) = checked_add(m(dst, j), -checked_mul(q, m(src, j)));
  }
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& A) {
  ColumnEchelon ce{A, IntMatrix::identity(A.cols()), {}};
  IntMatrix& E = ce.E;
  IntMatrix& V = ce.V;
  std::size_t p = 0;
  for (std::size_t r = 0; r < E.rows() && p < E.cols(); ++r) {
    while (true) {
      std::size_t best = E.cols();
      for (std::size_t j = p; j < E.cols(); ++j) {
        if (E(r, j) != 0 && (best == E.cols() || std::llabs(E(r, j)) < std::llabs(E(r, best)))) best = j;
      }
      if (best == E.cols()) break;
      swap_columns(E, p, best);
      swap_columns(V, p, best);
      bool clean = true;
      for (std::size_t j = p + 1; j < E.cols(); ++j) {
        if (E(r, j) == 0) continue;
        const Int q = E(r, j) / E(r, p);
        axpy_column(E, j, p, q);
        axpy_column(V, j, p, q);
        if (E(r, j) != 0) clean = false;
      }
      if (!clean) continue;
      if (E(r, p) < 0) {
        for (std::size_t i = 0; i < E.rows(); ++i) E(i, p) = -E(i, p);
        for (std::size_t i = 0; i < V.rows(); ++i) V(i, p) = -V(i, p);
      }
      ce.pivot_rows.push_back(r);
      ++p;
      break;
    }
  }
  return ce;
}

std::vector<IntVec> ColumnEchelon::kernel() const {
  std::vector<IntVec> out;
  for (std::size_t j = rank(); j < V.cols(); ++j) out.push_back(V.column(j));
  return out;
}

std::optional<IntVec> ColumnEchelon::solve(const IntVec& b) const {
  if (b.size() != E.rows()) throw Error("solve: right-hand side length mismatch");
  IntVec u(E.cols(), 0);
  std::size_t k = 0;
  for (std::size_t r = 0; r < E.rows(); ++r) {
    Int s = b[r];
    for (std::size_t j = 0; j < k; ++j) {
      if (E(r, j) != 0 && u[j] != 0) s = checked_add(s, -checked_mul(E(r, j), u[j]));
    }
    if (k < rank() && pivot_rows[k] == r) {
      if (s % E(r, k) != 0) return std::nullopt;
      u[k] = s / E(r, k);
      ++k;
    } else if (s != 0) {
      return std::nullopt;
    }
  }
  return V.apply(u);
}

SmithForm smith_form(const IntMatrix& A) {
  IntMatrix D = A;
  const std::size_t m = D.rows();
  const std::size_t n = D.cols();
  SmithForm sf{{}, IntMatrix::identity(m), IntMatrix::identity(m)};
  auto row_swap = [&](std::size_t a, std::size_t b) {
    swap_rows(D, a, b);
    swap_rows(sf.U, a, b);
    swap_columns(sf.U_inverse, a, b);
  };
  // row_dst -= q row_src
  auto row_sub = [&](std::size_t dst, std::size_t src, Int q) {
    axpy_row(D, dst, src, q);
    axpy_row(sf.U, dst, src, q);
    axpy_column(sf.U_inverse, src, dst, -q);
  };
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (D(i, j) != 0 && (bi == m || std::llabs(D(i, j)) < std::llabs(D(bi, bj)))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == m) break;
    row_swap(t, bi);
    swap_columns(D, t, bj);
    while (true) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) != 0) row_sub(i, t, D(i, t) / D(t, t));
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) != 0) axpy_column(D, j, t, D(t, j) / D(t, t));
      }
      // Smallest leftover in row t or column t becomes the new pivot.
      std::size_t ri = m, cj = n;
      Int best = 0;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) != 0 && (best == 0 || std::llabs(D(i, t)) < best)) {
          best = std::llabs(D(i, t));
          ri = i;
          cj = n;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) != 0 && (best == 0 || std::llabs(D(t, j)) < best)) {
          best = std::llabs(D(t, j));
          cj = j;
          ri = m;
        }
      }
      if (ri != m) {
        row_swap(t, ri);
        continue;
      }
      if (cj != n) {
        swap_columns(D, t, cj);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      row_sub(t, bad, -1);
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) sf.U(t, j) = -sf.U(t, j);
      for (std::size_t i = 0; i < m; ++i) sf.U_inverse(i, t) = -sf.U_inverse(i, t);
    }
  }
  sf.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) sf.diagonal[t] = D(t, t);
  return sf;
}

}  // namespace koszulkit::finite

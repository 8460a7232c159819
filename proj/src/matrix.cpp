#include "koszulkit/matrix.hpp"

#include "koszulkit/error.hpp"

namespace koszulkit {

Column zero_column(const RingHandle& ring, std::size_t n) { return Column(n, Poly(ring)); }

Column unit_column(const RingHandle& ring, std::size_t n, std::size_t i) {
  Column c = zero_column(ring, n);
  c[i] = Poly::from_int(ring, 1);
  return c;
}

bool is_zero_column(const Column& c) {
  for (const auto& p : c) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Matrix::Matrix(RingHandle ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols, zero_column(ring_, rows)) {}

Matrix::Matrix(RingHandle ring, std::size_t rows, std::vector<Column> columns)
    : ring_(std::move(ring)), rows_(rows), cols_(std::move(columns)) {
  for (auto& c : cols_) {
    if (c.size() != rows_) throw Error("matrix column has the wrong length");
    for (auto& p : c) {
      if (p.ring()) {
        require_same_ring(ring_, p.ring());
      } else {
        p = Poly(ring_);
      }
    }
  }
}

Matrix Matrix::identity(RingHandle ring, std::size_t n) {
  return scalar(ring, n, Poly::from_int(ring, 1));
}

Matrix Matrix::scalar(RingHandle ring, std::size_t n, const Poly& f) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i][i] = f;
  return m;
}

Matrix Matrix::row(RingHandle ring, const std::vector<Poly>& entries) {
  Matrix m(ring, 1, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) m.cols_[j][0] = entries[j];
  return m;
}

void Matrix::append_column(Column c) {
  if (c.size() != rows_) throw Error("matrix column has the wrong length");
  cols_.push_back(std::move(c));
}

bool Matrix::is_zero() const {
  for (const auto& c : cols_) {
    if (!is_zero_column(c)) return false;
  }
  return true;
}

Column Matrix::apply(const Column& v) const {
  if (v.size() != cols_.size()) throw Error("matrix-vector size mismatch");
  Column out = zero_column(ring_, rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!cols_[j][i].is_zero()) out[i] += cols_[j][i] * v[j];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_.size() != o.rows_) throw Error("matrix product size mismatch");
  Matrix out(ring_, rows_, 0);
  for (const auto& c : o.cols_) out.cols_.push_back(apply(c));
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols()) throw Error("matrix sum size mismatch");
  Matrix out = *this;
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t i = 0; i < rows_; ++i) out.cols_[j][i] += o.cols_[j][i];
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& c : out.cols_) {
    for (auto& p : c) p = -p;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t i = 0; i < rows_; ++i) out.cols_[i][j] = cols_[j][i];
  }
  return out;
}

Matrix Matrix::scaled(const Poly& f) const {
  Matrix out = *this;
  for (auto& c : out.cols_) {
    for (auto& p : c) p = p * f;
  }
  return out;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw Error("hconcat row mismatch");
  Matrix out = *this;
  out.cols_.insert(out.cols_.end(), o.cols_.begin(), o.cols_.end());
  return out;
}

Matrix Matrix::vconcat(const Matrix& o) const {
  if (cols() != o.cols()) throw Error("vconcat column mismatch");
  Matrix out(ring_, rows_ + o.rows_, 0);
  for (std::size_t j = 0; j < cols(); ++j) {
    Column c = cols_[j];
    c.insert(c.end(), o.cols_[j].begin(), o.cols_[j].end());
    out.cols_.push_back(std::move(c));
  }
  return out;
}

Matrix Matrix::block_diag(const Matrix& o) const {
  Matrix out(ring_, rows_ + o.rows_, 0);
  for (const auto& c : cols_) {
    Column col = c;
    col.resize(rows_ + o.rows_, Poly(ring_));
    out.cols_.push_back(std::move(col));
  }
  for (const auto& c : o.cols_) {
    Column col = zero_column(ring_, rows_);
    col.insert(col.end(), c.begin(), c.end());
    out.cols_.push_back(std::move(col));
  }
  return out;
}

Matrix Matrix::kron_identity(std::size_t n) const {
  Matrix out(ring_, rows_ * n, cols() * n);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (cols_[j][i].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out.cols_[j * n + k][i * n + k] = cols_[j][i];
    }
  }
  return out;
}

Matrix Matrix::identity_kron(std::size_t n) const {
  Matrix out(ring_, rows_ * n, cols() * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < cols(); ++j) {
      for (std::size_t i = 0; i < rows_; ++i) out.cols_[k * cols() + j][k * rows_ + i] = cols_[j][i];
    }
  }
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& keep) const {
  Matrix out(ring_, keep.size(), 0);
  for (const auto& c : cols_) {
    Column col;
    col.reserve(keep.size());
    for (std::size_t i : keep) col.push_back(c[i]);
    out.cols_.push_back(std::move(col));
  }
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& keep) const {
  Matrix out(ring_, rows_, 0);
  for (std::size_t j : keep) out.cols_.push_back(cols_[j]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) out += ", ";
      out += cols_[j][i].to_string();
    }
  }
  return out + "]";
}

}  // namespace koszulkit

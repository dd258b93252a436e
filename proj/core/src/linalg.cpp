#include "galtrop/linalg.hpp"

#include "galtrop/errors.hpp"

namespace galtrop {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

QMatrix::QMatrix(const IntMatrix& m) : QMatrix(m.rows(), m.cols()) {
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = m(r, c);
  }
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<RationalVector>& cols, int rows) {
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw MalformedInput("column length mismatch");
    for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RationalVector QMatrix::column(int c) const {
  RationalVector out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

QMatrix QMatrix::rref(std::vector<int>* pivots) const {
  QMatrix a = *this;
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int r = row; r < rows_; ++r) {
      if (a(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < cols_; ++c) std::swap(a(sel, c), a(row, c));
    }
    const Rational inv = 1 / a(row, col);
    for (int c = col; c < cols_; ++c) {
      if (a(row, c) != 0) a(row, c) *= inv;
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (int c = col; c < cols_; ++c) {
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
      }
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

int QMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

QMatrix QMatrix::kernel_basis() const {
  std::vector<int> piv;
  const QMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return from_columns(basis, cols_);
}

std::optional<QMatrix> QMatrix::solve(const QMatrix& rhs) const {
  if (rhs.rows_ != rows_) throw MalformedInput("dimension mismatch in solve");
  std::vector<int> piv;
  const QMatrix r = hstack(rhs).rref(&piv);
  QMatrix x(cols_, rhs.cols_);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= cols_) return std::nullopt;  // pivot in the augmented block
    for (int c = 0; c < rhs.cols_; ++c) x(piv[i], c) = r(static_cast<int>(i), cols_ + c);
  }
  return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (rank() != rows_) return std::nullopt;
  return solve(identity(rows_));
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool QMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool QMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

QMatrix QMatrix::power(unsigned e) const {
  QMatrix result = identity(rows_);
  QMatrix base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RationalVector QMatrix::apply(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw MalformedInput("dimension mismatch in apply");
  RationalVector out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

QMatrix QMatrix::hstack(const QMatrix& right) const {
  if (right.rows_ != rows_) throw MalformedInput("row mismatch in hstack");
  QMatrix out(rows_, cols_ + right.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (int c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw MalformedInput("dimension mismatch in matrix product");
  QMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MalformedInput("shape mismatch");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << to_string(m(r, c));
    os << "]";
  }
  return os << "]";
}

std::optional<RationalVector> coordinates_in(const QMatrix& basis, const RationalVector& v) {
  QMatrix rhs(static_cast<int>(v.size()), 1);
  for (int i = 0; i < rhs.rows(); ++i) rhs(i, 0) = v[i];
  auto x = basis.solve(rhs);
  if (!x) return std::nullopt;
  return x->column(0);
}

}  // namespace galtrop

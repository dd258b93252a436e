#include "galtrop/lattice.hpp"

#include <numeric>

#include "galtrop/errors.hpp"
#include "galtrop/linalg.hpp"

namespace galtrop {

long gcd_of(std::span<const long> v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

bool is_primitive(std::span<const long> v) { return gcd_of(v) == 1; }

IntVector primitive_of(std::span<const long> v) {
  const long g = gcd_of(v);
  IntVector out(v.begin(), v.end());
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

IntVector primitive_direction(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  IntVector scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) {
    const Integer n = x.get_num() * (lcm_den / x.get_den());
    if (!n.fits_slong_p()) throw MalformedInput("direction does not fit a machine integer");
    scaled.push_back(n.get_si());
  }
  return primitive_of(scaled);
}

long dot(std::span<const long> u, std::span<const long> v) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Rational dot(std::span<const long> u, std::span<const Rational> v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) s += u[i] * v[i];
  }
  return s;
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw MalformedInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw MalformedInput("row length mismatch");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, int rows) {
  return from_rows(cols, rows).transpose();
}

IntVector IntMatrix::row(int r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                   data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

IntVector IntMatrix::column(int c) const {
  IntVector out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw MalformedInput("determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  const int n = rows_;
  if (n == 0) return 1;
  std::vector<Integer> a(data_.begin(), data_.end());
  auto at = [&](int r, int c) -> Integer& { return a[static_cast<std::size_t>(r) * n + c]; };
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
  if (rows_ != cols_) return false;
  const Integer d = determinant();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse() const {
  if (!is_unimodular()) throw MalformedInput("matrix is not invertible over Z");
  const auto inv = QMatrix(*this).inverse();
  IntMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*inv)(r, c).get_num().get_si();
  }
  return out;
}

IntMatrix IntMatrix::power(unsigned e) const {
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntVector IntMatrix::apply(std::span<const long> v) const {
  if (static_cast<int>(v.size()) != cols_) throw MalformedInput("dimension mismatch in apply");
  IntVector out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

RationalVector IntMatrix::apply(std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != cols_) throw MalformedInput("dimension mismatch in apply");
  RationalVector out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw MalformedInput("dimension mismatch in matrix product");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const long x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << "]";
  }
  return os << "]";
}

LatticeMap::LatticeMap(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw MalformedInput("lattice map must be square");
}

}  // namespace galtrop

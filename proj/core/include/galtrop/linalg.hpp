#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "galtrop/lattice.hpp"
#include "galtrop/rational.hpp"

namespace galtrop {

/// Dense matrix over Q with exact Gaussian elimination.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  explicit QMatrix(const IntMatrix& m);
  static QMatrix identity(int n);
  static QMatrix from_columns(const std::vector<RationalVector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  RationalVector column(int c) const;

  QMatrix transpose() const;
  int rank() const;
  /// Columns form a basis of the null space.
  QMatrix kernel_basis() const;
  /// Reduced row echelon form; pivot columns returned through `pivots`.
  QMatrix rref(std::vector<int>* pivots = nullptr) const;
  /// Some X with (*this)·X = rhs, or nullopt when inconsistent.
  std::optional<QMatrix> solve(const QMatrix& rhs) const;
  std::optional<QMatrix> inverse() const;
  Rational trace() const;
  bool is_identity() const;
  bool is_zero() const;
  QMatrix power(unsigned e) const;

  RationalVector apply(const RationalVector& v) const;
  QMatrix hstack(const QMatrix& right) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

/// Coordinates of v in the basis given by the columns of `basis`, if v lies in their span.
std::optional<RationalVector> coordinates_in(const QMatrix& basis, const RationalVector& v);

}  // namespace galtrop

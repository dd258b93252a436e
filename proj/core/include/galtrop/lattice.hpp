#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "galtrop/rational.hpp"

namespace galtrop {

using IntVector = std::vector<long>;

long gcd_of(std::span<const long> v);
bool is_primitive(std::span<const long> v);
/// v divided by the gcd of its entries; zero stays zero.
IntVector primitive_of(std::span<const long> v);
/// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive_direction(std::span<const Rational> v);

long dot(std::span<const long> u, std::span<const long> v);
Rational dot(std::span<const long> u, std::span<const Rational> v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, int cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  long operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  IntVector row(int r) const;
  IntVector column(int c) const;

  IntMatrix transpose() const;
  Integer determinant() const;
  bool is_unimodular() const;
  /// Integer inverse; throws MalformedInput unless unimodular.
  IntMatrix inverse() const;
  IntMatrix power(unsigned e) const;

  IntVector apply(std::span<const long> v) const;
  RationalVector apply(std::span<const Rational> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Square integer matrix read as an endomorphism of the cocharacter lattice N.
class LatticeMap {
 public:
  LatticeMap() = default;
  explicit LatticeMap(IntMatrix matrix);
  static LatticeMap identity(int rank) { return LatticeMap(IntMatrix::identity(rank)); }

  int rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(std::span<const long> v) const { return matrix_.apply(v); }
  RationalVector apply(std::span<const Rational> v) const { return matrix_.apply(v); }
  LatticeMap transpose() const { return LatticeMap(matrix_.transpose()); }
  LatticeMap inverse() const { return LatticeMap(matrix_.inverse()); }
  bool is_unimodular() const { return matrix_.is_unimodular(); }

  /// Plain matrix product (a then b reads right to left: (a*b)(v) = a(b(v))).
  friend LatticeMap operator*(const LatticeMap& a, const LatticeMap& b) {
    return LatticeMap(a.matrix_ * b.matrix_);
  }
  friend bool operator==(const LatticeMap& a, const LatticeMap& b) = default;

 private:
  IntMatrix matrix_;
};

}  // namespace galtrop

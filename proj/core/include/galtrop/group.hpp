#pragma once

#include <vector>

namespace galtrop {

/// Finite group given by an explicit multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates identity, inverses and associativity.
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> generators);

  /// Z/m_1 × ... × Z/m_r with the standard generators. Element indices are
  /// mixed-radix encodings of exponent tuples, first factor fastest.
  static FiniteGroup cyclic_product(const std::vector<int>& orders);
  static FiniteGroup trivial() { return cyclic_product({}); }

  int size() const { return static_cast<int>(table_.size()); }
  int identity() const { return 0; }
  int multiply(int a, int b) const { return table_.at(a).at(b); }
  int inverse(int a) const { return inverses_.at(a); }
  int power(int a, long e) const;
  int order_of(int a) const;
  const std::vector<int>& generators() const { return generators_; }

  /// Factor orders when built by cyclic_product, empty otherwise.
  const std::vector<int>& cyclic_orders() const { return orders_; }
  /// Exponent tuple of an element of a cyclic product.
  std::vector<int> exponents(int element) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> generators_;
  std::vector<int> inverses_;
  std::vector<int> orders_;
};

}  // namespace galtrop

#pragma once

#include <ostream>
#include <vector>

#include "galtrop/rational.hpp"

namespace galtrop {

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial.
const std::vector<Integer>& cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Element of Q(ζ_N), stored as a polynomial in ζ_N of degree < φ(N).
///
/// ζ_N is the primitive root e^{2πi/N}; an element at level N embeds at level
/// mN through ζ_N = ζ_{mN}^m, so the roots are compatible across levels.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int level);
  /// Any-length polynomial in ζ_N; reduced modulo Φ_N.
  Cyclotomic(int level, std::vector<Rational> poly);

  static Cyclotomic from_rational(int level, const Rational& q);
  /// ζ_N^k for any integer k.
  static Cyclotomic zeta_power(int level, long k);

  int level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;

  /// Same number viewed in Q(ζ_{new_level}); new_level must be a multiple of level().
  Cyclotomic at_level(int new_level) const;
  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  void align_with(Cyclotomic& other);

  int level_;
  std::vector<Rational> coeffs_;
};

int lcm_level(int a, int b);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace galtrop

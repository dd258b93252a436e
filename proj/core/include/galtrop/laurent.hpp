#pragma once

#include <map>
#include <ostream>
#include <span>

#include "galtrop/lattice.hpp"
#include "galtrop/puiseux.hpp"
#include "galtrop/twist.hpp"

namespace galtrop {

/// Laurent polynomial Σ a_u χ^u in K[M] with Puiseux coefficients.
/// All coefficients are kept at one common level.
class LaurentPolynomial {
 public:
  using TermMap = std::map<IntVector, PuiseuxSeries>;

  explicit LaurentPolynomial(int rank = 0) : rank_(rank) {}
  LaurentPolynomial(int rank, TermMap terms);

  static LaurentPolynomial monomial(IntVector exponent, PuiseuxSeries coeff);
  static LaurentPolynomial constant(int rank, PuiseuxSeries coeff);
  static LaurentPolynomial variable(int rank, int index);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  int level() const { return level_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPolynomial at_level(int new_level) const;

  /// Value at a point of the torus. Negative exponents need monomial coordinates.
  PuiseuxSeries evaluate(std::span<const PuiseuxSeries> point) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const PuiseuxSeries& scalar);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const PuiseuxSeries& s) { return a *= s; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void normalize_level();

  int rank_;
  int level_ = 1;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f);

/// galois_twist applied to every coefficient (the canonical action, exponents fixed).
LaurentPolynomial twist_coefficients(long k, const LaurentPolynomial& f, int level);

/// a_u χ^u ↦ galois_twist(k_g, a_u) χ^{A_g^T u}.
LaurentPolynomial act_on_laurent(const TwistedToricVariety& twist, int g,
                                 const LaurentPolynomial& f);

/// Every generator maps f to a unit multiple c·χ^w·f, c ∈ Q(ζ_N)^×, so V(f) ⊂ T is invariant.
bool is_invariant_hypersurface(const TwistedToricVariety& twist, const LaurentPolynomial& f);

}  // namespace galtrop

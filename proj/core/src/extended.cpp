#include "galtrop/extended.hpp"

#include <algorithm>

#include "galtrop/errors.hpp"

namespace galtrop {

TropPoint TropPoint::interior(RationalVector coords) {
  TropPoint p;
  p.coords_ = std::move(coords);
  return p;
}

TropPoint TropPoint::on_stratum(const Fan& fan, int cone, std::span<const Rational> v) {
  if (cone < 0 || cone >= static_cast<int>(fan.cones().size())) {
    throw MalformedInput("sedentarity cone index out of range");
  }
  TropPoint p;
  p.sedentarity_ = cone;
  p.coords_ = fan.canonical_representative(cone, v);
  return p;
}

std::strong_ordering operator<=>(const TropPoint& a, const TropPoint& b) {
  if (auto c = a.sedentarity_ <=> b.sedentarity_; c != 0) return c;
  if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const TropPoint& p) {
  os << "{sed=" << p.sedentarity() << ", (";
  for (std::size_t i = 0; i < p.coords().size(); ++i) os << (i ? "," : "") << to_string(p.coords()[i]);
  return os << ")}";
}

TropPoint act_on_trop_point(const TwistedToricVariety& twist, int g, const TropPoint& p) {
  const LatticeMap& a = twist.action(g);
  const RationalVector moved = a.apply(std::span<const Rational>(p.coords()));
  if (p.is_interior()) return TropPoint::interior(moved);
  auto image = map_cone(a, twist.fan(), p.sedentarity());
  if (!image) throw PreconditionError("action does not preserve the point's stratum");
  return TropPoint::on_stratum(twist.fan(), *image, moved);
}

TropPoint compactify_ray(std::span<const Rational> basepoint, std::span<const long> direction,
                         const Fan& fan) {
  if (std::all_of(direction.begin(), direction.end(), [](long x) { return x == 0; })) {
    throw PreconditionError("ray direction must be nonzero");
  }
  const int cone = cone_of_point(direction, fan);
  return TropPoint::on_stratum(fan, cone, basepoint);
}

RationalVector tropical_monomial_map(const IntMatrix& exponents, const TropPoint& p) {
  if (!p.is_interior()) {
    throw PreconditionError("tropical monomial maps are only evaluated at interior points");
  }
  if (exponents.cols() != static_cast<int>(p.coords().size())) {
    throw MalformedInput("exponent matrix width does not match the point");
  }
  return exponents.apply(std::span<const Rational>(p.coords()));
}

IntMatrix segre_exponents(int n1, int n2) {
  IntMatrix m((n1 + 1) * (n2 + 1), n1 + n2);
  int row = 0;
  for (int i = n1; i >= 0; --i) {
    for (int j = n2; j >= 0; --j) {
      if (i > 0) m(row, i - 1) = 1;
      if (j > 0) m(row, n1 + j - 1) = 1;
      ++row;
    }
  }
  return m;
}

}  // namespace galtrop

#include "galtrop/groebner.hpp"

#include "galtrop/errors.hpp"

namespace galtrop {

std::set<IntVector> groebner_cell(const LaurentPolynomial& f, std::span<const Rational> v) {
  if (static_cast<int>(v.size()) != f.rank()) throw PreconditionError("weight vector has wrong rank");
  std::set<IntVector> best;
  std::optional<Rational> best_value;
  for (const auto& [u, a] : f.terms()) {
    const Rational value = a.valuation().value() + dot(u, v);
    if (!best_value || value < *best_value) {
      best_value = value;
      best.clear();
    }
    if (value == *best_value) best.insert(u);
  }
  return best;
}

std::set<IntVector> map_groebner_cell(const TwistedToricVariety& twist, int g,
                                      const std::set<IntVector>& cell) {
  const LatticeMap inv_t = twist.action(g).transpose().inverse();
  std::set<IntVector> out;
  for (const auto& u : cell) out.insert(inv_t.apply(std::span<const long>(u)));
  return out;
}

}  // namespace galtrop

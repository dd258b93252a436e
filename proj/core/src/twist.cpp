#include "galtrop/twist.hpp"

#include <sstream>

#include "galtrop/errors.hpp"

namespace galtrop {

std::vector<LatticeMap> TwistedToricVariety::generator_matrices() const {
  std::vector<LatticeMap> out;
  for (int g : group_.generators()) out.push_back(action_[g]);
  return out;
}

std::vector<long> TwistedToricVariety::generator_residues() const {
  std::vector<long> out;
  for (int g : group_.generators()) out.push_back(residues_[g]);
  return out;
}

TwistedToricVariety make_twist(Fan fan, std::vector<LatticeMap> generators,
                               std::vector<int> orders, std::vector<long> residues, int level) {
  if (generators.size() != orders.size()) {
    throw InvalidTwist("need one cyclic order per generator");
  }
  if (residues.empty()) residues.assign(generators.size(), 0);
  if (residues.size() != generators.size()) throw InvalidTwist("need one residue per generator");
  if (level < 1) throw InvalidTwist("Puiseux level must be positive");

  const int n = fan.rank();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const LatticeMap& a = generators[i];
    if (a.rank() != n) throw InvalidTwist("generator " + std::to_string(i) + " has wrong size");
    try {
      if (!is_fan_automorphism(a, fan)) {
        throw InvalidTwist("generator " + std::to_string(i) + " does not preserve the fan");
      }
    } catch (const MalformedInput& e) {
      throw InvalidTwist("generator " + std::to_string(i) + ": " + e.what());
    }
    if (orders[i] < 1) throw InvalidTwist("cyclic order must be positive");
    if (!(a.matrix().power(static_cast<unsigned>(orders[i])) == IntMatrix::identity(n))) {
      std::ostringstream msg;
      msg << "generator " << i << " raised to " << orders[i] << " is not the identity";
      throw InvalidTwist(msg.str());
    }
    if ((static_cast<long>(orders[i]) * residues[i]) % level != 0) {
      throw InvalidTwist("residue of generator " + std::to_string(i) +
                         " is incompatible with its order at this level");
    }
  }

  TwistedToricVariety t;
  t.fan_ = std::move(fan);
  t.group_ = FiniteGroup::cyclic_product(orders);
  t.level_ = level;
  const int size = t.group_.size();
  t.action_.reserve(size);
  t.residues_.reserve(size);
  for (int g = 0; g < size; ++g) {
    const auto e = t.group_.exponents(g);
    IntMatrix m = IntMatrix::identity(n);
    long k = 0;
    // g = a_1^{e_1} ... a_r^{e_r}; right action reverses the product.
    for (std::size_t i = 0; i < e.size(); ++i) {
      m = generators[i].matrix().power(static_cast<unsigned>(e[i])) * m;
      k += e[i] * residues[i];
    }
    t.action_.emplace_back(m);
    t.residues_.push_back(((k % level) + level) % level);
  }
  for (int g = 0; g < size; ++g) {
    for (int h = 0; h < size; ++h) {
      if (!(t.action_[t.group_.multiply(g, h)] == t.action_[h] * t.action_[g])) {
        throw InvalidTwist("generator matrices do not commute");
      }
    }
  }
  return t;
}

TwistedToricVariety trivial_twist(Fan fan, int level) {
  return make_twist(std::move(fan), {}, {}, {}, level);
}

LatticeMap dual_character_action(const TwistedToricVariety& twist, int g) {
  return twist.action(g).transpose();
}

}  // namespace galtrop

#pragma once

#include <vector>

#include "galtrop/fan.hpp"
#include "galtrop/group.hpp"
#include "galtrop/lattice.hpp"

namespace galtrop {

/// A fan with a right action of a finite group by fan automorphisms, plus the
/// residue k_g ∈ Z/N through which each element acts on Puiseux coefficients.
///
/// Right-action convention: action(g·h) == action(h) * action(g).
class TwistedToricVariety {
 public:
  const Fan& fan() const { return fan_; }
  const FiniteGroup& group() const { return group_; }
  const LatticeMap& action(int g) const { return action_.at(g); }
  long residue(int g) const { return residues_.at(g); }
  int level() const { return level_; }
  bool is_trivial() const { return group_.size() == 1; }

  /// Matrices and residues of the generators, in generator order.
  std::vector<LatticeMap> generator_matrices() const;
  std::vector<long> generator_residues() const;

 private:
  friend TwistedToricVariety make_twist(Fan, std::vector<LatticeMap>, std::vector<int>,
                                        std::vector<long>, int);
  Fan fan_;
  FiniteGroup group_ = FiniteGroup::trivial();
  std::vector<LatticeMap> action_;
  std::vector<long> residues_;
  int level_ = 1;
};

/// Expands generator data for Z/m_1 × ... × Z/m_r into a full twist.
/// Throws InvalidTwist when a generator is not a fan automorphism, when
/// A^m != I, when m·k != 0 mod N, or when the generators do not commute.
TwistedToricVariety make_twist(Fan fan, std::vector<LatticeMap> generators,
                               std::vector<int> orders, std::vector<long> residues = {},
                               int level = 1);

TwistedToricVariety trivial_twist(Fan fan, int level = 1);

/// Transpose of the N-action: how g moves exponent vectors in M.
LatticeMap dual_character_action(const TwistedToricVariety& twist, int g);

}  // namespace galtrop

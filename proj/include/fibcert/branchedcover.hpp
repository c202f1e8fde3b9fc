#pragma once

// The Z/2 branched double cover p: S_6 -> S_3, branched over an orbit
// {b, b'} of the free involution: lifted classes, the deck action sigma,
// the +1/-1 eigenspace split, transfer maps, and the homology action of
// lifted squared point-pushes in both of its possible forms.

#include <string>
#include <vector>

#include <json.hpp>

#include "fibcert/exactq.hpp"
#include "fibcert/homology.hpp"

namespace fib {

/// The two unresolved choices in lifting a squared point-push: the
/// orientation sign of the transvection, and whether the lift is
/// composed with the deck transformation.
struct LiftVariant {
  int sign = +1;
  bool sigma_twist = false;

  std::string describe() const;
};

/// A class on the twice-punctured base: a closed class plus a multiple of
/// the loop around one branch point (the loop around the other is
/// determined).  epsilon is the mod-2 cover value: 0 on every closed
/// basis class, 1 on each branch loop.
struct PuncturedBaseClass {
  HClass closed_part;
  long branch_coeff = 0;
};

class DoubleCoverModel {
 public:
  /// The decided explicit model: cover basis = bar block then tilde block,
  /// sigma swaps the blocks, the cover form pairs each block standardly
  /// with no cross-pairings.
  static DoubleCoverModel standard();

  /// Build from explicit data, validating every structural invariant
  /// (sigma^2 = I, sigma symplectic, eigenspace dims (6,6), epsilon
  /// values).  Invalid data is refused.
  static DoubleCoverModel create(SymplecticSpace base, SymplecticSpace cover,
                                 Matrix sigma);

  const SymplecticSpace& base() const { return base_; }
  const SymplecticSpace& cover() const { return cover_; }
  const MappingAction& sigma() const { return sigma_; }
  const Subspace& h_plus() const { return h_plus_; }
  const Subspace& h_minus() const { return h_minus_; }

  /// Positions of the two lifts of base basis class k.
  int bar_index(int base_index) const { return base_index; }
  int tilde_index(int base_index) const { return base_.dim() + base_index; }

  int epsilon(const HClass& base_class) const;
  int epsilon(const PuncturedBaseClass& c) const;

  nlohmann::json to_json() const;

 private:
  DoubleCoverModel(SymplecticSpace base, SymplecticSpace cover,
                   MappingAction sigma, Subspace hp, Subspace hm);
  SymplecticSpace base_;
  SymplecticSpace cover_;
  MappingAction sigma_;
  Subspace h_plus_;
  Subspace h_minus_;
};

MappingAction sigma_star(const DoubleCoverModel& model);

/// The anti-invariant lift difference d_c = c~ - c^, defined for classes
/// with epsilon = 0 (two lifts) and linear in c.
HClass lift_difference(const DoubleCoverModel& model, const HClass& base_class);
HClass lift_difference(const DoubleCoverModel& model, const PuncturedBaseClass& c);

/// p^*(c) = c^ + c~; the image of the transfer is exactly H^+.
HClass transfer_up(const DoubleCoverModel& model, const HClass& base_class);
/// p_* sends both lifts of a class back to it; p_* p^* = 2 id.
HClass transfer_down(const DoubleCoverModel& model, const HClass& cover_class);

/// Homology action of the lift of Push(gamma)^2:
///   case 1: c |-> c + sign * i(c, d) d    with d = lift_difference(gamma)
///   case 2: the case-1 action composed with sigma.
MappingAction lifted_push_squared(const DoubleCoverModel& model,
                                  const HClass& gamma, const LiftVariant& variant);
MappingAction lifted_push_squared(const DoubleCoverModel& model,
                                  const PuncturedBaseClass& gamma,
                                  const LiftVariant& variant);

/// Monodromy action of the square of a base loop with class gamma: both
/// marked points get pushed, one around gamma and one around tau(gamma),
/// so the action is the product of the two lifted squared pushes (sign
/// applied to both, the sigma twist once to the composite).
MappingAction ak_monodromy_element(const DoubleCoverModel& model,
                                   const HClass& gamma, const MappingAction& tau,
                                   const LiftVariant& variant);

}  // namespace fib

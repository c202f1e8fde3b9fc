#pragma once

// H_1(S_g; Q) as a symplectic space: intersection form, Dehn-twist
// transvections, point-push bookkeeping and the free involution on S_3.
//
// Conventions: basis a1,b1,...,ag,bg with i(a_k,b_k)=+1, and the twist
// T_x acts by c |-> c + i(c,x) x.  All derived rank statements are
// independent of these sign choices.

#include <string>
#include <vector>

#include "fibcert/exactq.hpp"

namespace fib {

class SymplecticSpace {
 public:
  static SymplecticSpace standard(int genus);
  static SymplecticSpace with_labels(int genus, std::vector<std::string> labels);

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int basis_index(const std::string& label) const;
  const Matrix& form() const { return form_; }  // the intersection matrix J

  bool operator==(const SymplecticSpace& o) const {
    return genus_ == o.genus_ && labels_ == o.labels_;
  }

 private:
  SymplecticSpace(int genus, std::vector<std::string> labels);
  int genus_;
  std::vector<std::string> labels_;
  Matrix form_;
};

struct HClass {
  SymplecticSpace space;
  Vec coords;

  HClass(SymplecticSpace s, Vec v);
  bool is_zero() const { return vec_is_zero(coords); }
  bool operator==(const HClass& o) const {
    return space == o.space && coords == o.coords;
  }
};

HClass hclass_add(const HClass& x, const HClass& y);
HClass hclass_scale(const Rat& c, const HClass& x);
HClass basis_class(const SymplecticSpace& s, const std::string& label);

// Linear-combination syntax, e.g. "a1 + 2 b2 - a3" or "3/2 a1".
HClass parse_hclass(const SymplecticSpace& s, const std::string& text);
std::string hclass_to_string(const HClass& x);

/// Exact matrix acting on a symplectic space; construction verifies that
/// the matrix preserves the intersection form (M^T J M = J).
struct MappingAction {
  SymplecticSpace space;
  Matrix matrix;
  std::string provenance;

  MappingAction(SymplecticSpace s, Matrix m, std::string label);
};

HClass apply(const MappingAction& f, const HClass& x);
MappingAction compose(const MappingAction& f, const MappingAction& g);

/// i(x, y) = x^T J y.
Rat intersection(const HClass& x, const HClass& y);

/// The symplectic transvection T_x^n: c |-> c + n i(c,x) x.
MappingAction twist(const HClass& x, int power);

/// The decided model of the free involution on S_3 acting on homology:
/// handles 1 and 3 swap, handle 2 is fixed.  Trace 2 (Lefschetz number 0,
/// as a free action requires) and eigenspace dimensions (4, 2).
MappingAction tau_involution(const SymplecticSpace& s);

/// Point-push bookkeeping: Push(a) = T_x T_y^{-1} for the two boundary
/// curves of the pushing annulus.  Both are homologous to a on the closed
/// surface; exactly one of them crosses the branch point of the mod-2
/// cover, so the epsilon values split 0/1.
struct PushData {
  HClass pushed;
  HClass boundary_x;
  HClass boundary_y;
  int eps_x = 0;
  int eps_y = 1;
};

PushData make_push_data(const HClass& a);

}  // namespace fib

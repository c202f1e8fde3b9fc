#pragma once

// The doubled punctured product M = (S_g x S_g - diag) u (S_g x S_g - diag):
// its H^1 as the kernel of the four-block coordinate sum, the four fibering
// pullbacks, cup products through the two punctured product rings, the
// zero-divisor case analysis, and the certificate that exactly the four
// projection fiberings exist.
//
// Coordinates: an element of H^1 is (x, y, z, w), four blocks of dim 2g,
// subject to x + y + z + w = 0.  Blocks 1,2 restrict to the first copy of
// the punctured product (its two factor pullbacks), blocks 3,4 to the
// second copy.

#include <array>
#include <cstdint>
#include <utility>

#include "fibcert/certificate.hpp"
#include "fibcert/exactq.hpp"
#include "fibcert/prodring.hpp"

namespace fib {

class MSSpace {
 public:
  explicit MSSpace(int g);  // requires g >= 2

  int g() const { return g_; }
  int block_dim() const { return 2 * g_; }
  int ambient_dim() const { return 8 * g_; }

  const Subspace& h1() const { return h1_; }
  const std::array<Subspace, 4>& pullbacks() const { return pullbacks_; }
  const PuncturedProductRing& ring() const { return ring_; }

  Vec block(const Vec& v, int which) const;  // which in 0..3
  Vec from_blocks(const Vec& b0, const Vec& b1, const Vec& b2, const Vec& b3) const;
  bool in_h1(const Vec& v) const;

  /// Cup product of two H^1 elements, one reduced degree-2 value per copy
  /// of the punctured product; injectivity of H^2 into the two pieces
  /// justifies reading the pair componentwise.
  std::pair<Vec, Vec> cup(const Vec& u, const Vec& v) const;

  /// Basis of the annihilator {v in H^1 : cup(u, v) = 0}.
  Subspace cup_annihilator(const Vec& u) const;

 private:
  int g_;
  PuncturedProductRing ring_;
  Subspace h1_;
  std::array<Subspace, 4> pullbacks_;
};

Subspace ms_h1(int g);
std::array<Subspace, 4> fibering_pullbacks(int g);
std::pair<Vec, Vec> ms_cup(const Vec& u, const Vec& v, int g);

/// Per-copy outcome of the zero-divisor case analysis for a cup-zero
/// independent pair: either the two restrictions are linearly dependent,
/// or the matching factor component vanishes for both elements.
/// Vanishing is tested first, so a pair satisfying both reports Vanishing.
enum class SideCase { Dependent, Vanishing };

std::pair<SideCase, SideCase> salter_case_classify(const Vec& u, const Vec& v,
                                                   int g);

/// Certificate with the deterministic structural verification (annihilator
/// bounds on a spanning family, zero-pattern slice identification) plus
/// seeded randomized cup-zero pair trials; concludes Fib = 4 when no
/// counterexample is found and trials >= 1.
FiberingCertificate no_fifth_fibering_check(int g, int trials, uint64_t seed);

}  // namespace fib

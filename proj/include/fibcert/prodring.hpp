#pragma once

// Cup-product rings of surface products: H*(S_g1 x S_g2; Q) through the
// Kunneth decomposition, the diagonal class and its quotient model of the
// punctured product S_g x S_g - diag, the zero-divisor classification
// used by every fibering-count argument, and the two-fibering certificate.

#include <string>
#include <vector>

#include "fibcert/certificate.hpp"
#include "fibcert/exactq.hpp"
#include "fibcert/homology.hpp"

namespace fib {

/// H^1 and H^2 of S_g1 x S_g2 with rational coefficients.
/// Degree-1 vectors are laid out [V1 | V2] (dim 2g1 + 2g2); degree-2
/// vectors as [f1 | V1 tensor V2 row-major | f2] (dim 2 + 4 g1 g2) where
/// f_i is the pullback of the factor fundamental class.
class KunnethRing {
 public:
  KunnethRing(int g1, int g2);

  int g1() const { return g1_; }
  int g2() const { return g2_; }
  int deg1_dim() const { return 2 * (g1_ + g2_); }
  int deg2_dim() const { return 2 + 4 * g1_ * g2_; }

  int f1_index() const { return 0; }
  int f2_index() const { return deg2_dim() - 1; }
  int tensor_index(int i, int j) const { return 1 + i * 2 * g2_ + j; }

  Vec factor1_part(const Vec& x) const;  // V1 component of a degree-1 vector
  Vec factor2_part(const Vec& x) const;
  Vec deg1_from_parts(const Vec& v1, const Vec& v2) const;

  /// Cup product of two degree-1 classes:
  /// (a+b)(c+d) = i1(a,c) f1 + (a tensor d - c tensor b) + i2(b,d) f2.
  Vec cup1(const Vec& x, const Vec& y) const;

  /// Coefficient of the top class (f1 f2) in the product of two degree-2
  /// classes.
  Rat top_pairing(const Vec& z, const Vec& w) const;

  /// The full symmetric degree-2 pairing matrix (small genus only).
  Matrix deg2_pairing_matrix() const;

  const SymplecticSpace& factor1() const { return s1_; }
  const SymplecticSpace& factor2() const { return s2_; }

 private:
  int g1_, g2_;
  SymplecticSpace s1_, s2_;
};

/// Poincare dual of the diagonal in S_g x S_g, solved exactly from the
/// nondegenerate degree-2 pairing against the diagonal-restriction
/// integrals.  Its self-cup is (2-2g) times the top class.
struct DiagonalClass {
  int g;
  Vec deg2;
};

DiagonalClass diagonal_class(int g);

/// H^2(S_g x S_g - diag; Q) modeled as the quotient of H^2(S_g x S_g; Q)
/// by the line spanned by the diagonal class; valid for cup products of
/// degree-1 classes.  Degree-2 values are held as canonical
/// representatives with zero f1-coordinate.
class PuncturedProductRing {
 public:
  explicit PuncturedProductRing(int g);

  int g() const { return ambient_.g1(); }
  const KunnethRing& ambient() const { return ambient_; }
  const Vec& diagonal() const { return diagonal_.deg2; }
  int deg1_dim() const { return ambient_.deg1_dim(); }
  int deg2_dim() const { return ambient_.deg2_dim() - 1; }

  Vec reduce(const Vec& deg2) const;
  bool is_zero_mod_diagonal(const Vec& deg2) const;
  Vec punctured_cup(const Vec& x, const Vec& y) const;

 private:
  KunnethRing ambient_;
  DiagonalClass diagonal_;
};

enum class PairKind { SameFactor, Dependent, NonzeroCup };

struct PairClassification {
  PairKind kind;
  int factor = 0;  // 1 or 2 when kind == SameFactor
  Vec witness;     // reduced nonzero cup when kind == NonzeroCup
};

/// Classify a pair of degree-1 classes of the punctured product:
/// independent pairs with vanishing cup must live in a single factor
/// (for g >= 2).
PairClassification classify_zero_divisor_pair(const Vec& x, const Vec& y,
                                              const PuncturedProductRing& ring);

struct ZeroDivisorResult {
  bool proportional;
  Rat k;        // c = k a and d = k b when proportional
  Vec witness;  // nonzero cup otherwise
};

/// The Kunneth zero-divisor dichotomy: for a,b nonzero, (a+b)(c+d) = 0
/// forces (c,d) = k (a,b); otherwise a nonzero witness is produced.  The
/// three graded components i1(a,c), i2(b,d) and a(x)d - c(x)b are checked
/// independently of the packed cup vector.
ZeroDivisorResult kunneth_zero_divisor_lemma(const Vec& a, const Vec& b,
                                             const Vec& c, const Vec& d,
                                             const KunnethRing& ring);

struct ProductDecomposition {
  long dim1 = 0;
  long dim2 = 0;
  std::string label1;
  std::string label2;
};

/// Certificate that a manifold whose H^1 splits as the pullbacks of two
/// surface-base fiberings admits no third fibering.  Hypotheses: each
/// summand has dimension >= 4 (base genus > 1, since chi(B) < 0), the
/// degree-2 pullback is injective, and pullbacks of distinct fiberings
/// intersect trivially; the last two enter as recorded axioms.
FiberingCertificate two_fibering_certificate(const ProductDecomposition& decomp,
                                             bool h2_injective,
                                             bool transverse_pullbacks);

}  // namespace fib

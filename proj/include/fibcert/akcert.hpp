#pragma once

// The Atiyah-Kodaira pipeline: monodromy action sets from loop words,
// the invariant subspace of the fiber homology, assembly of b_1 of the
// total space, the parity cross-check, and the two-fibering certificate.

#include <string>
#include <vector>

#include "fibcert/branchedcover.hpp"
#include "fibcert/certificate.hpp"
#include "fibcert/surfgroup.hpp"

namespace fib {

/// One monodromy generator: the square of a base loop, pushed at both
/// marked points and lifted to the cover with the recorded variant.
struct SelectionEntry {
  Word loop;  // word in the genus-3 generators; the monodromy element is loop^2
  LiftVariant variant;
};

struct GeneratorSelection {
  std::vector<SelectionEntry> entries;

  /// Squares of all six generators plus the two mixed words; already pins
  /// the fixed space to the transfer image with no parity step needed.
  static GeneratorSelection default_selection();
  /// The two exhibited words plus one symmetric square: five independent
  /// kill conditions, leaving an upper bound of 7 that the parity of b_1
  /// resolves to 6.
  static GeneratorSelection minimal_selection();
  static GeneratorSelection from_loops(const std::vector<std::string>& loops);
};

/// Homology class of a loop word (exponent sums).
HClass loop_class(const SymplecticSpace& space, const Word& loop);

/// Validates an entry: the squared word dies in the mod-2 quotient and
/// the loop class double-lifts (epsilon = 0).
bool entry_certified(const SelectionEntry& entry, const DoubleCoverModel& model);

/// Simultaneous fixed space on H_1 of the cover fiber of all monodromy
/// matrices named by the selection.
Subspace invariant_subspace(const GeneratorSelection& selection,
                            const DoubleCoverModel& model);

/// b_1 of the cover of the genus-3 base classified by its mod-2 homology,
/// computed by Reidemeister-Schreier plus abelianized rank (index 64,
/// 321 Schreier generators).
long b1_base_schreier();
/// The same number from covering-space Euler characteristic arithmetic.
long b1_base_riemann_hurwitz();

/// b_1 of the total space: invariant dimension plus b_1 of the base
/// (recomputed through the subgroup presentation).
long b1_total(long invariant_dim);

/// The unique value in [lower, upper] making base_b1 + d even; throws
/// when no value or more than one qualifies.
long parity_filter(long lower, long upper, long base_b1);

/// Full certificate: hypothesis checks, recorded axioms, dimensions, and
/// (when everything passes) the conclusion Fib = 2.
FiberingCertificate ak_certificate(const GeneratorSelection& selection,
                                   const DoubleCoverModel& model);

struct VariantSurveyRow {
  std::string description;
  long invariant_dim = 0;
  long b1_total = 0;
};

/// Exploratory table over lift-variant assignments (uniform sign/twist
/// combinations plus every single-word perturbation); reported values
/// carry no asserted ground truth.
std::vector<VariantSurveyRow> lift_variant_survey(
    const std::vector<Word>& loops, const DoubleCoverModel& model);

}  // namespace fib

#pragma once

// Surface group presentations, finite quotients, Schreier coset graphs,
// Reidemeister-Schreier subgroup presentations, abelianized ranks, and
// Euler-characteristic / genus arithmetic for covers.

#include <cstdint>
#include <string>
#include <vector>

#include "fibcert/exactq.hpp"

namespace fib {

// A word is a list of signed 1-based generator indices: +k is generator k,
// -k its inverse.  The empty word is the identity.
using Word = std::vector<int>;

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
Word word_power(const Word& w, int n);

struct SurfacePresentation {
  int genus = 0;
  int punctures = 0;

  static SurfacePresentation closed_surface(int genus);
  static SurfacePresentation punctured_surface(int genus, int punctures);

  // a1,b1,...,ag,bg followed by puncture loops c1..cn
  int generator_count() const { return 2 * genus + punctures; }
  std::vector<std::string> generator_labels() const;
  int generator_index(const std::string& label) const;  // 1-based

  // Relators imposed on the free group on the generators.  A punctured
  // surface group is free (rank 2g+n-1 after eliminating one puncture
  // loop), so only the closed case carries its single surface relator.
  std::vector<Word> relators() const;
  // product of commutators times the puncture loops; trivial in the group
  Word boundary_word() const;
  int free_rank() const;
};

// Word syntax: whitespace-separated letters like "a1 b1 A1 B1";
// uppercase means inverse.
Word parse_word(const SurfacePresentation& pres, const std::string& text);
std::string word_to_string(const SurfacePresentation& pres, const Word& w);

int euler_characteristic(int genus, int punctures);

/// Genus of a degree-d branched cover of a genus-g surface.  Each branch
/// point of multiplicity m contributes d/m preimages; d must be divisible
/// by every multiplicity and the resulting Euler characteristic must be
/// even, otherwise the cover data is malformed.
int riemann_hurwitz_genus(int base_genus, int degree,
                          const std::vector<int>& branch_multiplicities);

/// Finite group with elements 0..order-1; element 0 is the identity.
/// Either an elementary abelian 2-group (bitmask elements, xor product)
/// or an explicit multiplication table.
class FiniteGroup {
 public:
  static FiniteGroup elementary_abelian_2(int rank);
  static FiniteGroup from_table(std::vector<std::vector<uint32_t>> table);

  uint32_t order() const { return order_; }
  uint32_t mult(uint32_t x, uint32_t y) const;
  uint32_t inverse(uint32_t x) const;
  bool is_elementary_abelian_2() const { return table_.empty(); }

 private:
  FiniteGroup() = default;
  uint32_t order_ = 1;
  std::vector<std::vector<uint32_t>> table_;  // empty for xor groups
};

/// Homomorphism from a presentation's ambient free group to a finite
/// group, given by generator images.  Images must satisfy the relators.
struct FiniteQuotient {
  FiniteGroup group;
  std::vector<uint32_t> images;  // images[k-1] = image of generator k

  uint32_t evaluate(const Word& w) const;
  std::vector<uint32_t> image_subgroup() const;  // sorted closure
  bool surjective() const;
};

FiniteQuotient make_quotient(const SurfacePresentation& pres, FiniteGroup g,
                             std::vector<uint32_t> images);

/// The mod-2 homology quotient pi_1(S_g) -> H_1(S_g; Z/2) = (Z/2)^{2g};
/// generator k maps to the k-th basis bit.
FiniteQuotient mod2_homology_cover(int genus);

/// True iff the word maps to the identity.
bool kernel_membership(const Word& w, const FiniteQuotient& q);

struct SubgroupPresentation {
  int index = 1;
  // Schreier generators as words in the ambient generators, in canonical
  // (coset, generator) scan order.
  std::vector<Word> schreier_generators;
  // Relators rewritten through every coset, as words in the Schreier
  // generators (signed 1-based indices).
  std::vector<Word> rewritten_relators;

  int generator_count() const {
    return static_cast<int>(schreier_generators.size());
  }
};

/// Transitive right action on cosets; action[k-1][c] = c * generator_k.
struct CosetAction {
  int coset_count = 0;
  std::vector<std::vector<int>> action;
};

/// Coset action of the kernel of a surjective finite quotient
/// (cosets = group elements, identified with the quotient's image order).
CosetAction kernel_cosets(const FiniteQuotient& q);

/// Cosets of the preimage of a subgroup (given as a sorted element list,
/// closed under the group operations) inside the image of q.
CosetAction preimage_cosets(const FiniteQuotient& q,
                            const std::vector<uint32_t>& subgroup);

/// Reidemeister-Schreier with a shortlex Schreier transversal
/// (letters ordered a1 < a1^-1 < b1 < b1^-1 < ...).
SubgroupPresentation reidemeister_schreier(int ambient_rank,
                                           const std::vector<Word>& relators,
                                           const CosetAction& cosets);

SubgroupPresentation reidemeister_schreier(const SurfacePresentation& pres,
                                           const FiniteQuotient& q);

/// Rank of the abelianization: generator count minus the rational rank of
/// the relator exponent matrix.
int abelianized_rank(const SubgroupPresentation& sub);

}  // namespace fib

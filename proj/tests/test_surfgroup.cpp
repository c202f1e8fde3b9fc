#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcert/seeded_rng.hpp"
#include "fibcert/surfgroup.hpp"

using namespace fib;

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(0, 0) == 2);
  CHECK(euler_characteristic(3, 0) == -4);
  CHECK(euler_characteristic(3, 2) == -6);
}

TEST_CASE("riemann-hurwitz genus of the branched and unbranched covers") {
  CHECK(riemann_hurwitz_genus(3, 2, {2, 2}) == 6);
  CHECK(riemann_hurwitz_genus(3, 64, {}) == 129);
  // chi = 2 (2 - 258) - 128 = -640, so genus 321
  CHECK(riemann_hurwitz_genus(129, 2, std::vector<int>(128, 2)) == 321);
}

TEST_CASE("riemann-hurwitz rejects malformed cover data") {
  CHECK_THROWS_AS(riemann_hurwitz_genus(2, 4, {3}), std::invalid_argument);
  // a single branch point of multiplicity 2 over the torus gives odd chi
  CHECK_THROWS_AS(riemann_hurwitz_genus(1, 2, {2}), std::invalid_argument);
}

TEST_CASE("mod-2 homology quotient orders") {
  CHECK(mod2_homology_cover(1).group.order() == 4);
  CHECK(mod2_homology_cover(2).group.order() == 16);
  CHECK(mod2_homology_cover(3).group.order() == 64);
}

TEST_CASE("kernel membership in the mod-2 quotient") {
  auto pres = SurfacePresentation::closed_surface(3);
  auto q = mod2_homology_cover(3);
  CHECK(kernel_membership(parse_word(pres, "a1 a1"), q));
  CHECK_FALSE(kernel_membership(parse_word(pres, "a1"), q));
  CHECK(kernel_membership(parse_word(pres, "b2 a1 b2 a1"), q));
  CHECK_THROWS_AS(q.evaluate({99}), std::invalid_argument);
}

TEST_CASE("kernel membership is multiplicative") {
  auto q = mod2_homology_cover(2);
  SeededRng rng(3);
  for (int t = 0; t < 40; ++t) {
    Word w1, w2;
    for (int i = 0; i < 6; ++i) {
      w1.push_back(static_cast<int>(rng.uniform(1, 4)) *
                   (rng.uniform(0, 1) ? 1 : -1));
      w2.push_back(static_cast<int>(rng.uniform(1, 4)) *
                   (rng.uniform(0, 1) ? 1 : -1));
    }
    if (kernel_membership(w1, q) && kernel_membership(w2, q)) {
      CHECK(kernel_membership(word_concat(w1, w2), q));
    }
  }
}

TEST_CASE("word syntax round trip") {
  auto pres = SurfacePresentation::closed_surface(2);
  Word w = parse_word(pres, "a1 b1 A1 B1");
  CHECK(w == Word{1, 2, -1, -2});
  CHECK(word_to_string(pres, w) == "a1 b1 A1 B1");
  CHECK_THROWS_AS(parse_word(pres, "a9"), std::invalid_argument);
}

TEST_CASE("index-1 subgroup is the group itself") {
  auto pres = SurfacePresentation::closed_surface(2);
  auto q = make_quotient(pres, FiniteGroup::elementary_abelian_2(0),
                         std::vector<uint32_t>(4, 0));
  auto sub = reidemeister_schreier(pres, q);
  CHECK(sub.index == 1);
  CHECK(sub.generator_count() == 4);
  CHECK(sub.rewritten_relators.size() == 1);
  CHECK(abelianized_rank(sub) == 4);
}

TEST_CASE("genus-2 mod-2 cover: 49 generators, 16 relators, b1 = 34") {
  auto pres = SurfacePresentation::closed_surface(2);
  auto sub = reidemeister_schreier(pres, mod2_homology_cover(2));
  CHECK(sub.index == 16);
  CHECK(sub.generator_count() == 49);  // 16 (4 - 1) + 1
  CHECK(sub.rewritten_relators.size() == 16);
  int b1 = abelianized_rank(sub);
  CHECK(b1 == 34);
  CHECK(b1 == 2 * riemann_hurwitz_genus(2, 16, {}));
}

TEST_CASE("genus-3 mod-2 cover: 321 generators, 64 relators, b1 = 258") {
  auto pres = SurfacePresentation::closed_surface(3);
  auto sub = reidemeister_schreier(pres, mod2_homology_cover(3));
  CHECK(sub.index == 64);
  CHECK(sub.generator_count() == 321);  // 64 (6 - 1) + 1
  CHECK(sub.rewritten_relators.size() == 64);
  CHECK(abelianized_rank(sub) == 258);
}

TEST_CASE("cover b1 equals twice the riemann-hurwitz genus across covers") {
  // two independent computation paths for every (g, d) pair
  struct Case {
    int genus;
    int quotient_rank;  // quotient onto (Z/2)^rank via the first generators
  };
  for (Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}, Case{3, 3}}) {
    auto pres = SurfacePresentation::closed_surface(c.genus);
    std::vector<uint32_t> images(2 * c.genus, 0);
    for (int k = 0; k < c.quotient_rank; ++k) images[k] = 1u << k;
    auto q = make_quotient(pres, FiniteGroup::elementary_abelian_2(c.quotient_rank),
                           images);
    auto sub = reidemeister_schreier(pres, q);
    int d = 1 << c.quotient_rank;
    CHECK(sub.index == d);
    CHECK(abelianized_rank(sub) == 2 * riemann_hurwitz_genus(c.genus, d, {}));
  }
}

TEST_CASE("schreier generator count for free groups of punctured type") {
  // a punctured surface group is free; run the coset core on free
  // presentations of the matching rank and check d (r - 1) + 1
  for (int genus : {1, 2}) {
    for (int punctures : {1, 2}) {
      auto pres = SurfacePresentation::punctured_surface(genus, punctures);
      int r = pres.free_rank();
      std::vector<uint32_t> images(r, 0);
      images[0] = 1;
      FiniteQuotient q{FiniteGroup::elementary_abelian_2(1), images};
      auto sub = reidemeister_schreier(r, {}, kernel_cosets(q));
      CHECK(sub.index == 2);
      CHECK(sub.generator_count() == 2 * (r - 1) + 1);
      CHECK(sub.rewritten_relators.empty());
      CHECK(abelianized_rank(sub) == sub.generator_count());
    }
  }
}

namespace {

Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

bool is_rotation_of(const Word& w, const Word& r) {
  if (w.size() != r.size()) return false;
  for (size_t shift = 0; shift < r.size(); ++shift) {
    bool match = true;
    for (size_t i = 0; i < r.size(); ++i) {
      if (w[i] != r[(i + shift) % r.size()]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("rewritten relators expand back to conjugates of the relator") {
  // substitute each Schreier generator's word back into the rewritten
  // relators; the result must cyclically reduce to a rotation of the
  // surface relator, and every Schreier generator must lie in the kernel
  auto pres = SurfacePresentation::closed_surface(2);
  auto q = mod2_homology_cover(2);
  auto sub = reidemeister_schreier(pres, q);
  for (const Word& g : sub.schreier_generators) {
    CHECK(kernel_membership(g, q));
  }
  Word relator = pres.boundary_word();
  for (const Word& rewritten : sub.rewritten_relators) {
    Word expanded;
    for (int letter : rewritten) {
      const Word& gen = sub.schreier_generators[std::abs(letter) - 1];
      Word piece = letter > 0 ? gen : word_inverse(gen);
      expanded.insert(expanded.end(), piece.begin(), piece.end());
    }
    CHECK(is_rotation_of(cyclic_reduce(expanded), relator));
  }
}

TEST_CASE("non-surjective quotients are refused by coset enumeration") {
  auto pres = SurfacePresentation::closed_surface(2);
  auto q = make_quotient(pres, FiniteGroup::elementary_abelian_2(2),
                         std::vector<uint32_t>{1, 1, 0, 0});
  CHECK_FALSE(q.surjective());
  CHECK_THROWS_AS(reidemeister_schreier(pres, q), std::invalid_argument);
}

TEST_CASE("table groups validate identity and inverses") {
  // Z/3 as an explicit table
  std::vector<std::vector<uint32_t>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroup g = FiniteGroup::from_table(z3);
  CHECK(g.order() == 3);
  CHECK(g.mult(1, 2) == 0);
  CHECK(g.inverse(1) == 2);
  std::vector<std::vector<uint32_t>> bad{{1, 0}, {0, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), std::invalid_argument);
}

TEST_CASE("preimage cosets of a proper subgroup") {
  // genus-2 group onto (Z/2)^2 by a1 -> 01, b1 -> 10; the preimage of
  // the subgroup {00, 01} has index 2
  auto pres = SurfacePresentation::closed_surface(2);
  auto q = make_quotient(pres, FiniteGroup::elementary_abelian_2(2),
                         std::vector<uint32_t>{1, 2, 0, 0});
  CosetAction ca = preimage_cosets(q, {0, 1});
  CHECK(ca.coset_count == 2);
  auto sub = reidemeister_schreier(pres.generator_count(), pres.relators(), ca);
  CHECK(abelianized_rank(sub) == 2 * riemann_hurwitz_genus(2, 2, {}));
}

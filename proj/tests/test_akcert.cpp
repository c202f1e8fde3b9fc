#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcert/akcert.hpp"
#include "fibcert/seeded_rng.hpp"

using namespace fib;

namespace {

Subspace transfer_image_subspace(const DoubleCoverModel& model) {
  std::vector<Vec> gens;
  for (int k = 0; k < 6; ++k) {
    gens.push_back(
        transfer_up(model, HClass(model.base(), vec_unit(6, k))).coords);
  }
  return Subspace::span(12, gens);
}

// independent oracle for the fixed-space dimension of a set of case-1
// monodromy matrices: each loop class kills the pairings against its two
// lift differences, so the dimension is 12 minus the rank of those
// pairing functionals
int pairing_condition_dim(const DoubleCoverModel& model,
                          const std::vector<std::string>& loops) {
  MappingAction tau = tau_involution(model.base());
  std::vector<Vec> rows;
  for (const auto& text : loops) {
    HClass gamma = parse_hclass(model.base(), text);
    for (const HClass& g : {gamma, apply(tau, gamma)}) {
      rows.push_back(
          model.cover().form().apply(lift_difference(model, g).coords));
    }
  }
  return 12 - rank(Matrix::from_rows(rows));
}

}  // namespace

TEST_CASE("single-word selections cut the expected codimension") {
  auto model = DoubleCoverModel::standard();
  auto sel = GeneratorSelection::from_loops({"a1"});
  Subspace inv = invariant_subspace(sel, model);
  CHECK(inv.dim() == 10);
  CHECK(inv.dim() == pairing_condition_dim(model, {"a1"}));
}

TEST_CASE("adding the mixed word cuts exactly one more dimension") {
  auto model = DoubleCoverModel::standard();
  auto sel = GeneratorSelection::from_loops({"a1", "b2 a1"});
  Subspace inv = invariant_subspace(sel, model);
  CHECK(inv.dim() == 9);
  CHECK(inv.dim() == pairing_condition_dim(model, {"a1", "b2 + a1"}));
}

TEST_CASE("all generator squares pin the invariant space to the transfer image") {
  auto model = DoubleCoverModel::standard();
  auto sel = GeneratorSelection::from_loops({"a1", "a2", "a3", "b1", "b2", "b3"});
  Subspace inv = invariant_subspace(sel, model);
  CHECK(inv.dim() == 6);
  CHECK(inv == transfer_image_subspace(model));
  CHECK(inv == model.h_plus());
}

TEST_CASE("the default selection is certified and reaches dimension 6") {
  auto model = DoubleCoverModel::standard();
  auto sel = GeneratorSelection::default_selection();
  for (const auto& e : sel.entries) CHECK(entry_certified(e, model));
  CHECK(invariant_subspace(sel, model).dim() == 6);
}

TEST_CASE("the invariant subspace shrinks monotonically with the selection") {
  auto model = DoubleCoverModel::standard();
  auto full = GeneratorSelection::default_selection();
  Subspace prev = Subspace::full(12);
  for (size_t k = 1; k <= full.entries.size(); ++k) {
    GeneratorSelection prefix;
    prefix.entries.assign(full.entries.begin(), full.entries.begin() + k);
    Subspace inv = invariant_subspace(prefix, model);
    CHECK(prev.contains(inv));
    prev = inv;
  }
}

TEST_CASE("the transfer image is a lower bound for every case-1 selection") {
  auto model = DoubleCoverModel::standard();
  Subspace hplus = transfer_image_subspace(model);
  SeededRng rng(15);
  for (int t = 0; t < 6; ++t) {
    GeneratorSelection sel;
    auto pool = GeneratorSelection::default_selection().entries;
    for (const auto& e : pool) {
      if (rng.uniform(0, 1)) sel.entries.push_back(e);
    }
    if (sel.entries.empty()) sel.entries.push_back(pool[0]);
    CHECK(invariant_subspace(sel, model).contains(hplus));
  }
}

TEST_CASE("sign flips never change the fixed space") {
  auto model = DoubleCoverModel::standard();
  auto sel = GeneratorSelection::default_selection();
  Subspace base = invariant_subspace(sel, model);
  for (size_t flip = 0; flip < sel.entries.size(); ++flip) {
    GeneratorSelection flipped = sel;
    flipped.entries[flip].variant.sign = -1;
    CHECK(invariant_subspace(flipped, model) == base);
  }
  GeneratorSelection all_flipped = sel;
  for (auto& e : all_flipped.entries) e.variant.sign = -1;
  CHECK(invariant_subspace(all_flipped, model) == base);
}

TEST_CASE("invariant functionals match the invariant cycles in dimension") {
  // the dual route: functionals fixed by the action are the fixed space
  // of the transposed matrices; both sides of the duality must agree
  auto model = DoubleCoverModel::standard();
  MappingAction tau = tau_involution(model.base());
  for (const auto& loops : {std::vector<std::string>{"a1"},
                            std::vector<std::string>{"a1", "b2 a1"},
                            std::vector<std::string>{"a1", "a2", "a3", "b1",
                                                     "b2", "b3"}}) {
    auto sel = GeneratorSelection::from_loops(loops);
    std::vector<Matrix> transposed;
    for (const auto& e : sel.entries) {
      HClass gamma = loop_class(model.base(), e.loop);
      transposed.push_back(
          ak_monodromy_element(model, gamma, tau, e.variant).matrix.transposed());
    }
    CHECK(fixed_space(transposed, 12).dim() ==
          invariant_subspace(sel, model).dim());
  }
}

TEST_CASE("b1 of the classifying cover computed two ways") {
  CHECK(b1_base_riemann_hurwitz() == 258);
  CHECK(b1_base_schreier() == 258);
  CHECK(b1_total(6) == 264);
  CHECK(b1_total(0) == 258);
  CHECK(b1_total(12) == 270);
  CHECK_THROWS_AS(b1_total(13), std::invalid_argument);
}

TEST_CASE("parity filter picks the unique even-sum dimension") {
  CHECK(parity_filter(6, 7, 258) == 6);
  CHECK(parity_filter(6, 6, 258) == 6);
  CHECK_THROWS_AS(parity_filter(5, 8, 258), std::invalid_argument);
  CHECK_THROWS_AS(parity_filter(7, 7, 258), std::invalid_argument);
}

TEST_CASE("the default certificate concludes Fib = 2") {
  auto model = DoubleCoverModel::standard();
  auto cert = ak_certificate(GeneratorSelection::default_selection(), model);
  REQUIRE(cert.conclusion().has_value());
  CHECK(*cert.conclusion() == "Fib = 2");
  auto j = cert.to_json();
  CHECK(j["dims"]["invariant"] == 6);
  CHECK(j["dims"]["b1_base"] == 258);
  CHECK(j["dims"]["b1_total"] == 264);
}

TEST_CASE("the minimal selection resolves through parity to the same answer") {
  auto model = DoubleCoverModel::standard();
  auto sel = GeneratorSelection::minimal_selection();
  Subspace inv = invariant_subspace(sel, model);
  CHECK(inv.dim() == 7);  // five independent kill conditions out of six
  CHECK(parity_filter(6, inv.dim(), b1_base_riemann_hurwitz()) == 6);
  auto cert = ak_certificate(sel, model);
  REQUIRE(cert.conclusion().has_value());
  CHECK(*cert.conclusion() == "Fib = 2");
  CHECK(cert.to_json()["dims"]["b1_total"] == 264);
}

TEST_CASE("an insufficient selection yields a bound and no conclusion") {
  auto model = DoubleCoverModel::standard();
  auto cert = ak_certificate(GeneratorSelection::from_loops({"a1"}), model);
  CHECK_FALSE(cert.conclusion().has_value());
  auto j = cert.to_json();
  CHECK(j["dims"]["invariant"] == 10);
  CHECK(j["conclusion"].is_null());
}

TEST_CASE("invalid words and empty selections are refused") {
  auto model = DoubleCoverModel::standard();
  GeneratorSelection empty;
  CHECK_THROWS_AS(invariant_subspace(empty, model), std::invalid_argument);
  GeneratorSelection bad;
  bad.entries.push_back({Word{7}, LiftVariant{}});  // no seventh generator
  CHECK_THROWS_AS(invariant_subspace(bad, model), std::invalid_argument);
}

TEST_CASE("the variant survey reports dimensions without asserting them") {
  auto model = DoubleCoverModel::standard();
  std::vector<Word> loops;
  for (const auto& e : GeneratorSelection::default_selection().entries) {
    loops.push_back(e.loop);
  }
  auto rows = lift_variant_survey(loops, model);
  REQUIRE(rows.size() == 4 + 2 * loops.size());
  // the all-default and all-sign-flipped rows reproduce the certified value
  CHECK(rows[0].invariant_dim == 6);
  CHECK(rows[0].b1_total == 264);
  CHECK(rows[2].invariant_dim == 6);  // sign flip on every word
  for (const auto& r : rows) {
    CHECK(r.invariant_dim >= 0);
    CHECK(r.b1_total == 258 + r.invariant_dim);
  }
}

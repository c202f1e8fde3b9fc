#include "fibcert/akcert.hpp"

#include <stdexcept>

#include "fibcert/prodring.hpp"

namespace fib {

namespace {

const SurfacePresentation& base_presentation() {
  static const SurfacePresentation pres = SurfacePresentation::closed_surface(3);
  return pres;
}

std::string selection_word_display(const SelectionEntry& e) {
  return "(" + word_to_string(base_presentation(), e.loop) + ")^2";
}

}  // namespace

GeneratorSelection GeneratorSelection::from_loops(
    const std::vector<std::string>& loops) {
  GeneratorSelection sel;
  for (const std::string& text : loops) {
    sel.entries.push_back({parse_word(base_presentation(), text), LiftVariant{}});
  }
  return sel;
}

GeneratorSelection GeneratorSelection::default_selection() {
  return from_loops({"a1", "a2", "a3", "b1", "b2", "b3", "b2 a1", "b2 a3"});
}

GeneratorSelection GeneratorSelection::minimal_selection() {
  return from_loops({"a1", "b1", "b2 a1"});
}

HClass loop_class(const SymplecticSpace& space, const Word& loop) {
  Vec v(space.dim(), Rat(0));
  for (int letter : loop) {
    int idx = std::abs(letter) - 1;
    if (idx < 0 || idx >= space.dim()) {
      throw std::invalid_argument("loop letter outside the closed-surface basis");
    }
    v[idx] += letter > 0 ? 1 : -1;
  }
  return HClass(space, std::move(v));
}

bool entry_certified(const SelectionEntry& entry, const DoubleCoverModel& model) {
  FiniteQuotient mod2 = mod2_homology_cover(3);
  Word square = word_power(entry.loop, 2);
  if (!kernel_membership(square, mod2)) return false;
  HClass gamma = loop_class(model.base(), entry.loop);
  return model.epsilon(gamma) == 0;
}

namespace {

std::vector<Matrix> monodromy_matrices(const GeneratorSelection& selection,
                                       const DoubleCoverModel& model) {
  if (selection.entries.empty()) {
    throw std::invalid_argument("empty generator selection");
  }
  MappingAction tau = tau_involution(model.base());
  std::vector<Matrix> mats;
  for (const SelectionEntry& e : selection.entries) {
    if (!entry_certified(e, model)) {
      throw std::invalid_argument("selection word is not certified: " +
                                  selection_word_display(e));
    }
    HClass gamma = loop_class(model.base(), e.loop);
    mats.push_back(ak_monodromy_element(model, gamma, tau, e.variant).matrix);
  }
  return mats;
}

Subspace transfer_image(const DoubleCoverModel& model) {
  std::vector<Vec> gens;
  for (int k = 0; k < model.base().dim(); ++k) {
    HClass up = transfer_up(
        model, HClass(model.base(), vec_unit(model.base().dim(), k)));
    gens.push_back(up.coords);
  }
  return Subspace::span(model.cover().dim(), gens);
}

}  // namespace

Subspace invariant_subspace(const GeneratorSelection& selection,
                            const DoubleCoverModel& model) {
  return fixed_space(monodromy_matrices(selection, model), model.cover().dim());
}

long b1_base_schreier() {
  auto sub = reidemeister_schreier(base_presentation(), mod2_homology_cover(3));
  return abelianized_rank(sub);
}

long b1_base_riemann_hurwitz() {
  return 2L * riemann_hurwitz_genus(3, 64, {});
}

long b1_total(long invariant_dim) {
  if (invariant_dim < 0 || invariant_dim > 12) {
    throw std::invalid_argument("invariant dimension must lie in [0, 12]");
  }
  return b1_base_schreier() + invariant_dim;
}

long parity_filter(long lower, long upper, long base_b1) {
  if (lower > upper) throw std::invalid_argument("empty parity interval");
  long found = -1;
  for (long d = lower; d <= upper; ++d) {
    if ((base_b1 + d) % 2 == 0) {
      if (found >= 0) {
        throw std::invalid_argument("parity does not determine the dimension: " +
                                    std::to_string(found) + " and " +
                                    std::to_string(d) + " both qualify");
      }
      found = d;
    }
  }
  if (found < 0) {
    throw std::invalid_argument("no parity-consistent dimension in range");
  }
  return found;
}

FiberingCertificate ak_certificate(const GeneratorSelection& selection,
                                   const DoubleCoverModel& model) {
  FiberingCertificate cert("Atiyah-Kodaira total space");

  bool words_ok = !selection.entries.empty();
  nlohmann::json words = nlohmann::json::array();
  for (const SelectionEntry& e : selection.entries) {
    bool ok = entry_certified(e, model);
    words_ok = words_ok && ok;
    words.push_back({{"word", selection_word_display(e)},
                     {"variant", e.variant.describe()},
                     {"certified", ok}});
  }
  cert.add_check("selection_words_mod2_trivial_and_double_lifting", words_ok,
                 {{"words", words}});
  if (!words_ok) return cert;

  Subspace inv = invariant_subspace(selection, model);
  Subspace hplus = transfer_image(model);
  long lower = hplus.dim();
  long upper = inv.dim();
  cert.set_dim("invariant", upper);

  bool contains = inv.contains(hplus);
  cert.add_check("transfer_image_inside_invariant_subspace", contains,
                 {{"transfer_dim", lower}, {"invariant_dim", upper}});

  long b1_rh = b1_base_riemann_hurwitz();
  long b1_rs = b1_base_schreier();
  cert.add_check("base_b1_two_routes_agree", b1_rh == b1_rs,
                 {{"riemann_hurwitz", b1_rh}, {"schreier_abelianization", b1_rs}});
  cert.set_dim("b1_base", b1_rs);

  bool exact = inv == hplus;
  long resolved = -1;
  if (exact) {
    resolved = upper;
    cert.add_check("invariant_subspace_equals_transfer_image", true,
                   {{"dim", upper}});
  } else {
    // Upper bound route: the computed fixed space over-approximates the
    // full invariant subspace, the transfer image under-approximates it,
    // and evenness of b_1 of the total space picks the dimension.
    nlohmann::json data{{"lower", lower}, {"upper", upper}};
    try {
      resolved = parity_filter(lower, upper, b1_rh);
      data["parity_resolved"] = resolved;
      cert.add_check("parity_resolves_invariant_dimension", resolved == lower,
                     data);
    } catch (const std::invalid_argument& err) {
      data["error"] = err.what();
      cert.add_check("parity_resolves_invariant_dimension", false, data);
      cert.add_note("invariant dimension only bounded: [" +
                    std::to_string(lower) + ", " + std::to_string(upper) + "]");
      return cert;
    }
  }

  // Cross-route agreement: squares of all generators compute the
  // invariant subspace directly; any other certified selection must
  // resolve to the same dimension.
  Subspace squares_route =
      invariant_subspace(GeneratorSelection::default_selection(), model);
  cert.add_check("selection_routes_agree",
                 squares_route == hplus && resolved == squares_route.dim(),
                 {{"squares_route_dim", squares_route.dim()},
                  {"resolved_dim", resolved}});

  long b1 = b1_rs + resolved;
  cert.set_dim("b1_total", b1);
  cert.add_check("b1_total_even", b1 % 2 == 0, {{"b1_total", b1}});

  cert.add_axiom("the total space is Kahler, so b_1 is even");
  ProductDecomposition decomp{resolved, b1_rs, "h1_fiber_base", "h1_cover_base"};
  FiberingCertificate two = two_fibering_certificate(decomp, true, true);
  cert.merge_sub_certificate("two_fibering", two);
  cert.set_dim("fib", 2);
  cert.conclude("Fib = 2");
  return cert;
}

std::vector<VariantSurveyRow> lift_variant_survey(const std::vector<Word>& loops,
                                                  const DoubleCoverModel& model) {
  if (loops.empty()) throw std::invalid_argument("survey needs at least one loop");
  long base_b1 = b1_base_schreier();
  std::vector<VariantSurveyRow> rows;
  auto run = [&](const std::string& description,
                 const std::vector<LiftVariant>& variants) {
    GeneratorSelection sel;
    for (size_t i = 0; i < loops.size(); ++i) {
      sel.entries.push_back({loops[i], variants[i]});
    }
    Subspace inv = invariant_subspace(sel, model);
    rows.push_back({description, inv.dim(), base_b1 + inv.dim()});
  };
  for (int sign : {+1, -1}) {
    for (bool twist : {false, true}) {
      std::vector<LiftVariant> vs(loops.size(), LiftVariant{sign, twist});
      run("all words " + LiftVariant{sign, twist}.describe(), vs);
    }
  }
  for (size_t i = 0; i < loops.size(); ++i) {
    std::vector<LiftVariant> vs(loops.size(), LiftVariant{});
    vs[i] = LiftVariant{+1, true};
    run("sigma twist on word " + std::to_string(i + 1) + " only", vs);
    vs[i] = LiftVariant{-1, false};
    run("sign flip on word " + std::to_string(i + 1) + " only", vs);
  }
  return rows;
}

}  // namespace fib

#include "fibcert/branchedcover.hpp"

#include <stdexcept>

namespace fib {

std::string LiftVariant::describe() const {
  std::string s = sign >= 0 ? "sign=+" : "sign=-";
  s += sigma_twist ? ",twist=1" : ",twist=0";
  return s;
}

namespace {

std::vector<std::string> cover_labels() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 3; ++i) {
    labels.push_back("a" + std::to_string(i) + "_bar");
    labels.push_back("b" + std::to_string(i) + "_bar");
  }
  for (int i = 1; i <= 3; ++i) {
    labels.push_back("a" + std::to_string(i) + "_tilde");
    labels.push_back("b" + std::to_string(i) + "_tilde");
  }
  return labels;
}

}  // namespace

DoubleCoverModel::DoubleCoverModel(SymplecticSpace base, SymplecticSpace cover,
                                   MappingAction sigma, Subspace hp, Subspace hm)
    : base_(std::move(base)),
      cover_(std::move(cover)),
      sigma_(std::move(sigma)),
      h_plus_(std::move(hp)),
      h_minus_(std::move(hm)) {}

DoubleCoverModel DoubleCoverModel::create(SymplecticSpace base,
                                          SymplecticSpace cover, Matrix sigma) {
  if (base.genus() != 3) throw std::invalid_argument("base must have genus 3");
  if (cover.genus() != 6) throw std::invalid_argument("cover must have genus 6");
  // MappingAction construction checks that sigma preserves the cover form.
  MappingAction sigma_action(cover, std::move(sigma), "sigma");
  if (!(sigma_action.matrix * sigma_action.matrix).is_identity()) {
    throw std::invalid_argument("deck transformation must be an involution");
  }
  Subspace hp = fixed_space({sigma_action.matrix}, cover.dim());
  Subspace hm = kernel(sigma_action.matrix + Matrix::identity(cover.dim()));
  if (hp.dim() != 6 || hm.dim() != 6) {
    throw std::invalid_argument("deck eigenspaces must have dimensions (6,6)");
  }
  return DoubleCoverModel(std::move(base), std::move(cover),
                          std::move(sigma_action), std::move(hp), std::move(hm));
}

DoubleCoverModel DoubleCoverModel::standard() {
  SymplecticSpace base = SymplecticSpace::standard(3);
  SymplecticSpace cover = SymplecticSpace::with_labels(6, cover_labels());
  Matrix swap(12, 12);
  for (int i = 0; i < 6; ++i) {
    swap.at(i, 6 + i) = 1;
    swap.at(6 + i, i) = 1;
  }
  return create(std::move(base), std::move(cover), std::move(swap));
}

int DoubleCoverModel::epsilon(const HClass& base_class) const {
  if (!(base_class.space == base_)) throw std::invalid_argument("space mismatch");
  return 0;  // every closed basis class double-lifts in this cover
}

int DoubleCoverModel::epsilon(const PuncturedBaseClass& c) const {
  epsilon(c.closed_part);  // validates the space; closed classes contribute 0
  return static_cast<int>(((c.branch_coeff % 2) + 2) % 2);
}

nlohmann::json DoubleCoverModel::to_json() const {
  nlohmann::json j;
  j["schema"] = "double-cover-model/1";
  j["base"] = {{"genus", base_.genus()}, {"labels", base_.labels()}};
  j["cover"] = {{"genus", cover_.genus()}, {"labels", cover_.labels()}};
  auto matrix_json = [](const Matrix& m) {
    std::vector<std::vector<std::string>> rows;
    for (int r = 0; r < m.rows(); ++r) {
      std::vector<std::string> row;
      for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["form"] = matrix_json(cover_.form());
  j["sigma"] = matrix_json(sigma_.matrix);
  nlohmann::json eps;
  for (const auto& label : base_.labels()) eps[label] = 0;
  eps["c1"] = 1;
  eps["c2"] = 1;
  j["epsilon"] = eps;
  nlohmann::json lifts;
  for (int k = 0; k < base_.dim(); ++k) {
    lifts[base_.labels()[k]] = {
        {"bar", cover_.labels()[bar_index(k)]},
        {"tilde", cover_.labels()[tilde_index(k)]},
    };
  }
  j["lift_table"] = lifts;
  return j;
}

MappingAction sigma_star(const DoubleCoverModel& model) { return model.sigma(); }

HClass lift_difference(const DoubleCoverModel& model, const HClass& base_class) {
  if (!(base_class.space == model.base())) {
    throw std::invalid_argument("space mismatch");
  }
  Vec v(model.cover().dim(), Rat(0));
  for (int k = 0; k < model.base().dim(); ++k) {
    const Rat& c = base_class.coords[k];
    if (c == 0) continue;
    v[model.tilde_index(k)] += c;
    v[model.bar_index(k)] -= c;
  }
  return HClass(model.cover(), std::move(v));
}

HClass lift_difference(const DoubleCoverModel& model, const PuncturedBaseClass& c) {
  if (model.epsilon(c) != 0) {
    throw std::invalid_argument(
        "class crosses the branch point (epsilon = 1): single lift, no "
        "difference class");
  }
  return lift_difference(model, c.closed_part);
}

HClass transfer_up(const DoubleCoverModel& model, const HClass& base_class) {
  if (!(base_class.space == model.base())) {
    throw std::invalid_argument("space mismatch");
  }
  Vec v(model.cover().dim(), Rat(0));
  for (int k = 0; k < model.base().dim(); ++k) {
    const Rat& c = base_class.coords[k];
    if (c == 0) continue;
    v[model.tilde_index(k)] += c;
    v[model.bar_index(k)] += c;
  }
  return HClass(model.cover(), std::move(v));
}

HClass transfer_down(const DoubleCoverModel& model, const HClass& cover_class) {
  if (!(cover_class.space == model.cover())) {
    throw std::invalid_argument("space mismatch");
  }
  Vec v(model.base().dim(), Rat(0));
  for (int k = 0; k < model.base().dim(); ++k) {
    v[k] = cover_class.coords[model.bar_index(k)] +
           cover_class.coords[model.tilde_index(k)];
  }
  return HClass(model.base(), std::move(v));
}

MappingAction lifted_push_squared(const DoubleCoverModel& model,
                                  const HClass& gamma, const LiftVariant& variant) {
  if (gamma.is_zero()) throw std::invalid_argument("cannot push along zero class");
  HClass d = lift_difference(model, gamma);
  MappingAction t = twist(d, variant.sign >= 0 ? 1 : -1);
  std::string label = "Lift(Push(" + hclass_to_string(gamma) + ")^2)[" +
                      variant.describe() + "]";
  if (!variant.sigma_twist) {
    return MappingAction(model.cover(), t.matrix, label);
  }
  return MappingAction(model.cover(), model.sigma().matrix * t.matrix, label);
}

MappingAction lifted_push_squared(const DoubleCoverModel& model,
                                  const PuncturedBaseClass& gamma,
                                  const LiftVariant& variant) {
  if (model.epsilon(gamma) != 0) {
    throw std::invalid_argument(
        "push loop crosses the branch point (epsilon = 1)");
  }
  return lifted_push_squared(model, gamma.closed_part, variant);
}

MappingAction ak_monodromy_element(const DoubleCoverModel& model,
                                   const HClass& gamma, const MappingAction& tau,
                                   const LiftVariant& variant) {
  HClass tau_gamma = apply(tau, gamma);
  LiftVariant untwisted{variant.sign, false};
  MappingAction first = lifted_push_squared(model, gamma, untwisted);
  MappingAction second = lifted_push_squared(model, tau_gamma, untwisted);
  Matrix m = first.matrix * second.matrix;
  if (variant.sigma_twist) m = model.sigma().matrix * m;
  std::string label = "Lift(Push(" + hclass_to_string(gamma) + ")^2 Push(" +
                      hclass_to_string(tau_gamma) + ")^2)[" + variant.describe() +
                      "]";
  return MappingAction(model.cover(), std::move(m), std::move(label));
}

}  // namespace fib

#include "fibcert/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace fib {

namespace {

Matrix standard_form(int genus) {
  Matrix j(2 * genus, 2 * genus);
  for (int k = 0; k < genus; ++k) {
    j.at(2 * k, 2 * k + 1) = 1;
    j.at(2 * k + 1, 2 * k) = -1;
  }
  return j;
}

std::vector<std::string> standard_labels(int genus) {
  std::vector<std::string> labels;
  for (int i = 1; i <= genus; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  return labels;
}

}  // namespace

SymplecticSpace::SymplecticSpace(int genus, std::vector<std::string> labels)
    : genus_(genus), labels_(std::move(labels)), form_(standard_form(genus)) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (static_cast<int>(labels_.size()) != 2 * genus) {
    throw std::invalid_argument("need 2g basis labels");
  }
}

SymplecticSpace SymplecticSpace::standard(int genus) {
  return SymplecticSpace(genus, standard_labels(genus));
}

SymplecticSpace SymplecticSpace::with_labels(int genus,
                                             std::vector<std::string> labels) {
  return SymplecticSpace(genus, std::move(labels));
}

int SymplecticSpace::basis_index(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown basis label: " + label);
}

HClass::HClass(SymplecticSpace s, Vec v) : space(std::move(s)), coords(std::move(v)) {
  if (static_cast<int>(coords.size()) != space.dim()) {
    throw std::invalid_argument("class dimension must be 2g");
  }
}

HClass hclass_add(const HClass& x, const HClass& y) {
  if (!(x.space == y.space)) throw std::invalid_argument("space mismatch");
  return HClass(x.space, vec_add(x.coords, y.coords));
}

HClass hclass_scale(const Rat& c, const HClass& x) {
  return HClass(x.space, vec_scale(c, x.coords));
}

HClass basis_class(const SymplecticSpace& s, const std::string& label) {
  return HClass(s, vec_unit(s.dim(), s.basis_index(label)));
}

HClass parse_hclass(const SymplecticSpace& s, const std::string& text) {
  Vec v(s.dim(), Rat(0));
  std::istringstream in(text);
  std::string tok;
  Rat sign = 1;
  Rat coeff = 1;
  bool have_coeff = false;
  while (in >> tok) {
    if (tok == "+") {
      sign = 1;
      continue;
    }
    if (tok == "-") {
      sign = -1;
      continue;
    }
    bool numeric = true;
    for (char c : tok) {
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
        numeric = false;
        break;
      }
    }
    if (numeric) {
      if (have_coeff) throw std::invalid_argument("two coefficients in a row");
      coeff = rat_from_string(tok);
      have_coeff = true;
      continue;
    }
    int idx = s.basis_index(tok);
    v[idx] += sign * coeff;
    sign = 1;
    coeff = 1;
    have_coeff = false;
  }
  if (have_coeff) throw std::invalid_argument("trailing coefficient");
  return HClass(s, std::move(v));
}

std::string hclass_to_string(const HClass& x) {
  std::string out;
  for (int i = 0; i < x.space.dim(); ++i) {
    const Rat& c = x.coords[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c == -1) {
        out += "-";
      } else if (c != 1) {
        out += rat_to_string(c) + " ";
      }
    } else {
      out += c < 0 ? " - " : " + ";
      Rat a = abs(c);
      if (a != 1) out += rat_to_string(a) + " ";
    }
    out += x.space.labels()[i];
  }
  return out.empty() ? "0" : out;
}

MappingAction::MappingAction(SymplecticSpace s, Matrix m, std::string label)
    : space(std::move(s)), matrix(std::move(m)), provenance(std::move(label)) {
  if (matrix.rows() != space.dim() || matrix.cols() != space.dim()) {
    throw std::invalid_argument("action matrix must be 2g x 2g");
  }
  if (!(matrix.transposed() * space.form() * matrix == space.form())) {
    throw std::invalid_argument("action does not preserve the intersection form: " +
                                provenance);
  }
}

HClass apply(const MappingAction& f, const HClass& x) {
  if (!(f.space == x.space)) throw std::invalid_argument("space mismatch");
  return HClass(x.space, f.matrix.apply(x.coords));
}

MappingAction compose(const MappingAction& f, const MappingAction& g) {
  if (!(f.space == g.space)) throw std::invalid_argument("space mismatch");
  return MappingAction(f.space, f.matrix * g.matrix,
                       f.provenance + " . " + g.provenance);
}

Rat intersection(const HClass& x, const HClass& y) {
  if (!(x.space == y.space)) throw std::invalid_argument("space mismatch");
  return vec_dot(x.coords, x.space.form().apply(y.coords));
}

MappingAction twist(const HClass& x, int power) {
  if (x.is_zero()) throw std::invalid_argument("cannot twist along the zero class");
  const int n = x.space.dim();
  // T(e_j) = e_j + power * i(e_j, x) * x with i(e_j, x) = (J x)_j,
  // so M = I + power * x (J x)^T.
  Vec jx = x.space.form().apply(x.coords);
  Matrix m = Matrix::identity(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m.at(r, c) += Rat(power) * x.coords[r] * jx[c];
    }
  }
  return MappingAction(x.space, std::move(m),
                       "T[" + hclass_to_string(x) + "]^" + std::to_string(power));
}

MappingAction tau_involution(const SymplecticSpace& s) {
  if (s.genus() != 3) {
    throw std::invalid_argument("the free involution model lives on genus 3");
  }
  Matrix m(6, 6);
  // a1<->a3, b1<->b3, a2 and b2 fixed
  m.at(0, 4) = 1;
  m.at(4, 0) = 1;
  m.at(1, 5) = 1;
  m.at(5, 1) = 1;
  m.at(2, 2) = 1;
  m.at(3, 3) = 1;
  return MappingAction(s, std::move(m), "tau");
}

PushData make_push_data(const HClass& a) {
  return PushData{a, a, a, 0, 1};
}

}  // namespace fib

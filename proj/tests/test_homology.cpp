#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcert/homology.hpp"
#include "fibcert/seeded_rng.hpp"

using namespace fib;

namespace {

HClass random_class(SeededRng& rng, const SymplecticSpace& s) {
  return HClass(s, rng.vector(s.dim(), 3));
}

}  // namespace

TEST_CASE("intersection pairing on the standard basis") {
  auto s = SymplecticSpace::standard(2);
  HClass a1 = basis_class(s, "a1"), b1 = basis_class(s, "b1");
  HClass a2 = basis_class(s, "a2");
  CHECK(intersection(a1, b1) == 1);
  CHECK(intersection(b1, a1) == -1);
  CHECK(intersection(a1, a2) == 0);
  // bilinear expansion: i(a1+b1, a1-b1) = -i(a1,b1) + i(b1,a1) = -2
  CHECK(intersection(hclass_add(a1, b1),
                     hclass_add(a1, hclass_scale(Rat(-1), b1))) == -2);
}

TEST_CASE("intersection rejects mismatched spaces") {
  auto s2 = SymplecticSpace::standard(2);
  auto s3 = SymplecticSpace::standard(3);
  CHECK_THROWS_AS(intersection(basis_class(s2, "a1"), basis_class(s3, "a1")),
                  std::invalid_argument);
}

TEST_CASE("transvection on a dual pair") {
  auto s = SymplecticSpace::standard(2);
  HClass a1 = basis_class(s, "a1"), b1 = basis_class(s, "b1");
  // T_x(c) = c + i(c,x) x with i(a1,b1) = +1, so b1 picks up -a1
  CHECK(apply(twist(a1, 1), b1) ==
        hclass_add(b1, hclass_scale(Rat(-1), a1)));
  CHECK(apply(twist(a1, 1), a1) == a1);  // i(x,x) = 0
  CHECK(apply(twist(b1, 1), a1) == hclass_add(a1, b1));
}

TEST_CASE("twist powers compose additively and invert") {
  auto s = SymplecticSpace::standard(2);
  SeededRng rng(17);
  for (int t = 0; t < 10; ++t) {
    HClass x = random_class(rng, s);
    if (x.is_zero()) continue;
    int n = static_cast<int>(rng.uniform(-3, 3));
    int m = static_cast<int>(rng.uniform(-3, 3));
    if (n == 0 || m == 0 || n + m == 0) continue;
    CHECK(compose(twist(x, n), twist(x, m)).matrix == twist(x, n + m).matrix);
    CHECK((twist(x, n).matrix * twist(x, -n).matrix).is_identity());
  }
}

TEST_CASE("composite twists match the matrix product oracle") {
  auto s = SymplecticSpace::standard(2);
  HClass a1 = basis_class(s, "a1"), b1 = basis_class(s, "b1");
  MappingAction f = twist(a1, 2), g = twist(b1, -1);
  MappingAction fg = compose(f, g);
  HClass stepwise = apply(f, apply(g, a1));
  CHECK(apply(fg, a1) == stepwise);
  CHECK(fg.matrix == f.matrix * g.matrix);
}

TEST_CASE("a twist fixes the symplectic complement of its class") {
  auto s = SymplecticSpace::standard(3);
  HClass a1 = basis_class(s, "a1");
  MappingAction t = twist(a1, 5);
  for (const char* label : {"a1", "a2", "b2", "a3", "b3"}) {
    HClass c = basis_class(s, label);
    CHECK(intersection(c, a1) == 0);
    CHECK(apply(t, c) == c);
  }
}

TEST_CASE("twisting along zero is rejected") {
  auto s = SymplecticSpace::standard(1);
  CHECK_THROWS_AS(twist(HClass(s, Vec(2, Rat(0))), 1), std::invalid_argument);
}

TEST_CASE("every constructed action preserves the form") {
  auto s = SymplecticSpace::standard(2);
  Matrix bad = Matrix::identity(4);
  bad.at(0, 0) = 2;  // scaling breaks the pairing
  CHECK_THROWS_AS(MappingAction(s, bad, "bad"), std::invalid_argument);
  SeededRng rng(23);
  for (int t = 0; t < 12; ++t) {
    HClass x = random_class(rng, s);
    if (x.is_zero()) continue;
    MappingAction m = twist(x, static_cast<int>(rng.uniform(1, 3)));
    CHECK(m.matrix.transposed() * s.form() * m.matrix == s.form());
  }
}

TEST_CASE("the involution swaps the outer handles") {
  auto s = SymplecticSpace::standard(3);
  MappingAction tau = tau_involution(s);
  CHECK(apply(tau, basis_class(s, "a1")) == basis_class(s, "a3"));
  CHECK(apply(tau, basis_class(s, "b3")) == basis_class(s, "b1"));
  CHECK(apply(tau, basis_class(s, "a2")) == basis_class(s, "a2"));
  CHECK((tau.matrix * tau.matrix).is_identity());
}

TEST_CASE("the involution has trace 2 and eigenspace dims (4,2)") {
  auto s = SymplecticSpace::standard(3);
  MappingAction tau = tau_involution(s);
  Rat trace = 0;
  for (int i = 0; i < 6; ++i) trace += tau.matrix.at(i, i);
  CHECK(trace == 2);  // Lefschetz number 1 - tr + 1 = 0, as a free action needs
  CHECK(fixed_space({tau.matrix}, 6).dim() == 4);
  CHECK(kernel(tau.matrix + Matrix::identity(6)).dim() == 2);
  CHECK_THROWS_AS(tau_involution(SymplecticSpace::standard(2)),
                  std::invalid_argument);
}

TEST_CASE("class expression parsing") {
  auto s = SymplecticSpace::standard(3);
  HClass c = parse_hclass(s, "a1 + 2 b2 - a3");
  Vec expect(6, Rat(0));
  expect[0] = 1;
  expect[3] = 2;
  expect[4] = -1;
  CHECK(c.coords == expect);
  CHECK(parse_hclass(s, "3/2 a1").coords[0] == Rat(3, 2));
  CHECK(hclass_to_string(c) == "a1 + 2 b2 - a3");
  CHECK_THROWS_AS(parse_hclass(s, "a1 + q7"), std::invalid_argument);
}

TEST_CASE("push bookkeeping keeps both boundary curves homologous") {
  auto s = SymplecticSpace::standard(3);
  HClass a = parse_hclass(s, "a1 + b2");
  PushData p = make_push_data(a);
  CHECK(p.boundary_x == a);
  CHECK(p.boundary_y == a);
  CHECK(p.eps_x + p.eps_y == 1);  // exactly one curve crosses the branch point
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcert/coverbundle.hpp"

using namespace fib;

namespace {

ProductCoverSpec trivial_spec() {
  ProductCoverSpec spec;
  spec.genus_base = 2;
  spec.genus_fiber = 2;
  spec.group = FiniteGroup::elementary_abelian_2(0);
  spec.images_base.assign(4, 0);
  spec.images_fiber.assign(4, 0);
  return spec;
}

ProductCoverSpec factor16_spec() {
  ProductCoverSpec spec;
  spec.genus_base = 2;
  spec.genus_fiber = 2;
  spec.group = FiniteGroup::elementary_abelian_2(4);
  spec.images_base = {1, 2, 4, 8};
  spec.images_fiber.assign(4, 0);
  return spec;
}

ProductCoverSpec diagonal_spec() {
  ProductCoverSpec spec;
  spec.genus_base = 2;
  spec.genus_fiber = 2;
  spec.group = FiniteGroup::elementary_abelian_2(1);
  spec.images_base = {1, 0, 0, 0};
  spec.images_fiber = {1, 0, 0, 0};
  return spec;
}

}  // namespace

TEST_CASE("the trivial cover keeps both projections surjective on pi_1") {
  CoverH1Data d = cover_h1_data(trivial_spec());
  CHECK(d.b1_im_p1 == 4);
  CHECK(d.b1_im_p2 == 4);
  CHECK(d.b1_cover == 8);
  CHECK(d.index == 1);
}

TEST_CASE("pulling the mod-2 cover through one factor") {
  CoverH1Data d = cover_h1_data(factor16_spec());
  CHECK(d.index == 16);
  CHECK(d.index_p1 == 16);  // Im(p1) is the genus-17 cover group
  CHECK(d.index_p2 == 1);
  CHECK(d.b1_im_p1 == 34);
  CHECK(d.b1_im_p2 == 4);
  CHECK(d.b1_cover == 38);  // the split identity, computed independently
  CHECK(d.genus_im_p1 == riemann_hurwitz_genus(2, 16, {}));
}

TEST_CASE("the diagonal double cover has full projection images") {
  CoverH1Data d = cover_h1_data(diagonal_spec());
  CHECK(d.index == 2);
  CHECK(d.index_p1 == 1);
  CHECK(d.index_p2 == 1);
  CHECK(d.b1_im_p1 == 4);
  CHECK(d.b1_im_p2 == 4);
  CHECK(d.b1_cover == 8);  // the index-2 subgroup gains no extra homology
}

TEST_CASE("certificates are issued with the discrepancy flagged") {
  for (const ProductCoverSpec& spec :
       {trivial_spec(), factor16_spec(), diagonal_spec()}) {
    FiberingCertificate cert = cover_certificate(spec);
    REQUIRE(cert.conclusion().has_value());
    CHECK(*cert.conclusion() == "no fibering beyond the two product projections");
    auto j = cert.to_json();
    bool flagged = false;
    for (const auto& note : j["notes"]) {
      if (note.get<std::string>().find("Fib(E)=1") != std::string::npos &&
          note.get<std::string>().find("Fib(E)=2") != std::string::npos) {
        flagged = true;
      }
    }
    CHECK(flagged);
  }
}

TEST_CASE("non-generating images are refused") {
  ProductCoverSpec spec = factor16_spec();
  spec.images_base = {1, 2, 4, 0};  // misses the last basis bit
  CHECK_THROWS_AS(cover_h1_data(spec), std::invalid_argument);
}

TEST_CASE("images violating a factor relator are refused") {
  // the surface relator is a product of commutators, so abelian images
  // always satisfy it; S_3 images with [s, r] = r do not
  std::vector<std::vector<uint32_t>> s3{
      {0, 1, 2, 3, 4, 5}, {1, 2, 0, 5, 3, 4}, {2, 0, 1, 4, 5, 3},
      {3, 4, 5, 0, 1, 2}, {4, 5, 3, 2, 0, 1}, {5, 3, 4, 1, 2, 0}};
  ProductCoverSpec spec;
  spec.genus_base = 2;
  spec.genus_fiber = 2;
  spec.group = FiniteGroup::from_table(s3);
  spec.images_base = {3, 1, 0, 0};  // [a1,b1][a2,b2] |-> [3,1] = 1 != identity
  spec.images_fiber = {0, 0, 0, 0};
  CHECK_THROWS_AS(cover_h1_data(spec), std::invalid_argument);
}

TEST_CASE("spec files parse and malformed ones are rejected") {
  nlohmann::json good{
      {"genusB", 2},
      {"genusF", 2},
      {"group", "elementary-abelian-2"},
      {"rank", 1},
      {"images",
       {{"a1", 1}, {"b1", 0}, {"a2", 0}, {"b2", 0},
        {"u1", 1}, {"v1", 0}, {"u2", 0}, {"v2", 0}}}};
  ProductCoverSpec spec = ProductCoverSpec::from_json(good);
  CHECK(spec.group.order() == 2);
  nlohmann::json missing{{"genusB", 2}, {"group", "elementary-abelian-2"}};
  CHECK_THROWS_AS(ProductCoverSpec::from_json(missing), std::invalid_argument);
  nlohmann::json genus1 = good;
  genus1["genusB"] = 1;
  CHECK_THROWS_AS(ProductCoverSpec::from_json(genus1), std::invalid_argument);
}

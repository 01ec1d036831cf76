#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "smallgrp/catalog.hpp"
#include "smallgrp/degrees.hpp"
#include "smallgrp/isoclinism.hpp"
#include "smallgrp/structure.hpp"

using namespace smallgrp;

namespace {

GroupRef d8() { return catalog::get("dihedral:8"); }
GroupRef q8() { return catalog::get("quaternion8"); }

}  // namespace

TEST_CASE("the dihedral and quaternion groups of order 8 are 1-isoclinic") {
  auto w = are_n_isoclinic(d8(), q8(), 1);
  REQUIRE(w.has_value());
  CHECK(w->n == 1);
  CHECK(w->q1.base->order == 4);
  CHECK(w->q2.base->order == 4);
  CHECK(w->gamma1.group->order == 2);
  CHECK(w->gamma2.group->order == 2);
  CHECK(w->alpha.image.size() == 4);
  CHECK(w->beta.image.size() == 2);
  CHECK(w->h_image1.order() == 4);
  CHECK(check_diagram(*w));
}

TEST_CASE("groups with different commutator structure are not isoclinic") {
  CHECK_FALSE(are_n_isoclinic(d8(), catalog::get("cyclic:8"), 1).has_value());
  CHECK_FALSE(are_n_isoclinic(d8(), catalog::get("symmetric:3"), 1).has_value());
  CHECK_FALSE(
      are_n_isoclinic(catalog::get("symmetric:4"), catalog::get("alternating:4"), 1)
          .has_value());
}

TEST_CASE("all abelian groups are 1-isoclinic to the trivial group") {
  for (const char* name : {"cyclic:4", "elem_abelian:2:2", "cyclic:12"}) {
    auto w = are_n_isoclinic(catalog::get(name), catalog::get("trivial"), 1);
    INFO(name);
    REQUIRE(w.has_value());
    CHECK(check_diagram(*w));
  }
}

TEST_CASE("isomorphic groups are n-isoclinic") {
  for (int n : {1, 2}) {
    auto w = are_n_isoclinic(catalog::get("dicyclic:8"), q8(), n);
    INFO("n=" << n);
    REQUIRE(w.has_value());
    CHECK(check_diagram(*w));
  }
}

TEST_CASE("a class-2 group is 2-isoclinic to the trivial group") {
  auto w = are_n_isoclinic(d8(), catalog::get("trivial"), 2);
  REQUIRE(w.has_value());
  CHECK(w->q1.base->order == 1);
  CHECK(w->gamma1.group->order == 1);
  CHECK(check_diagram(*w));
}

TEST_CASE("the order-16 dihedral and dicyclic groups are 1-isoclinic") {
  auto w = are_n_isoclinic(catalog::get("dihedral:16"), catalog::get("dicyclic:16"), 1);
  REQUIRE(w.has_value());
  CHECK(w->q1.base->order == 8);
  CHECK(w->gamma1.group->order == 4);
  CHECK(check_diagram(*w));
}

TEST_CASE("relative isoclinism between dihedral subgroup pairs") {
  auto a = catalog::named_pair("d8-a");
  auto a2b = catalog::named_pair("d8-a2b");
  auto a2ab = catalog::named_pair("d8-a2ab");
  for (const auto* other : {&a2b, &a2ab}) {
    auto w = are_relative_n_isoclinic(a, *other, 1);
    REQUIRE(w.has_value());
    CHECK(w->h_image1.order() == 2);
    CHECK(w->h_image2.order() == 2);
    CHECK(check_diagram(*w, a, *other));
  }
  auto z_pair = subgroup_from_members(d8(), {0, 3});
  CHECK_FALSE(are_relative_n_isoclinic(z_pair, a, 1).has_value());
}

TEST_CASE("the matrix group pair matches the quotient pair") {
  // check_diagram identifies groups by object, so the pairs are fetched once.
  auto h1 = catalog::named_pair("sl25-center");
  auto h2 = catalog::named_pair("psl25-trivial");
  auto w = are_relative_n_isoclinic(h1, h2, 1);
  REQUIRE(w.has_value());
  CHECK(check_diagram(*w, h1, h2));
}

TEST_CASE("isoclinism behaves as an equivalence on samples") {
  auto self = are_n_isoclinic(d8(), d8(), 1);
  REQUIRE(self.has_value());
  CHECK(check_diagram(*self));
  CHECK(are_n_isoclinic(q8(), d8(), 1).has_value());
  CHECK_FALSE(are_n_isoclinic(catalog::get("cyclic:8"), d8(), 1).has_value());
  auto d8xc2 = catalog::get("product:dihedral:8*cyclic:2");
  CHECK(are_n_isoclinic(d8(), d8xc2, 1).has_value());
  CHECK(are_n_isoclinic(q8(), d8xc2, 1).has_value());
}

TEST_CASE("tampered witnesses fail validation") {
  auto w = are_n_isoclinic(d8(), q8(), 1);
  REQUIRE(w.has_value());
  auto broken_alpha = *w;
  std::swap(broken_alpha.alpha.image[0], broken_alpha.alpha.image[1]);
  CHECK_FALSE(check_diagram(broken_alpha));
  auto broken_beta = *w;
  std::swap(broken_beta.beta.image[0], broken_beta.beta.image[1]);
  CHECK_FALSE(check_diagram(broken_beta));
  auto broken_level = *w;
  broken_level.n = 2;
  CHECK_FALSE(check_diagram(broken_level));
}

TEST_CASE("the diagram check verifies which subgroup is carried where") {
  auto a = catalog::named_pair("d8-a");
  auto a2b = catalog::named_pair("d8-a2b");
  auto a2ab = catalog::named_pair("d8-a2ab");
  auto w = are_relative_n_isoclinic(a, a2b, 1);
  REQUIRE(w.has_value());
  CHECK(check_diagram(*w, a, a2b));
  CHECK_FALSE(check_diagram(*w, a, a2ab));
}

TEST_CASE("the induced subgroup transfers along a witness") {
  // induced_subgroup identifies the source group by object, so the witness and
  // the subgroups must share the same GroupRef.
  auto g = d8();
  auto q = q8();
  auto w = are_n_isoclinic(g, q, 1);
  REQUIRE(w.has_value());
  auto image_of_a = induced_subgroup(*w, subgroup_generated(g, {1}));
  CHECK(image_of_a.order() == 4);
  CHECK(image_of_a.parent.get() == w->q2.parent.get());
  auto image_of_z = induced_subgroup(*w, center(g));
  CHECK(same_members(image_of_z, center(q)));
  CHECK_THROWS_AS(induced_subgroup(*w, trivial_subgroup(q)), InvalidInputError);
}

TEST_CASE("input validation and budgets") {
  CHECK_THROWS_AS(are_n_isoclinic(d8(), q8(), 0), InvalidInputError);
  CHECK_THROWS_AS(
      are_relative_n_isoclinic(catalog::named_pair("d8-a"),
                               catalog::named_pair("d8-a2b"), 0),
      InvalidInputError);
  SearchOptions tight;
  tight.node_budget = 0;
  CHECK_THROWS_AS(are_n_isoclinic(d8(), q8(), 1, tight), SearchBudgetExceededError);
}

TEST_CASE("relative isoclinism on full subgroups matches the absolute notion") {
  auto f1 = full_subgroup(d8());
  auto f2 = full_subgroup(q8());
  auto w = are_relative_n_isoclinic(f1, f2, 1);
  REQUIRE(w.has_value());
  CHECK(check_diagram(*w, f1, f2));
  CHECK(are_n_isoclinic(d8(), q8(), 1).has_value());
}

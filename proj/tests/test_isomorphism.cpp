#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "smallgrp/catalog.hpp"
#include "smallgrp/isomorphism.hpp"
#include "smallgrp/structure.hpp"

using namespace smallgrp;

namespace {

GroupRef d8() { return catalog::get("dihedral:8"); }

}  // namespace

TEST_CASE("isomorphism maps are validated pointwise") {
  auto g = d8();
  std::vector<int> identity{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(is_isomorphism_map(*g, *g, identity));
  CHECK_FALSE(is_isomorphism_map(*g, *g, {0, 1, 2}));
  CHECK_FALSE(is_isomorphism_map(*g, *g, {0, 1, 2, 3, 4, 5, 6, 6}));
  CHECK_FALSE(is_isomorphism_map(*g, *g, {1, 0, 2, 3, 4, 5, 6, 7}));
  auto c4 = catalog::get("cyclic:4");
  auto klein = catalog::get("elem_abelian:2:2");
  CHECK_FALSE(is_isomorphism_map(*c4, *klein, {0, 1, 2, 3}));
}

TEST_CASE("isomorphic groups are recognized across constructions") {
  auto c4_table = catalog::get("cyclic:4");
  auto c4_perm = from_perm_generators(4, {{1, 2, 3, 0}});
  auto iso = find_isomorphism(c4_table, c4_perm);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism_map(*c4_table, *c4_perm, iso->image));
  CHECK(find_isomorphism(catalog::get("dicyclic:8"),
                         catalog::get("quaternion8"))
            .has_value());
}

TEST_CASE("non-isomorphic groups of equal order are rejected") {
  CHECK_FALSE(find_isomorphism(catalog::get("cyclic:4"),
                               catalog::get("elem_abelian:2:2"))
                  .has_value());
  CHECK_FALSE(find_isomorphism(d8(), catalog::get("quaternion8")).has_value());
  CHECK_FALSE(find_isomorphism(d8(), catalog::get("cyclic:8")).has_value());
  CHECK_FALSE(find_isomorphism(d8(), catalog::get("symmetric:3")).has_value());
}

TEST_CASE("search results are deterministic") {
  auto a = catalog::get("dicyclic:8");
  auto b = catalog::get("quaternion8");
  auto first = find_isomorphism(a, b);
  auto second = find_isomorphism(a, b);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->image == second->image);
}

TEST_CASE("search budget is enforced") {
  auto a = catalog::get("cyclic:8");
  auto b = from_perm_generators(8, {{1, 2, 3, 4, 5, 6, 7, 0}});
  SearchOptions tight;
  tight.node_budget = 0;
  CHECK_THROWS_AS(find_isomorphism(a, b, tight), SearchBudgetExceededError);
  // Invariant prechecks reject mismatches before any budget is spent.
  CHECK_FALSE(find_isomorphism(d8(), catalog::get("quaternion8"), tight).has_value());
}

TEST_CASE("automorphism groups of small groups") {
  auto check_automorphisms = [](const char* name, size_t expected) {
    auto g = catalog::get(name);
    auto autos = automorphisms(g);
    INFO(name);
    CHECK(autos.size() == expected);
    for (const auto& a : autos) CHECK(is_isomorphism_map(*g, *g, a.image));
    std::set<std::vector<int>> distinct;
    for (const auto& a : autos) distinct.insert(a.image);
    CHECK(distinct.size() == expected);
  };
  check_automorphisms("elem_abelian:2:2", 6);
  check_automorphisms("dihedral:8", 8);
  check_automorphisms("quaternion8", 24);
  check_automorphisms("cyclic:6", 2);
  CHECK_THROWS_AS(automorphisms(catalog::get("sl25")), OrderCapExceededError);
}

TEST_CASE("subgroup-constrained search") {
  auto g = d8();
  auto a = subgroup_generated(g, {1});
  auto klein1 = subgroup_from_members(g, {0, 2, 3, 7});
  auto klein2 = subgroup_from_members(g, {0, 3, 4, 5});
  auto onto_self = find_isomorphism_mapping(g, g, a, a);
  REQUIRE(onto_self.has_value());
  for (int m : a.members) CHECK(a.contains(onto_self->image[m]));
  auto swap_kleins = find_isomorphism_mapping(g, g, klein1, klein2);
  REQUIRE(swap_kleins.has_value());
  for (int m : klein1.members) CHECK(klein2.contains(swap_kleins->image[m]));
  CHECK(is_isomorphism_map(*g, *g, swap_kleins->image));
  // No automorphism carries a cyclic subgroup onto a klein subgroup.
  CHECK_FALSE(find_isomorphism_mapping(g, g, a, klein1).has_value());
  auto q8 = catalog::get("quaternion8");
  CHECK_THROWS_AS(find_isomorphism_mapping(g, g, a, trivial_subgroup(q8)),
                  InvalidInputError);
}

TEST_CASE("matrix quotient is the alternating group on five points") {
  auto psl = catalog::get("psl25");
  auto a5 = catalog::get("alternating:5");
  auto iso = find_isomorphism(psl, a5);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism_map(*psl, *a5, iso->image));
  CHECK_FALSE(find_isomorphism(catalog::get("sl25"),
                               catalog::get("symmetric:5"))
                  .has_value());
}

TEST_CASE("generator order does not affect the group, only the numbering") {
  auto g1 = from_perm_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  auto g2 = from_perm_generators(4, {{0, 3, 2, 1}, {1, 2, 3, 0}});
  CHECK(g1->order == g2->order);
  auto iso = find_isomorphism(g1, g2);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism_map(*g1, *g2, iso->image));
}

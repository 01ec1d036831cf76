#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "smallgrp/catalog.hpp"
#include "smallgrp/degrees.hpp"
#include "smallgrp/structure.hpp"

using namespace smallgrp;

namespace {

GroupRef d8() { return catalog::get("dihedral:8"); }

// Literal count of commuting pairs, independent of the library's path.
ExactRatio pair_counting_oracle(const GroupRef& g) {
  long long num = 0;
  for (int x = 0; x < g->order; ++x)
    for (int y = 0; y < g->order; ++y)
      if (g->mul(x, y) == g->mul(y, x)) ++num;
  return ExactRatio(num, static_cast<long long>(g->order) * g->order);
}

}  // namespace

TEST_CASE("commutativity degree matches pair counting and class counting") {
  for (const auto& entry : catalog::entries()) {
    auto g = catalog::get(entry.name);
    if (g->order > 24) continue;
    INFO(entry.name);
    auto d = commutativity_degree(g);
    CHECK(d == pair_counting_oracle(g));
    CHECK(d == ExactRatio(conjugacy_class_count(g), g->order));
  }
}

TEST_CASE("commutativity degrees of reference groups") {
  CHECK(commutativity_degree(d8()) == ExactRatio(5, 8));
  CHECK(commutativity_degree(catalog::get("quaternion8")) == ExactRatio(5, 8));
  CHECK(commutativity_degree(catalog::get("symmetric:3")) == ExactRatio(1, 2));
  CHECK(commutativity_degree(catalog::get("alternating:4")) == ExactRatio(1, 3));
  CHECK(commutativity_degree(catalog::get("cyclic:12")) == ExactRatio::one());
  CHECK(commutativity_degree(catalog::get("sl25")) == ExactRatio(3, 40));
  CHECK(conjugacy_class_count(catalog::get("sl25")) == 9);
}

TEST_CASE("relative degrees of the order-4 subgroups of the dihedral group") {
  auto g = d8();
  for (const char* pair : {"d8-a", "d8-a2b", "d8-a2ab"}) {
    auto h = catalog::named_pair(pair);
    INFO(pair);
    CHECK(relative_nilpotency_degree(h, 1) == ExactRatio(3, 4));
    CHECK(relative_commutativity_degree(h) == ExactRatio(3, 4));
    CHECK(relative_nilpotency_degree(h, 2) == ExactRatio::one());
  }
  CHECK(relative_nilpotency_degree(full_subgroup(g), 1) == ExactRatio(5, 8));
  CHECK(nilpotency_degree(g, 2) == ExactRatio::one());
  CHECK(nilpotency_degree(catalog::get("symmetric:3"), 2) == ExactRatio(3, 4));
}

TEST_CASE("first-order relative degree equals the pairwise definition") {
  for (const char* name : {"dihedral:8", "quaternion8", "symmetric:3"}) {
    auto g = catalog::get(name);
    for (const auto& h : all_subgroups(g)) {
      INFO(name);
      CHECK(relative_nilpotency_degree(h, 1) == relative_commutativity_degree(h));
    }
    CHECK(relative_commutativity_degree(full_subgroup(g)) ==
          commutativity_degree(g));
  }
}

TEST_CASE("dynamic programming agrees with literal enumeration") {
  for (const auto& entry : catalog::entries()) {
    auto g = catalog::get(entry.name);
    if (g->order > 16) continue;
    for (const auto& h : all_subgroups(g)) {
      for (int n = 1; n <= 2; ++n) {
        INFO(entry.name << " |H|=" << h.order() << " n=" << n);
        CHECK(relative_nilpotency_degree(h, n) == nilpotency_degree_naive(h, n));
      }
    }
  }
  for (const char* name : {"dihedral:8", "quaternion8", "symmetric:3",
                           "alternating:4", "dicyclic:12"}) {
    auto g = catalog::get(name);
    for (const auto& h : all_subgroups(g)) {
      INFO(name << " |H|=" << h.order());
      CHECK(relative_nilpotency_degree(h, 3) == nilpotency_degree_naive(h, 3));
    }
  }
}

TEST_CASE("commutator distributions") {
  auto g = d8();
  auto one_tuples = commutator_distribution(subgroup_generated(g, {1}), 1);
  for (int c = 0; c < 8; ++c)
    CHECK(one_tuples.counts[c] == ((c == 0 || c == 1 || c == 3 || c == 6) ? 1u : 0u));
  auto pairs = commutator_distribution(full_subgroup(g), 2);
  CHECK(pairs.counts[0] == 40u);
  CHECK(pairs.counts[3] == 24u);
  uint128 total = 0;
  for (auto c : pairs.counts) total += c;
  CHECK(total == 64u);
  CHECK_THROWS_AS(commutator_distribution(full_subgroup(g), 0), InvalidInputError);
  CHECK_THROWS_AS(
      commutator_distribution(full_subgroup(catalog::get("sl25")), 50),
      OverflowError);
}

TEST_CASE("sequence of degrees is nondecreasing in n") {
  for (const char* name : {"dihedral:8", "quaternion8", "symmetric:3",
                           "alternating:4", "dihedral:16"}) {
    auto g = catalog::get(name);
    for (const auto& h : all_subgroups(g)) {
      auto prev = relative_nilpotency_degree(h, 1);
      for (int n = 2; n <= 4; ++n) {
        auto cur = relative_nilpotency_degree(h, n);
        INFO(name << " |H|=" << h.order() << " n=" << n);
        CHECK_FALSE(cur < prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("degree one exactly when the relative commutator vanishes") {
  for (const char* name : {"dihedral:8", "quaternion8", "symmetric:3", "cyclic:8"}) {
    auto g = catalog::get(name);
    for (const auto& h : all_subgroups(g)) {
      for (int n = 1; n <= 3; ++n) {
        INFO(name << " |H|=" << h.order() << " n=" << n);
        CHECK((relative_nilpotency_degree(h, n) == ExactRatio::one()) ==
              (relative_gamma(h, n).order() == 1));
      }
    }
  }
}

TEST_CASE("naive enumeration honors its budget") {
  auto g = d8();
  CHECK_THROWS_AS(nilpotency_degree_naive(full_subgroup(g), 3, 10),
                  BudgetExceededError);
  CHECK_THROWS_AS(nilpotency_degree_naive(full_subgroup(g), 0), InvalidInputError);
  CHECK_THROWS_AS(relative_nilpotency_degree(full_subgroup(g), 0), InvalidInputError);
}

TEST_CASE("upper bound on the relative degree") {
  auto g = d8();
  CHECK(degree_upper_bound(catalog::named_pair("d8-a")) == ExactRatio(3, 4));
  CHECK(degree_upper_bound(full_subgroup(catalog::get("symmetric:3"))) ==
        ExactRatio(7, 12));
  CHECK(degree_upper_bound(full_subgroup(catalog::get("cyclic:6"))) ==
        ExactRatio::one());
  CHECK(degree_upper_bound(trivial_subgroup(g)) == ExactRatio::one());
}

TEST_CASE("upper bound dominates the degree on every catalog subgroup") {
  for (const auto& entry : catalog::entries()) {
    auto g = catalog::get(entry.name);
    if (g->order > 16) continue;
    for (const auto& h : all_subgroups(g)) {
      INFO(entry.name << " |H|=" << h.order());
      CHECK_FALSE(degree_upper_bound(h) < relative_nilpotency_degree(h, 1));
    }
  }
}

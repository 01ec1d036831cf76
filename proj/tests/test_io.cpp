#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "smallgrp/catalog.hpp"
#include "smallgrp/io.hpp"
#include "smallgrp/isoclinism.hpp"

using namespace smallgrp;

namespace {

GroupRef read_from(const std::string& text) {
  std::istringstream in(text);
  return read_group(in);
}

std::string written(const FiniteGroup& g) {
  std::ostringstream out;
  write_group(out, g);
  return out.str();
}

}  // namespace

TEST_CASE("table files round-trip byte for byte") {
  auto g = catalog::get("dihedral:8");
  std::string first = written(*g);
  auto reread = read_from(first);
  CHECK(reread->table == g->table);
  CHECK(written(*reread) == first);
  CHECK(written(*catalog::get("trivial")) == "group 1\n0\n");
}

TEST_CASE("blank lines and spacing are tolerated") {
  auto g = read_from("\n\ngroup 2\n\n0 1\n\n 1  0 \n\n");
  CHECK(g->order == 2);
}

TEST_CASE("permutation files close under composition") {
  auto g = read_from("perm 4\n1 2 3 0\n0 3 2 1\n");
  CHECK(g->table == catalog::get("dihedral:8")->table);
  CHECK(g->label(1) == "(0 1 2 3)");
  auto t = read_from("perm 3\n");
  CHECK(t->order == 1);
}

TEST_CASE("matrix files close under multiplication") {
  auto g = read_from("mat 3\n1 1 0 1\n1 0 1 1\n");
  CHECK(g->order == 24);
  CHECK_THROWS_AS(read_from("mat 3\n1 1 0\n"), ParseError);
  CHECK_THROWS_AS(read_from("mat 4\n1 0 0 1\n"), InvalidInputError);
  CHECK_THROWS_AS(read_from("mat 3\n1 1 1 1\n"), NotUnimodularError);
}

TEST_CASE("malformed group files raise parse errors") {
  CHECK_THROWS_AS(read_from(""), ParseError);
  CHECK_THROWS_AS(read_from("\n \n"), ParseError);
  CHECK_THROWS_AS(read_from("group\n"), ParseError);
  CHECK_THROWS_AS(read_from("group 2 extra\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_from("group 0\n"), ParseError);
  CHECK_THROWS_AS(read_from("group 99999\n"), ParseError);
  CHECK_THROWS_AS(read_from("group 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(read_from("group 2\n0 1 0\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_from("group 2\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(read_from("group 2\n0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(read_from("loop 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_from("perm 0\n"), ParseError);
  CHECK_THROWS_AS(read_from("perm 3\n0 1 3\n"), ParseError);
}

TEST_CASE("a well-formed file that is not a group is rejected by validation") {
  CHECK_THROWS_AS(read_from("group 2\n0 1\n1 1\n"), NotAGroupError);
}

TEST_CASE("index lists") {
  std::istringstream in("0 1\n2\n\n3\n");
  CHECK(read_index_list(in) == std::vector<int>{0, 1, 2, 3});
  std::istringstream neg("-1\n");
  CHECK_THROWS_AS(read_index_list(neg), ParseError);
  std::istringstream bad("1 x\n");
  CHECK_THROWS_AS(read_index_list(bad), ParseError);
}

TEST_CASE("comma-separated index parsing") {
  CHECK(parse_csv_indices("1,2,3") == std::vector<int>{1, 2, 3});
  CHECK(parse_csv_indices("7") == std::vector<int>{7});
  CHECK(parse_csv_indices(" 3 , 4 ") == std::vector<int>{3, 4});
  CHECK_THROWS_AS(parse_csv_indices(""), ParseError);
  CHECK_THROWS_AS(parse_csv_indices("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_csv_indices("1,x"), ParseError);
  CHECK_THROWS_AS(parse_csv_indices("1 2"), ParseError);
}

TEST_CASE("witness serialization names every component") {
  auto w = are_n_isoclinic(catalog::get("dihedral:8"), catalog::get("quaternion8"), 1);
  REQUIRE(w.has_value());
  std::ostringstream out;
  write_witness(out, *w);
  std::string text = out.str();
  for (const char* needle :
       {"n: 1\n", "alpha:", "beta:", "q1-coset-reps:", "q2-coset-reps:",
        "gamma1-members:", "gamma2-members:", "h-image1:", "h-image2:"}) {
    INFO(needle);
    CHECK(text.find(needle) != std::string::npos);
  }
  auto again = are_n_isoclinic(catalog::get("dihedral:8"), catalog::get("quaternion8"), 1);
  REQUIRE(again.has_value());
  std::ostringstream out2;
  write_witness(out2, *again);
  CHECK(out2.str() == text);
}

TEST_CASE("subgroup descriptions") {
  auto g = catalog::get("dihedral:8");
  CHECK(describe_subgroup(trivial_subgroup(g)) == "{0}");
  CHECK(describe_subgroup(subgroup_from_members(g, {0, 3})) == "{0,3}");
  CHECK(describe_subgroup(subgroup_generated(g, {1})) == "{0,1,3,6}");
}

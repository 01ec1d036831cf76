#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "smallgrp/error.hpp"
#include "smallgrp/group.hpp"
#include "smallgrp/isoclinism.hpp"
#include "smallgrp/structure.hpp"

namespace smallgrp {

namespace detail {

inline std::vector<long long> parse_int_line(const std::string& line) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long v;
  while (ss >> v) out.push_back(v);
  std::string rest;
  if (ss.fail() && !ss.eof() && ss >> rest)
    throw ParseError("non-numeric token in line: " + line);
  ss.clear();
  if (ss >> rest) throw ParseError("non-numeric token in line: " + line);
  return out;
}

}  // namespace detail

// Formats: "group <order>" + order rows of order indices; "perm <degree>" +
// one generator image line each; "mat <p>" + one generator per line as
// 4 integers. Blank lines are ignored.
inline GroupRef read_group(std::istream& in) {
  std::string line;
  std::string keyword;
  long long param = -1;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    if (!(ss >> keyword)) continue;  // blank line
    if (!(ss >> param)) throw ParseError("header needs a numeric parameter: " + line);
    std::string rest;
    if (ss >> rest) throw ParseError("trailing tokens in header: " + line);
    break;
  }
  if (keyword.empty()) throw ParseError("empty group file");
  std::vector<std::vector<long long>> rows;
  while (std::getline(in, line)) {
    auto vals = detail::parse_int_line(line);
    if (!vals.empty()) rows.push_back(std::move(vals));
  }
  if (keyword == "group") {
    if (param < 1 || param > kDefaultClosureCap)
      throw ParseError("group order out of range: " + std::to_string(param));
    int order = static_cast<int>(param);
    if (static_cast<int>(rows.size()) != order)
      throw ParseError("expected " + std::to_string(order) + " table rows, got " +
                       std::to_string(rows.size()));
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(order) * order);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != order)
        throw ParseError("table row has wrong length");
      for (long long v : row) {
        if (v < 0 || v >= order) throw ParseError("table entry out of range");
        flat.push_back(static_cast<int>(v));
      }
    }
    return from_flat_table(order, std::move(flat), {}, true);
  }
  if (keyword == "perm") {
    if (param < 1) throw ParseError("permutation degree must be positive");
    std::vector<std::vector<int>> gens;
    for (const auto& row : rows) {
      std::vector<int> g;
      for (long long v : row) {
        if (v < 0 || v >= param) throw ParseError("permutation image out of range");
        g.push_back(static_cast<int>(v));
      }
      gens.push_back(std::move(g));
    }
    return from_perm_generators(static_cast<int>(param), gens);
  }
  if (keyword == "mat") {
    std::vector<std::array<int, 4>> gens;
    for (const auto& row : rows) {
      if (row.size() != 4) throw ParseError("matrix generator needs 4 entries");
      gens.push_back({static_cast<int>(row[0]), static_cast<int>(row[1]),
                      static_cast<int>(row[2]), static_cast<int>(row[3])});
    }
    return from_matrix_generators(static_cast<int>(param), gens);
  }
  throw ParseError("unknown format keyword: " + keyword);
}

inline void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "group " << g.order << "\n";
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
}

// One integer per line; used for subgroup member/generator files.
inline std::vector<int> read_index_list(std::istream& in) {
  std::string line;
  std::vector<int> out;
  while (std::getline(in, line)) {
    auto vals = detail::parse_int_line(line);
    for (long long v : vals) {
      if (v < 0 || v > 1000000000) throw ParseError("index out of range");
      out.push_back(static_cast<int>(v));
    }
  }
  return out;
}

inline std::vector<int> parse_csv_indices(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  std::istringstream ss(csv);
  while (std::getline(ss, cur, ',')) {
    auto vals = detail::parse_int_line(cur);
    if (vals.size() != 1) throw ParseError("bad index list: " + csv);
    out.push_back(static_cast<int>(vals[0]));
  }
  if (out.empty()) throw ParseError("empty index list");
  return out;
}

namespace detail {

inline void write_array(std::ostream& out, const std::string& name,
                        const std::vector<int>& values) {
  out << name << ":";
  for (int v : values) out << ' ' << v;
  out << "\n";
}

}  // namespace detail

// alpha and beta as image arrays over quotient/commutator-subgroup indices,
// plus the tables needed to reinterpret them in the parent groups.
inline void write_witness(std::ostream& out, const IsoclinismWitness& w) {
  out << "n: " << w.n << "\n";
  detail::write_array(out, "alpha", w.alpha.image);
  detail::write_array(out, "beta", w.beta.image);
  detail::write_array(out, "q1-coset-reps", w.q1.coset_reps);
  detail::write_array(out, "q2-coset-reps", w.q2.coset_reps);
  detail::write_array(out, "gamma1-members", w.gamma1.to_parent);
  detail::write_array(out, "gamma2-members", w.gamma2.to_parent);
  detail::write_array(out, "h-image1", w.h_image1.members);
  detail::write_array(out, "h-image2", w.h_image2.members);
}

inline std::string describe_subgroup(const Subgroup& h) {
  std::string s = "{";
  for (size_t i = 0; i < h.members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(h.members[i]);
  }
  return s + "}";
}

}  // namespace smallgrp

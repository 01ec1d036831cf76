#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallgrp/error.hpp"
#include "smallgrp/group.hpp"
#include "smallgrp/structure.hpp"

namespace smallgrp {
namespace catalog {

inline constexpr int kCatalogOrderCap = 240;

struct CatalogEntry {
  std::string name;
  std::string description;
};

namespace detail2 {

inline std::optional<long long> parse_uint(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void check_order_cap(long long order, const std::string& name) {
  if (order > kCatalogOrderCap)
    throw ClosureTooLargeError("catalog group " + name + " would have order " +
                               std::to_string(order) + ", cap is " +
                               std::to_string(kCatalogOrderCap));
}

inline GroupRef cyclic(long long n) {
  int order = static_cast<int>(n);
  std::vector<int> flat(static_cast<size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      flat[static_cast<size_t>(i) * order + j] = (i + j) % order;
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i)
    labels[i] = i == 0 ? "e" : (i == 1 ? "x" : "x^" + std::to_string(i));
  return from_flat_table(order, std::move(flat), std::move(labels), true);
}

// Order m = 2n; element 1 is the rotation a of order n, element 2 the
// reflection b, with a^n = b^2 = (ab)^2 = e.
inline GroupRef dihedral(long long m) {
  int n = static_cast<int>(m / 2);
  std::vector<std::vector<int>> gens;
  if (n == 2) {
    gens = {{1, 0, 3, 2}, {2, 3, 0, 1}};
  } else {
    std::vector<int> a(n), b(n);
    for (int x = 0; x < n; ++x) {
      a[x] = (x + 1) % n;
      b[x] = (n - x) % n;
    }
    gens = {a, b};
  }
  GroupRef g = from_perm_generators(n == 2 ? 4 : n, gens);
  std::vector<std::string> labels(g->order);
  int cur = 0;
  for (int k = 0; k < n; ++k) {
    std::string ak = k == 0 ? "e" : (k == 1 ? "a" : "a^" + std::to_string(k));
    labels[cur] = ak;
    labels[g->mul(cur, 2)] = k == 0 ? "b" : ak + "*b";
    cur = g->mul(cur, 1);
  }
  return with_labels(g, std::move(labels));
}

inline GroupRef quaternion8() {
  // i and j as unimodular matrices over Z/3: i^2 = j^2 = (ij)^2 = -1.
  GroupRef g = from_matrix_generators(3, {{{0, 2, 1, 0}}, {{1, 1, 1, 2}}});
  std::vector<std::string> labels(8);
  int m1 = g->mul(1, 1);
  int k = g->mul(1, 2);
  labels[0] = "1";
  labels[1] = "i";
  labels[2] = "j";
  labels[m1] = "-1";
  labels[k] = "k";
  labels[g->mul(m1, 1)] = "-i";
  labels[g->mul(m1, 2)] = "-j";
  labels[g->mul(m1, k)] = "-k";
  return with_labels(g, std::move(labels));
}

// Order m = 4n on normal forms a^i b^j, i < 2n, j < 2, index i + 2n*j, with
// a^{2n} = e, b^2 = a^n, b a^k = a^{-k} b.
inline GroupRef dicyclic(long long m) {
  int n = static_cast<int>(m / 4);
  int two_n = 2 * n;
  int order = static_cast<int>(m);
  auto idx = [two_n](int i, int j) { return i + two_n * j; };
  std::vector<int> flat(static_cast<size_t>(order) * order);
  for (int i = 0; i < two_n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < two_n; ++k)
        for (int l = 0; l < 2; ++l) {
          int x = idx(i, j), y = idx(k, l);
          int v;
          if (j == 0 && l == 0) v = idx((i + k) % two_n, 0);
          else if (j == 0 && l == 1) v = idx((i + k) % two_n, 1);
          else if (j == 1 && l == 0) v = idx(((i - k) % two_n + two_n) % two_n, 1);
          else v = idx(((i - k + n) % two_n + two_n) % two_n, 0);
          flat[static_cast<size_t>(x) * order + y] = v;
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < two_n; ++i) {
    std::string ai = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    labels[idx(i, 0)] = ai;
    labels[idx(i, 1)] = i == 0 ? "b" : ai + "*b";
  }
  return from_flat_table(order, std::move(flat), std::move(labels), true);
}

inline GroupRef symmetric(long long n) {
  if (n <= 1) return trivial_group();
  int deg = static_cast<int>(n);
  std::vector<int> cycle(deg), swap01(deg);
  for (int x = 0; x < deg; ++x) {
    cycle[x] = (x + 1) % deg;
    swap01[x] = x;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return from_perm_generators(deg, {swap01, cycle});
}

inline GroupRef alternating(long long n) {
  if (n <= 2) return trivial_group();
  int deg = static_cast<int>(n);
  std::vector<int> three(deg);
  for (int x = 0; x < deg; ++x) three[x] = x;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return from_perm_generators(deg, {three});
  if (n == 4) {
    std::vector<int> other{0, 2, 3, 1};  // (1 2 3)
    return from_perm_generators(deg, {three, other});
  }
  std::vector<int> five{1, 2, 3, 4, 0};  // (0 1 2 3 4)
  return from_perm_generators(deg, {three, five});
}

inline GroupRef elem_abelian(long long p, long long k) {
  long long order = 1;
  for (long long i = 0; i < k; ++i) {
    order *= p;
    if (order > kCatalogOrderCap)
      throw ClosureTooLargeError("elem_abelian:" + std::to_string(p) + ":" +
                                 std::to_string(k) + " exceeds the catalog order cap");
  }
  int ord = static_cast<int>(order);
  int pp = static_cast<int>(p), kk = static_cast<int>(k);
  std::vector<int> flat(static_cast<size_t>(ord) * ord);
  for (int i = 0; i < ord; ++i)
    for (int j = 0; j < ord; ++j) {
      int x = i, y = j, v = 0, scale = 1;
      for (int d = 0; d < kk; ++d) {
        v += ((x % pp) + (y % pp)) % pp * scale;
        scale *= pp;
        x /= pp;
        y /= pp;
      }
      flat[static_cast<size_t>(i) * ord + j] = v;
    }
  std::vector<std::string> labels(ord);
  for (int i = 0; i < ord; ++i) {
    std::string s = "(";
    int x = i;
    for (int d = 0; d < kk; ++d) {
      if (d) s += ",";
      s += std::to_string(x % pp);
      x /= pp;
    }
    labels[i] = s + ")";
  }
  return from_flat_table(ord, std::move(flat), std::move(labels), true);
}

}  // namespace detail2

inline GroupRef get(const std::string& name);

namespace detail2 {

inline GroupRef product(const std::string& expr) {
  auto star = expr.find('*');
  if (star == std::string::npos || star == 0 || star + 1 >= expr.size())
    throw UnknownNameError("malformed product name: product:" + expr);
  GroupRef g1 = get(expr.substr(0, star));
  GroupRef g2 = get(expr.substr(star + 1));
  long long order = static_cast<long long>(g1->order) * g2->order;
  check_order_cap(order, "product:" + expr);
  return direct_product(g1, g2);
}

}  // namespace detail2

inline GroupRef get(const std::string& name) {
  using namespace detail2;
  if (name == "trivial") return trivial_group();
  if (name == "quaternion8") return quaternion8();
  if (name == "sl25")
    return from_matrix_generators(5, {{{1, 1, 0, 1}}, {{1, 0, 1, 1}}});
  if (name == "psl25") {
    GroupRef sl = get("sl25");
    return quotient(center(sl)).base;
  }
  auto starts = [&](const char* p) {
    std::string prefix(p);
    return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0;
  };
  auto bad = [&]() -> UnknownNameError {
    return UnknownNameError("unknown catalog name: " + name);
  };
  if (starts("cyclic:")) {
    auto n = parse_uint(name.substr(7));
    if (!n || *n < 1) throw bad();
    check_order_cap(*n, name);
    return cyclic(*n);
  }
  if (starts("dihedral:")) {
    auto m = parse_uint(name.substr(9));
    if (!m || *m < 4 || *m % 2 != 0) throw bad();
    check_order_cap(*m, name);
    return dihedral(*m);
  }
  if (starts("dicyclic:")) {
    auto m = parse_uint(name.substr(9));
    if (!m || *m < 8 || *m % 4 != 0) throw bad();
    check_order_cap(*m, name);
    return dicyclic(*m);
  }
  if (starts("symmetric:")) {
    auto n = parse_uint(name.substr(10));
    if (!n || *n < 1 || *n > 5) throw bad();
    return symmetric(*n);
  }
  if (starts("alternating:")) {
    auto n = parse_uint(name.substr(12));
    if (!n || *n < 1 || *n > 5) throw bad();
    return alternating(*n);
  }
  if (starts("elem_abelian:")) {
    std::string rest = name.substr(13);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw bad();
    auto p = parse_uint(rest.substr(0, colon));
    auto k = parse_uint(rest.substr(colon + 1));
    if (!p || !k || !is_prime(*p) || *k < 1) throw bad();
    return elem_abelian(*p, *k);
  }
  if (starts("product:")) return product(name.substr(8));
  throw bad();
}

// (H, G) pairs named by the verification suites; H carries G as its parent.
inline Subgroup named_pair(const std::string& name) {
  if (name == "d8-a") {
    GroupRef g = get("dihedral:8");
    return subgroup_generated(g, {1});
  }
  if (name == "d8-a2b") {
    GroupRef g = get("dihedral:8");
    return subgroup_generated(g, {g->mul(1, 1), 2});
  }
  if (name == "d8-a2ab") {
    GroupRef g = get("dihedral:8");
    return subgroup_generated(g, {g->mul(1, 1), g->mul(1, 2)});
  }
  if (name == "sl25-center") {
    GroupRef g = get("sl25");
    return center(g);
  }
  if (name == "psl25-trivial") {
    GroupRef g = get("psl25");
    return trivial_subgroup(g);
  }
  throw UnknownNameError("unknown named pair: " + name);
}

inline std::vector<std::string> named_pair_names() {
  return {"d8-a", "d8-a2b", "d8-a2ab", "sl25-center", "psl25-trivial"};
}

// The fixed sweep list behind `catalog list` and the verification defaults.
inline std::vector<CatalogEntry> entries() {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& n, const std::string& d) {
    out.push_back({n, d});
  };
  add("trivial", "trivial group");
  for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 24, 32})
    add("cyclic:" + std::to_string(n), "cyclic group of order " + std::to_string(n));
  add("elem_abelian:2:2", "elementary abelian group of order 4");
  add("elem_abelian:2:3", "elementary abelian group of order 8");
  add("elem_abelian:2:4", "elementary abelian group of order 16");
  add("elem_abelian:3:2", "elementary abelian group of order 9");
  add("elem_abelian:3:3", "elementary abelian group of order 27");
  add("elem_abelian:5:2", "elementary abelian group of order 25");
  for (int m : {6, 8, 10, 12, 14, 16, 20, 24, 32})
    add("dihedral:" + std::to_string(m), "dihedral group of order " + std::to_string(m));
  add("quaternion8", "quaternion group of order 8");
  for (int m : {8, 12, 16, 20, 24, 32})
    add("dicyclic:" + std::to_string(m), "dicyclic group of order " + std::to_string(m));
  add("symmetric:3", "symmetric group on 3 points");
  add("symmetric:4", "symmetric group on 4 points");
  add("symmetric:5", "symmetric group on 5 points");
  add("alternating:4", "alternating group on 4 points");
  add("alternating:5", "alternating group on 5 points");
  add("sl25", "2x2 unimodular matrices over Z/5, order 120");
  add("psl25", "quotient of sl25 by its center, order 60");
  add("product:dihedral:8*cyclic:2", "direct product, order 16");
  add("product:quaternion8*cyclic:2", "direct product, order 16");
  add("product:symmetric:3*cyclic:2", "direct product, order 12");
  add("product:dihedral:8*cyclic:4", "direct product, order 32");
  add("product:dihedral:8*elem_abelian:2:2", "direct product, order 32");
  return out;
}

}  // namespace catalog
}  // namespace smallgrp

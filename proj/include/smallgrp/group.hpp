#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "smallgrp/error.hpp"

namespace smallgrp {

// Immutable finite group on indices 0..order-1 with a dense multiplication
// table. Identity is always index 0.
class FiniteGroup {
public:
  int order = 1;
  std::vector<int> table;     // row-major: table[i*order + j] = i*j
  std::vector<int> inverses;  // two-sided inverses
  std::vector<std::string> labels;  // optional display strings, empty or size order

  int mul(int i, int j) const { return table[static_cast<size_t>(i) * order + j]; }
  int inv(int i) const { return inverses[i]; }

  bool has_labels() const { return !labels.empty(); }
  std::string label(int i) const {
    return labels.empty() ? "g" + std::to_string(i) : labels[i];
  }
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

namespace detail {

// Checks all group axioms on a raw table and returns the identity index.
// Reported indices refer to the numbering of the input table.
inline int validate_table(int order, const std::vector<int>& t) {
  using Kind = NotAGroupError::Kind;
  if (order <= 0)
    throw NotAGroupError(Kind::Shape, "order must be positive");
  if (t.size() != static_cast<size_t>(order) * order)
    throw NotAGroupError(Kind::Shape, "table is not order x order");
  for (size_t idx = 0; idx < t.size(); ++idx) {
    if (t[idx] < 0 || t[idx] >= order) {
      int i = static_cast<int>(idx) / order, j = static_cast<int>(idx) % order;
      throw NotAGroupError(Kind::Shape,
                           "entry out of range at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")",
                           i, j);
    }
  }
  std::vector<char> seen(order);
  for (int i = 0; i < order; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < order; ++j) {
      int v = t[static_cast<size_t>(i) * order + j];
      if (seen[v])
        throw NotAGroupError(Kind::LatinRow,
                             "row " + std::to_string(i) + " repeats value " +
                                 std::to_string(v),
                             i, j);
      seen[v] = 1;
    }
  }
  for (int j = 0; j < order; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < order; ++i) {
      int v = t[static_cast<size_t>(i) * order + j];
      if (seen[v])
        throw NotAGroupError(Kind::LatinCol,
                             "column " + std::to_string(j) + " repeats value " +
                                 std::to_string(v),
                             i, j);
      seen[v] = 1;
    }
  }
  int e = -1;
  for (int c = 0; c < order && e < 0; ++c) {
    bool ok = true;
    for (int j = 0; j < order && ok; ++j)
      ok = t[static_cast<size_t>(c) * order + j] == j &&
           t[static_cast<size_t>(j) * order + c] == j;
    if (ok) e = c;
  }
  if (e < 0) throw NotAGroupError(Kind::Identity, "no two-sided identity element");
  for (int i = 0; i < order; ++i) {
    int r = -1;
    for (int j = 0; j < order; ++j)
      if (t[static_cast<size_t>(i) * order + j] == e) {
        r = j;
        break;
      }
    if (t[static_cast<size_t>(r) * order + i] != e)
      throw NotAGroupError(Kind::Inverse,
                           "element " + std::to_string(i) +
                               " has no two-sided inverse",
                           i, r);
  }
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      int ij = t[static_cast<size_t>(i) * order + j];
      for (int k = 0; k < order; ++k) {
        int jk = t[static_cast<size_t>(j) * order + k];
        if (t[static_cast<size_t>(ij) * order + k] !=
            t[static_cast<size_t>(i) * order + jk])
          throw NotAGroupError(Kind::Associativity,
                               "associativity fails at triple (" +
                                   std::to_string(i) + "," + std::to_string(j) +
                                   "," + std::to_string(k) + ")",
                               i, j, k);
      }
    }
  return e;
}

inline GroupRef make_group(int order, std::vector<int> flat,
                           std::vector<std::string> labels, bool validate) {
  int e = 0;
  if (validate) e = validate_table(order, flat);
  if (e != 0) {
    // Swap indices 0 and e so the identity lands at 0.
    auto sigma = [e](int x) { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<int> relabeled(flat.size());
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j)
        relabeled[static_cast<size_t>(sigma(i)) * order + sigma(j)] =
            sigma(flat[static_cast<size_t>(i) * order + j]);
    flat = std::move(relabeled);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }
  auto g = std::make_shared<FiniteGroup>();
  g->order = order;
  g->table = std::move(flat);
  g->labels = std::move(labels);
  g->inverses.assign(order, 0);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (g->table[static_cast<size_t>(i) * order + j] == 0) {
        g->inverses[i] = j;
        break;
      }
  return g;
}

inline std::string cycle_notation(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::string out;
  std::vector<char> done(n);
  for (int s = 0; s < n; ++s) {
    if (done[s] || p[s] == s) continue;
    out.push_back('(');
    int x = s;
    bool first = true;
    while (!done[x]) {
      if (!first) out.push_back(' ');
      out += std::to_string(x);
      done[x] = 1;
      x = p[x];
      first = false;
    }
    out.push_back(')');
  }
  return out.empty() ? "e" : out;
}

}  // namespace detail

inline constexpr int kDefaultClosureCap = 20000;

inline GroupRef from_mult_table(const std::vector<std::vector<int>>& table) {
  int order = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw NotAGroupError(NotAGroupError::Kind::Shape, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return detail::make_group(order, std::move(flat), {}, true);
}

inline GroupRef from_flat_table(int order, std::vector<int> flat,
                                std::vector<std::string> labels = {},
                                bool validate = true) {
  return detail::make_group(order, std::move(flat), std::move(labels), validate);
}

// Breadth-first closure of permutation generators under composition
// (p*q applies q first). Elements are numbered in discovery order from the
// identity; labels are cycle notation.
inline GroupRef from_perm_generators(int degree,
                                     const std::vector<std::vector<int>>& generators,
                                     int closure_cap = kDefaultClosureCap,
                                     bool validate = true) {
  if (degree <= 0) throw InvalidInputError("permutation degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw InvalidInputError("generator image list has wrong length");
    std::vector<char> hit(degree);
    for (int v : g) {
      if (v < 0 || v >= degree || hit[v])
        throw InvalidInputError("generator is not a permutation");
      hit[v] = 1;
    }
  }
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  elems.push_back(id);
  index.emplace(id, 0);
  for (size_t h = 0; h < elems.size(); ++h) {
    for (const auto& g : generators) {
      std::vector<int> p(degree);
      for (int x = 0; x < degree; ++x) p[x] = elems[h][g[x]];
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (static_cast<int>(elems.size()) > closure_cap)
          throw ClosureTooLargeError("permutation closure exceeds cap of " +
                                     std::to_string(closure_cap));
      }
    }
  }
  int order = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<size_t>(order) * order);
  std::vector<int> p(degree);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      for (int x = 0; x < degree; ++x) p[x] = elems[i][elems[j][x]];
      flat[static_cast<size_t>(i) * order + j] = index.at(p);
    }
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) labels[i] = detail::cycle_notation(elems[i]);
  return detail::make_group(order, std::move(flat), std::move(labels), validate);
}

// Closure of 2x2 matrices over Z/p under multiplication mod p. Generators
// must have determinant 1.
inline GroupRef from_matrix_generators(int p,
                                       const std::vector<std::array<int, 4>>& generators,
                                       int closure_cap = kDefaultClosureCap,
                                       bool validate = true) {
  if (p < 2) throw InvalidInputError("modulus must be at least 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidInputError("modulus must be prime");
  auto norm = [p](int x) { return ((x % p) + p) % p; };
  std::vector<std::array<int, 4>> gens;
  for (auto m : generators) {
    for (int& x : m) x = norm(x);
    int det = norm(m[0] * m[3] - m[1] * m[2]);
    if (det != 1)
      throw NotUnimodularError("generator determinant is " + std::to_string(det) +
                               " mod " + std::to_string(p) + ", expected 1");
    gens.push_back(m);
  }
  auto matmul = [p](const std::array<int, 4>& x, const std::array<int, 4>& y) {
    return std::array<int, 4>{(x[0] * y[0] + x[1] * y[2]) % p,
                              (x[0] * y[1] + x[1] * y[3]) % p,
                              (x[2] * y[0] + x[3] * y[2]) % p,
                              (x[2] * y[1] + x[3] * y[3]) % p};
  };
  std::vector<std::array<int, 4>> elems;
  std::map<std::array<int, 4>, int> index;
  std::array<int, 4> id{1, 0, 0, 1};
  elems.push_back(id);
  index.emplace(id, 0);
  for (size_t h = 0; h < elems.size(); ++h) {
    for (const auto& g : gens) {
      auto m = matmul(elems[h], g);
      if (index.emplace(m, static_cast<int>(elems.size())).second) {
        elems.push_back(m);
        if (static_cast<int>(elems.size()) > closure_cap)
          throw ClosureTooLargeError("matrix closure exceeds cap of " +
                                     std::to_string(closure_cap));
      }
    }
  }
  int order = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      flat[static_cast<size_t>(i) * order + j] = index.at(matmul(elems[i], elems[j]));
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) {
    const auto& m = elems[i];
    labels[i] = "[" + std::to_string(m[0]) + " " + std::to_string(m[1]) + "; " +
                std::to_string(m[2]) + " " + std::to_string(m[3]) + "]";
  }
  return detail::make_group(order, std::move(flat), std::move(labels), validate);
}

// Componentwise product; element (i,j) has index i*|G2|+j.
inline GroupRef direct_product(const GroupRef& g1, const GroupRef& g2,
                               int closure_cap = kDefaultClosureCap,
                               bool validate = true) {
  long long ord = static_cast<long long>(g1->order) * g2->order;
  if (ord > closure_cap)
    throw ClosureTooLargeError("product order " + std::to_string(ord) +
                               " exceeds cap of " + std::to_string(closure_cap));
  int order = static_cast<int>(ord);
  int n2 = g2->order;
  std::vector<int> flat(static_cast<size_t>(order) * order);
  for (int i1 = 0; i1 < g1->order; ++i1)
    for (int j1 = 0; j1 < n2; ++j1)
      for (int i2 = 0; i2 < g1->order; ++i2)
        for (int j2 = 0; j2 < n2; ++j2)
          flat[static_cast<size_t>(i1 * n2 + j1) * order + (i2 * n2 + j2)] =
              g1->mul(i1, i2) * n2 + g2->mul(j1, j2);
  std::vector<std::string> labels;
  if (g1->has_labels() && g2->has_labels()) {
    labels.resize(order);
    for (int i = 0; i < g1->order; ++i)
      for (int j = 0; j < n2; ++j)
        labels[static_cast<size_t>(i) * n2 + j] =
            "(" + g1->label(i) + "," + g2->label(j) + ")";
  }
  return detail::make_group(order, std::move(flat), std::move(labels), validate);
}

inline GroupRef trivial_group() { return from_flat_table(1, {0}, {"e"}, false); }

inline GroupRef with_labels(const GroupRef& g, std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != g->order)
    throw InvalidInputError("label count does not match group order");
  auto copy = std::make_shared<FiniteGroup>(*g);
  copy->labels = std::move(labels);
  return copy;
}

// Left-normed commutator [x1,...,xk] = [[x1,...,x{k-1}],xk], [x,y] = x'y'xy.
// A single element is returned unchanged.
inline int commutator(const FiniteGroup& g, const std::vector<int>& xs) {
  if (xs.empty()) throw EmptyInputError("commutator of an empty list");
  for (int x : xs)
    if (x < 0 || x >= g.order) throw InvalidInputError("element index out of range");
  int acc = xs[0];
  for (size_t k = 1; k < xs.size(); ++k) {
    int y = xs[k];
    acc = g.mul(g.mul(g.mul(g.inv(acc), g.inv(y)), acc), y);
  }
  return acc;
}

inline int element_order(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order) throw InvalidInputError("element index out of range");
  int acc = x, k = 1;
  while (acc != 0) {
    acc = g.mul(acc, x);
    ++k;
  }
  return k;
}

}  // namespace smallgrp

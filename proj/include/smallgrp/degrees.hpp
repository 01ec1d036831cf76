#pragma once

#include <vector>

#include "smallgrp/error.hpp"
#include "smallgrp/group.hpp"
#include "smallgrp/rational.hpp"
#include "smallgrp/structure.hpp"

namespace smallgrp {

// counts[c] = number of k-tuples over H whose left-normed commutator is c.
// Sum of counts is |H|^k.
struct CommutatorDistribution {
  int k = 1;
  std::vector<uint128> counts;
};

namespace detail {

// |H|^n * |G| as a checked 128-bit count; throws instead of wrapping.
inline uint128 tuple_count_checked(uint128 h, int n, uint128 g) {
  uint128 total = g;
  for (int i = 0; i < n; ++i) total = checked_mul_u(total, h);
  return total;
}

inline std::vector<int> centralizer_sizes(const FiniteGroup& g) {
  std::vector<int> out(g.order, 0);
  for (int c = 0; c < g.order; ++c)
    for (int x = 0; x < g.order; ++x)
      if (g.mul(c, x) == g.mul(x, c)) ++out[c];
  return out;
}

}  // namespace detail

inline CommutatorDistribution commutator_distribution(const Subgroup& h, int k) {
  if (k < 1) throw InvalidInputError("tuple length must be at least 1");
  const FiniteGroup& g = *h.parent;
  detail::tuple_count_checked(h.members.size(), k, 1);
  CommutatorDistribution d;
  d.k = k;
  d.counts.assign(g.order, 0);
  for (int m : h.members) d.counts[m] += 1;
  for (int step = 2; step <= k; ++step) {
    std::vector<uint128> next(g.order, 0);
    for (int c = 0; c < g.order; ++c) {
      if (d.counts[c] == 0) continue;
      int ci = g.inv(c);
      for (int x : h.members) {
        int v = g.mul(g.mul(g.mul(ci, g.inv(x)), c), x);
        next[v] = detail::checked_add_u(next[v], d.counts[c]);
      }
    }
    d.counts = std::move(next);
  }
  return d;
}

// Fraction of commuting pairs (x,y) in G^2.
inline ExactRatio commutativity_degree(const GroupRef& g) {
  uint128 num = 0;
  for (int x = 0; x < g->order; ++x)
    for (int y = 0; y < g->order; ++y)
      if (g->mul(x, y) == g->mul(y, x)) ++num;
  uint128 den = detail::checked_mul_u(static_cast<uint128>(g->order),
                                      static_cast<uint128>(g->order));
  return ExactRatio::from_counts(num, den);
}

// Fraction of (n+1)-tuples over H^n x G with trivial left-normed commutator,
// via the distribution of [h1,...,hn] and centralizer sizes:
// [h1,...,hn,g] = 1 iff g centralizes [h1,...,hn].
inline ExactRatio relative_nilpotency_degree(const Subgroup& h, int n) {
  if (n < 1) throw InvalidInputError("nilpotency degree requires n >= 1");
  const FiniteGroup& g = *h.parent;
  uint128 den = detail::tuple_count_checked(h.members.size(), n,
                                            static_cast<uint128>(g.order));
  CommutatorDistribution dist = commutator_distribution(h, n);
  std::vector<int> cent = detail::centralizer_sizes(g);
  uint128 num = 0;
  for (int c = 0; c < g.order; ++c)
    if (dist.counts[c] != 0)
      num = detail::checked_add_u(
          num, detail::checked_mul_u(dist.counts[c], static_cast<uint128>(cent[c])));
  return ExactRatio::from_counts(num, den);
}

inline ExactRatio nilpotency_degree(const GroupRef& g, int n) {
  return relative_nilpotency_degree(full_subgroup(g), n);
}

inline ExactRatio relative_commutativity_degree(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  uint128 num = 0;
  for (int x : h.members)
    for (int y = 0; y < g.order; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++num;
  uint128 den = detail::checked_mul_u(static_cast<uint128>(h.members.size()),
                                      static_cast<uint128>(g.order));
  return ExactRatio::from_counts(num, den);
}

// Literal enumeration of all |H|^n * |G| tuples; oracle for the DP path.
inline ExactRatio nilpotency_degree_naive(const Subgroup& h, int n,
                                          unsigned long long budget = 100000000ull) {
  if (n < 1) throw InvalidInputError("nilpotency degree requires n >= 1");
  const FiniteGroup& g = *h.parent;
  uint128 den = detail::tuple_count_checked(h.members.size(), n,
                                            static_cast<uint128>(g.order));
  if (den > static_cast<uint128>(budget))
    throw BudgetExceededError("naive enumeration of " + to_string_128(den) +
                              " tuples exceeds budget of " + std::to_string(budget));
  int hsize = h.order();
  std::vector<int> odo(n, 0);
  uint128 num = 0;
  for (;;) {
    int c = h.members[odo[0]];
    for (int k = 1; k < n; ++k) {
      int y = h.members[odo[k]];
      c = g.mul(g.mul(g.mul(g.inv(c), g.inv(y)), c), y);
    }
    for (int x = 0; x < g.order; ++x) {
      int v = g.mul(g.mul(g.mul(g.inv(c), g.inv(x)), c), x);
      if (v == 0) ++num;
    }
    int k = n - 1;
    while (k >= 0 && ++odo[k] == hsize) odo[k--] = 0;
    if (k < 0) break;
  }
  return ExactRatio::from_counts(num, den);
}

// (1/2)(1 + |Z(G) u C_G(H)| / |G|) as a set union. Elements outside the
// union fail to centralize some member of H, so their H-centralizer has
// index at least 2 in H; that dichotomy is what makes this an upper bound
// on d(H,G) for every subgroup, central ones included.
inline ExactRatio degree_upper_bound(const Subgroup& h) {
  const GroupRef& g = h.parent;
  Subgroup zg = center(g);
  Subgroup ch = centralizer_of_subgroup(h);
  std::vector<char> in(g->order, 0);
  for (int m : zg.members) in[m] = 1;
  for (int m : ch.members) in[m] = 1;
  uint128 u = 0;
  for (int i = 0; i < g->order; ++i)
    if (in[i]) ++u;
  return ExactRatio::from_counts(static_cast<uint128>(g->order) + u,
                                 2 * static_cast<uint128>(g->order));
}

}  // namespace smallgrp

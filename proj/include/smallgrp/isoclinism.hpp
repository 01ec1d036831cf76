#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "smallgrp/error.hpp"
#include "smallgrp/group.hpp"
#include "smallgrp/isomorphism.hpp"
#include "smallgrp/structure.hpp"

namespace smallgrp {

// Everything needed to state and re-check an (relative) n-isoclinism:
// alpha between the Z_n-quotients (mapping h_image1 onto h_image2) and beta
// between the commutator subgroups, which the diagram forces from alpha.
struct IsoclinismWitness {
  int n = 1;
  QuotientGroup q1, q2;
  EmbeddedGroup gamma1, gamma2;
  Subgroup h_image1, h_image2;  // subgroups of q1.base / q2.base
  Isomorphism alpha;            // q1.base -> q2.base
  Isomorphism beta;             // gamma1.group -> gamma2.group
};

namespace detail {

inline int comm2(const FiniteGroup& g, int x, int y) {
  return g.mul(g.mul(g.mul(g.inv(x), g.inv(y)), x), y);
}

// Forces beta on all commutator values of coset representatives, extends it
// multiplicatively, and validates injectivity and totality. Representatives
// stand in for whole cosets: the left-normed commutator is constant on
// Z_n-cosets in each coordinate. Returns the local image map or nothing if
// alpha admits no valid beta.
inline std::optional<std::vector<int>> derive_beta(
    const QuotientGroup& q1, const QuotientGroup& q2, const std::vector<int>& amembers,
    const std::vector<int>& alpha, const EmbeddedGroup& gamma1,
    const EmbeddedGroup& gamma2, int n) {
  if (gamma1.group->order != gamma2.group->order) return std::nullopt;
  const FiniteGroup& g1 = *q1.parent;
  const FiniteGroup& g2 = *q2.parent;
  // Paired value sets: (value of [r_1..r_k] in G1, value under alpha-images in
  // G2). Keeping pairs rather than a map preserves every forced combination.
  std::set<std::pair<int, int>> cur;
  for (int a : amembers) cur.insert({q1.coset_reps[a], q2.coset_reps[alpha[a]]});
  for (int k = 2; k <= n; ++k) {
    std::set<std::pair<int, int>> next;
    for (const auto& [c1, c2] : cur)
      for (int a : amembers)
        next.insert({comm2(g1, c1, q1.coset_reps[a]),
                     comm2(g2, c2, q2.coset_reps[alpha[a]])});
    cur = std::move(next);
  }
  int m1 = gamma1.group->order;
  int m2 = gamma2.group->order;
  std::vector<int> bmap(m1, -1), busy(m2, -1), queue;
  auto bind = [&](int l1, int l2) -> bool {
    if (bmap[l1] != -1) return bmap[l1] == l2;
    if (busy[l2] != -1) return false;
    bmap[l1] = l2;
    busy[l2] = l1;
    queue.push_back(l1);
    return true;
  };
  for (const auto& [c1, c2] : cur)
    for (int q = 0; q < q1.base->order; ++q) {
      int v1 = comm2(g1, c1, q1.coset_reps[q]);
      int v2 = comm2(g2, c2, q2.coset_reps[alpha[q]]);
      int l1 = gamma1.from_parent[v1];
      int l2 = gamma2.from_parent[v2];
      if (l1 < 0 || l2 < 0) return std::nullopt;
      if (!bind(l1, l2)) return std::nullopt;
    }
  const FiniteGroup& n1 = *gamma1.group;
  const FiniteGroup& n2 = *gamma2.group;
  for (size_t i = 0; i < queue.size(); ++i) {
    int a = queue[i];
    for (size_t j = 0; j <= i; ++j) {
      int b = queue[j];
      if (!bind(n1.mul(a, b), n2.mul(bmap[a], bmap[b]))) return std::nullopt;
      if (!bind(n1.mul(b, a), n2.mul(bmap[b], bmap[a]))) return std::nullopt;
    }
  }
  for (int v : bmap)
    if (v == -1) return std::nullopt;
  return bmap;
}

inline std::optional<IsoclinismWitness> isoclinism_search(
    const QuotientGroup& q1, const QuotientGroup& q2, const Subgroup& a,
    const Subgroup& b, const EmbeddedGroup& e1, const EmbeddedGroup& e2, int n,
    bool constrained, const SearchOptions& opts) {
  if (q1.base->order != q2.base->order) return std::nullopt;
  if (e1.group->order != e2.group->order) return std::nullopt;
  std::optional<IsoclinismWitness> out;
  enumerate_isomorphisms(
      *q1.base, *q2.base, constrained ? &a.mask : nullptr,
      constrained ? &b.mask : nullptr, opts.node_budget,
      [&](const std::vector<int>& alpha) {
        auto beta = derive_beta(q1, q2, a.members, alpha, e1, e2, n);
        if (!beta) return true;  // this alpha admits no beta; keep searching
        IsoclinismWitness w;
        w.n = n;
        w.q1 = q1;
        w.q2 = q2;
        w.gamma1 = e1;
        w.gamma2 = e2;
        w.h_image1 = a;
        w.h_image2 = b;
        w.alpha = Isomorphism{q1.base, q2.base, alpha};
        w.beta = Isomorphism{e1.group, e2.group, *beta};
        out = std::move(w);
        return false;
      });
  return out;
}

}  // namespace detail

inline std::optional<IsoclinismWitness> are_n_isoclinic(const GroupRef& g1,
                                                        const GroupRef& g2, int n,
                                                        const SearchOptions& opts = {}) {
  if (n < 1) throw InvalidInputError("isoclinism level must be at least 1");
  QuotientGroup q1 = quotient(upper_central_series(g1, n).back(), false);
  QuotientGroup q2 = quotient(upper_central_series(g2, n).back(), false);
  EmbeddedGroup e1 = as_group(lower_central_series(g1, n).back());
  EmbeddedGroup e2 = as_group(lower_central_series(g2, n).back());
  return detail::isoclinism_search(q1, q2, full_subgroup(q1.base), full_subgroup(q2.base),
                                   e1, e2, n, false, opts);
}

inline std::optional<IsoclinismWitness> are_relative_n_isoclinic(
    const Subgroup& h1, const Subgroup& h2, int n, const SearchOptions& opts = {}) {
  if (n < 1) throw InvalidInputError("isoclinism level must be at least 1");
  QuotientGroup q1 = quotient(upper_central_series(h1.parent, n).back(), false);
  QuotientGroup q2 = quotient(upper_central_series(h2.parent, n).back(), false);
  EmbeddedGroup e1 = as_group(relative_gamma(h1, n));
  EmbeddedGroup e2 = as_group(relative_gamma(h2, n));
  return detail::isoclinism_search(q1, q2, image_in_quotient(q1, h1),
                                   image_in_quotient(q2, h2), e1, e2, n, true, opts);
}

// The subgroup of G2 whose Z_n-cosets are the alpha-images of H1's cosets.
inline Subgroup induced_subgroup(const IsoclinismWitness& w, const Subgroup& h1) {
  if (h1.parent.get() != w.q1.parent.get())
    throw InvalidInputError("subgroup does not live in the witness's first group");
  Subgroup a = image_in_quotient(w.q1, h1);
  std::vector<int> timg;
  timg.reserve(a.members.size());
  for (int m : a.members) timg.push_back(w.alpha.image[m]);
  std::sort(timg.begin(), timg.end());
  return preimage_of(w.q2, detail::make_subgroup(w.q2.base, std::move(timg)));
}

// Independent witness validator: recomputes the quotients and commutator
// subgroups, re-checks both isomorphisms from scratch, and scans every
// (A-coset)^n x (G-coset) tuple against the diagram.
inline bool check_diagram(const IsoclinismWitness& w, const Subgroup& h1,
                          const Subgroup& h2) {
  if (h1.parent.get() != w.q1.parent.get() || h2.parent.get() != w.q2.parent.get())
    return false;
  const GroupRef& g1 = w.q1.parent;
  const GroupRef& g2 = w.q2.parent;
  QuotientGroup q1 = quotient(upper_central_series(g1, w.n).back(), false);
  QuotientGroup q2 = quotient(upper_central_series(g2, w.n).back(), false);
  if (q1.base->table != w.q1.base->table || q1.coset_reps != w.q1.coset_reps)
    return false;
  if (q2.base->table != w.q2.base->table || q2.coset_reps != w.q2.coset_reps)
    return false;
  Subgroup n1 = relative_gamma(h1, w.n);
  Subgroup n2 = relative_gamma(h2, w.n);
  if (n1.members != w.gamma1.to_parent || n2.members != w.gamma2.to_parent) return false;
  if (!is_isomorphism_map(*w.q1.base, *w.q2.base, w.alpha.image)) return false;
  if (!is_isomorphism_map(*w.gamma1.group, *w.gamma2.group, w.beta.image)) return false;
  Subgroup a = image_in_quotient(q1, h1);
  Subgroup b = image_in_quotient(q2, h2);
  std::vector<int> aimg;
  for (int m : a.members) aimg.push_back(w.alpha.image[m]);
  std::sort(aimg.begin(), aimg.end());
  if (aimg != b.members) return false;
  const FiniteGroup& gg1 = *g1;
  const FiniteGroup& gg2 = *g2;
  std::vector<int> odo(w.n, 0);
  int asize = a.order();
  for (;;) {
    int c1 = q1.coset_reps[a.members[odo[0]]];
    int c2 = q2.coset_reps[w.alpha.image[a.members[odo[0]]]];
    for (int k = 1; k < w.n; ++k) {
      c1 = detail::comm2(gg1, c1, q1.coset_reps[a.members[odo[k]]]);
      c2 = detail::comm2(gg2, c2, q2.coset_reps[w.alpha.image[a.members[odo[k]]]]);
    }
    for (int q = 0; q < q1.base->order; ++q) {
      int v1 = detail::comm2(gg1, c1, q1.coset_reps[q]);
      int v2 = detail::comm2(gg2, c2, q2.coset_reps[w.alpha.image[q]]);
      int l1 = w.gamma1.from_parent[v1];
      int l2 = w.gamma2.from_parent[v2];
      if (l1 < 0 || l2 < 0 || w.beta.image[l1] != l2) return false;
    }
    int k = w.n - 1;
    while (k >= 0 && ++odo[k] == asize) odo[k--] = 0;
    if (k < 0) break;
  }
  return true;
}

inline bool check_diagram(const IsoclinismWitness& w) {
  return check_diagram(w, full_subgroup(w.q1.parent), full_subgroup(w.q2.parent));
}

}  // namespace smallgrp

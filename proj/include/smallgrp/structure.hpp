#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "smallgrp/error.hpp"
#include "smallgrp/group.hpp"

namespace smallgrp {

// Subgroup of a fixed parent group: sorted member indices plus a membership
// bitmap. Always contains index 0.
struct Subgroup {
  GroupRef parent;
  std::vector<int> members;
  std::vector<char> mask;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const { return mask[x]; }
};

namespace detail {

inline Subgroup make_subgroup(GroupRef parent, std::vector<int> sorted_members) {
  Subgroup s;
  s.mask.assign(parent->order, 0);
  for (int m : sorted_members) s.mask[m] = 1;
  s.members = std::move(sorted_members);
  s.parent = std::move(parent);
  return s;
}

}  // namespace detail

inline Subgroup subgroup_generated(const GroupRef& g, const std::vector<int>& seeds) {
  for (int s : seeds)
    if (s < 0 || s >= g->order) throw InvalidInputError("seed index out of range");
  std::vector<char> in(g->order, 0);
  std::vector<int> queue{0};
  in[0] = 1;
  for (size_t h = 0; h < queue.size(); ++h)
    for (int s : seeds) {
      int y = g->mul(queue[h], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return detail::make_subgroup(g, std::move(queue));
}

inline Subgroup trivial_subgroup(const GroupRef& g) { return subgroup_generated(g, {}); }

inline Subgroup full_subgroup(const GroupRef& g) {
  std::vector<int> all(g->order);
  for (int i = 0; i < g->order; ++i) all[i] = i;
  return detail::make_subgroup(g, std::move(all));
}

// Members must form a subgroup already; closure is checked, not taken.
inline Subgroup subgroup_from_members(const GroupRef& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int m : members)
    if (m < 0 || m >= g->order) throw InvalidInputError("member index out of range");
  Subgroup s = detail::make_subgroup(g, std::move(members));
  if (s.members.empty() || !s.contains(0))
    throw InvalidInputError("member set does not contain the identity");
  for (int a : s.members)
    for (int b : s.members)
      if (!s.contains(g->mul(a, b)))
        throw InvalidInputError("member set is not closed under multiplication");
  return s;
}

// Elements of ambient commuting with x; x ranges over the whole parent.
inline Subgroup centralizer(const Subgroup& ambient, int x) {
  const FiniteGroup& g = *ambient.parent;
  if (x < 0 || x >= g.order) throw InvalidInputError("element index out of range");
  std::vector<int> out;
  for (int h : ambient.members)
    if (g.mul(h, x) == g.mul(x, h)) out.push_back(h);
  return detail::make_subgroup(ambient.parent, std::move(out));
}

inline Subgroup center(const GroupRef& g) {
  std::vector<int> out;
  for (int z = 0; z < g->order; ++z) {
    bool central = true;
    for (int x = 0; x < g->order && central; ++x)
      central = g->mul(z, x) == g->mul(x, z);
    if (central) out.push_back(z);
  }
  return detail::make_subgroup(g, std::move(out));
}

// Center of H viewed as a group in its own right, returned as a subgroup of
// the parent: elements of H commuting with all of H.
inline Subgroup center_of_subgroup(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> out;
  for (int z : h.members) {
    bool central = true;
    for (int x : h.members) {
      if (g.mul(z, x) != g.mul(x, z)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return detail::make_subgroup(h.parent, std::move(out));
}

// Elements of the parent commuting with every member of H. Contains the
// parent's center and the center of H.
inline Subgroup centralizer_of_subgroup(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> out;
  for (int z = 0; z < g.order; ++z) {
    bool commutes = true;
    for (int x : h.members) {
      if (g.mul(z, x) != g.mul(x, z)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(z);
  }
  return detail::make_subgroup(h.parent, std::move(out));
}

inline bool same_members(const Subgroup& a, const Subgroup& b) {
  return a.members == b.members;
}

inline bool subgroup_contains(const Subgroup& outer, const Subgroup& inner) {
  for (int m : inner.members)
    if (!outer.mask[m]) return false;
  return true;
}

inline Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  for (int m : a.members)
    if (b.mask[m]) out.push_back(m);
  return detail::make_subgroup(a.parent, std::move(out));
}

// The set product {ab : a in A, b in B} as a sorted member list (not
// necessarily a subgroup).
inline std::vector<int> product_set(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = *a.parent;
  std::vector<char> in(g.order, 0);
  for (int x : a.members)
    for (int y : b.members) in[g.mul(x, y)] = 1;
  std::vector<int> out;
  for (int i = 0; i < g.order; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

// [Z0, Z1, ..., Zn] with Z_{k+1} = {g : [g,x] in Z_k for all x}. The series
// repeats its stable value once it stops growing.
inline std::vector<Subgroup> upper_central_series(const GroupRef& g, int n) {
  if (n < 0) throw InvalidInputError("series length must be nonnegative");
  std::vector<Subgroup> out;
  out.push_back(trivial_subgroup(g));
  for (int k = 1; k <= n; ++k) {
    if (out.back().order() == g->order) {
      Subgroup stable = out.back();
      out.push_back(std::move(stable));
      continue;
    }
    const Subgroup& prev = out.back();
    std::vector<int> next;
    for (int z = 0; z < g->order; ++z) {
      bool ok = true;
      int zi = g->inv(z);
      for (int x = 0; x < g->order && ok; ++x) {
        int c = g->mul(g->mul(g->mul(zi, g->inv(x)), z), x);
        ok = prev.mask[c];
      }
      if (ok) next.push_back(z);
    }
    out.push_back(detail::make_subgroup(g, std::move(next)));
  }
  return out;
}

// [gamma_1, ..., gamma_{n+1}] with gamma_{k+1} = <[c,x] : c in gamma_k, x in G>.
inline std::vector<Subgroup> lower_central_series(const GroupRef& g, int n) {
  if (n < 0) throw InvalidInputError("series length must be nonnegative");
  std::vector<Subgroup> out;
  out.push_back(full_subgroup(g));
  for (int k = 1; k <= n; ++k) {
    const Subgroup& prev = out.back();
    std::vector<char> in(g->order, 0);
    for (int c : prev.members) {
      int ci = g->inv(c);
      for (int x = 0; x < g->order; ++x)
        in[g->mul(g->mul(g->mul(ci, g->inv(x)), c), x)] = 1;
    }
    std::vector<int> gens;
    for (int i = 0; i < g->order; ++i)
      if (in[i]) gens.push_back(i);
    Subgroup next = subgroup_generated(g, gens);
    if (same_members(next, prev)) {
      // Copy before filling: push_back may reallocate and out.back() would
      // dangle across iterations.
      Subgroup stable = prev;
      while (static_cast<int>(out.size()) <= n) out.push_back(stable);
      break;
    }
    out.push_back(std::move(next));
  }
  return out;
}

// Subgroup generated by all left-normed [h1,...,hn,g], h_i in H, g in G.
// The value of [h1,...,hk] depends only on the previous value, so the value
// set is iterated instead of enumerating |H|^n tuples.
inline Subgroup relative_gamma(const Subgroup& h, int n) {
  if (n < 1) throw InvalidInputError("relative series index must be at least 1");
  const GroupRef& g = h.parent;
  std::vector<int> values = h.members;
  for (int k = 2; k <= n; ++k) {
    std::vector<char> in(g->order, 0);
    for (int c : values) {
      int ci = g->inv(c);
      for (int x : h.members)
        in[g->mul(g->mul(g->mul(ci, g->inv(x)), c), x)] = 1;
    }
    values.clear();
    for (int i = 0; i < g->order; ++i)
      if (in[i]) values.push_back(i);
  }
  std::vector<char> in(g->order, 0);
  for (int c : values) {
    int ci = g->inv(c);
    for (int x = 0; x < g->order; ++x)
      in[g->mul(g->mul(g->mul(ci, g->inv(x)), c), x)] = 1;
  }
  std::vector<int> gens;
  for (int i = 0; i < g->order; ++i)
    if (in[i]) gens.push_back(i);
  return subgroup_generated(g, gens);
}

inline bool is_normal(const Subgroup& n) {
  const FiniteGroup& g = *n.parent;
  for (int x = 0; x < g.order; ++x) {
    int xi = g.inv(x);
    for (int m : n.members)
      if (!n.mask[g.mul(g.mul(xi, m), x)]) return false;
  }
  return true;
}

inline Subgroup normal_closure(const GroupRef& g, const std::vector<int>& seeds) {
  std::vector<char> in(g->order, 0);
  for (int s : seeds) {
    if (s < 0 || s >= g->order) throw InvalidInputError("seed index out of range");
    for (int x = 0; x < g->order; ++x) in[g->mul(g->mul(g->inv(x), s), x)] = 1;
  }
  std::vector<int> gens;
  for (int i = 0; i < g->order; ++i)
    if (in[i]) gens.push_back(i);
  return subgroup_generated(g, gens);
}

// G/N with cosets numbered by ascending minimal representative; the identity
// coset is 0 and projection is a homomorphism onto base.
struct QuotientGroup {
  GroupRef base;
  GroupRef parent;
  Subgroup kernel;
  std::vector<int> coset_reps;  // quotient index -> minimal parent representative
  std::vector<int> projection;  // parent index -> quotient index
};

inline QuotientGroup quotient(const Subgroup& n, bool check_normal = true) {
  if (check_normal && !is_normal(n))
    throw NotNormalError("subgroup is not normal in its parent");
  const GroupRef& g = n.parent;
  QuotientGroup q;
  q.parent = g;
  q.kernel = n;
  q.projection.assign(g->order, -1);
  for (int p = 0; p < g->order; ++p) {
    if (q.projection[p] >= 0) continue;
    int idx = static_cast<int>(q.coset_reps.size());
    q.coset_reps.push_back(p);
    for (int k : n.members) q.projection[g->mul(p, k)] = idx;
  }
  int qorder = static_cast<int>(q.coset_reps.size());
  std::vector<int> flat(static_cast<size_t>(qorder) * qorder);
  for (int i = 0; i < qorder; ++i)
    for (int j = 0; j < qorder; ++j)
      flat[static_cast<size_t>(i) * qorder + j] =
          q.projection[g->mul(q.coset_reps[i], q.coset_reps[j])];
  std::vector<std::string> labels;
  if (g->has_labels()) {
    labels.resize(qorder);
    for (int i = 0; i < qorder; ++i) labels[i] = "[" + g->label(q.coset_reps[i]) + "]";
  }
  q.base = from_flat_table(qorder, std::move(flat), std::move(labels), true);
  return q;
}

inline Subgroup image_in_quotient(const QuotientGroup& q, const Subgroup& h) {
  if (h.parent.get() != q.parent.get())
    throw InvalidInputError("subgroup does not live in the quotient's parent");
  std::vector<char> in(q.base->order, 0);
  for (int m : h.members) in[q.projection[m]] = 1;
  std::vector<int> out;
  for (int i = 0; i < q.base->order; ++i)
    if (in[i]) out.push_back(i);
  return detail::make_subgroup(q.base, std::move(out));
}

// Preimage in the parent of a subgroup of the quotient's base.
inline Subgroup preimage_of(const QuotientGroup& q, const Subgroup& s) {
  if (s.parent.get() != q.base.get())
    throw InvalidInputError("subgroup does not live in the quotient's base");
  std::vector<int> out;
  for (int p = 0; p < q.parent->order; ++p)
    if (s.mask[q.projection[p]]) out.push_back(p);
  return detail::make_subgroup(q.parent, std::move(out));
}

// Every subgroup, by closing the cyclic subgroups (plus must_contain) under
// pairwise join; sorted by (order, members). The filter keeps supersets of
// must_contain.
inline std::vector<Subgroup> all_subgroups(const GroupRef& g,
                                           const Subgroup* must_contain = nullptr,
                                           int order_cap = 64) {
  if (g->order > order_cap)
    throw OrderCapExceededError("subgroup enumeration capped at order " +
                                std::to_string(order_cap));
  std::set<std::vector<int>> pool;
  for (int x = 0; x < g->order; ++x) pool.insert(subgroup_generated(g, {x}).members);
  if (must_contain) pool.insert(must_contain->members);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(pool.begin(), pool.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> seeds = snapshot[i];
        seeds.insert(seeds.end(), snapshot[j].begin(), snapshot[j].end());
        auto joined = subgroup_generated(g, seeds).members;
        if (pool.insert(std::move(joined)).second) grew = true;
      }
  }
  std::vector<Subgroup> out;
  for (const auto& members : pool) {
    Subgroup s = detail::make_subgroup(g, members);
    if (must_contain && !subgroup_contains(s, *must_contain)) continue;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

inline bool is_nilpotent_of_class_at_most(const GroupRef& g, int n) {
  return lower_central_series(g, n).back().order() == 1;
}

inline int conjugacy_class_count(const GroupRef& g) {
  std::vector<char> seen(g->order, 0);
  int classes = 0;
  for (int x = 0; x < g->order; ++x) {
    if (seen[x]) continue;
    ++classes;
    for (int t = 0; t < g->order; ++t) seen[g->mul(g->mul(g->inv(t), x), t)] = 1;
  }
  return classes;
}

// A subgroup re-materialized as a standalone group with index maps back and
// forth. Local index 0 is the identity.
struct EmbeddedGroup {
  GroupRef group;
  GroupRef parent;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 for parent elements outside the subgroup
};

inline EmbeddedGroup as_group(const Subgroup& h) {
  EmbeddedGroup e;
  e.parent = h.parent;
  e.to_parent = h.members;
  e.from_parent.assign(h.parent->order, -1);
  for (size_t i = 0; i < h.members.size(); ++i)
    e.from_parent[h.members[i]] = static_cast<int>(i);
  int n = h.order();
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<size_t>(i) * n + j] =
          e.from_parent[h.parent->mul(h.members[i], h.members[j])];
  std::vector<std::string> labels;
  if (h.parent->has_labels()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = h.parent->label(h.members[i]);
  }
  e.group = from_flat_table(n, std::move(flat), std::move(labels), true);
  return e;
}

}  // namespace smallgrp

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "smallgrp/error.hpp"
#include "smallgrp/group.hpp"
#include "smallgrp/structure.hpp"

namespace smallgrp {

struct Isomorphism {
  GroupRef source;
  GroupRef target;
  std::vector<int> image;  // image[i] = target index of source element i
};

struct SearchOptions {
  long long node_budget = 10000000;
};

inline bool is_isomorphism_map(const FiniteGroup& s, const FiniteGroup& t,
                               const std::vector<int>& image) {
  if (s.order != t.order) return false;
  if (static_cast<int>(image.size()) != s.order) return false;
  std::vector<char> hit(t.order, 0);
  for (int v : image) {
    if (v < 0 || v >= t.order || hit[v]) return false;
    hit[v] = 1;
  }
  if (image[0] != 0) return false;
  for (int i = 0; i < s.order; ++i)
    for (int j = 0; j < s.order; ++j)
      if (image[s.mul(i, j)] != t.mul(image[i], image[j])) return false;
  return true;
}

namespace detail {

inline std::vector<std::pair<int, int>> element_profiles(const FiniteGroup& g) {
  std::vector<std::pair<int, int>> out(g.order);
  for (int x = 0; x < g.order; ++x) {
    int cent = 0;
    for (int y = 0; y < g.order; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++cent;
    out[x] = {element_order(g, x), cent};
  }
  return out;
}

// Backtracking over images of a generating sequence with partial-map closure
// propagation. Candidates are tried in ascending target order, so the first
// map reported is lexicographically least in generator-image order.
class IsoSearch {
public:
  IsoSearch(const FiniteGroup& g1, const FiniteGroup& g2,
            const std::vector<char>* mask1, const std::vector<char>* mask2,
            long long node_budget)
      : g1_(g1), g2_(g2), mask1_(mask1), mask2_(mask2), budget_(node_budget) {
    profile1_ = element_profiles(g1);
    profile2_ = element_profiles(g2);
    pick_generators();
    cands_.resize(gens_.size());
    for (size_t k = 0; k < gens_.size(); ++k) {
      int x = gens_[k];
      for (int y = 0; y < g2_.order; ++y) {
        if (profile2_[y] != profile1_[x]) continue;
        if (mask1_ && (*mask1_)[x] != (*mask2_)[y]) continue;
        cands_[k].push_back(y);
      }
    }
  }

  // Invokes on_found for each isomorphism in deterministic order until it
  // returns false. Returns true if the search was stopped by the callback.
  bool run(const std::function<bool(const std::vector<int>&)>& on_found) {
    on_found_ = &on_found;
    map_.assign(g1_.order, -1);
    used_.assign(g2_.order, -1);
    mapped_.clear();
    if (!add_assignment(0, 0)) return false;
    return recurse(0);
  }

private:
  const FiniteGroup& g1_;
  const FiniteGroup& g2_;
  const std::vector<char>* mask1_;
  const std::vector<char>* mask2_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<std::pair<int, int>> profile1_, profile2_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> cands_;
  std::vector<int> map_, used_, mapped_;
  const std::function<bool(const std::vector<int>&)>* on_found_ = nullptr;

  std::vector<char> closure_of(const std::vector<int>& gens) const {
    std::vector<char> in(g1_.order, 0);
    std::vector<int> queue{0};
    in[0] = 1;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int s : gens) {
        int y = g1_.mul(queue[h], s);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    return in;
  }

  // Greedy ascending generating sequence; when a subgroup constraint is
  // present its members come first so the constraint is closed early.
  void pick_generators() {
    std::vector<char> cur = closure_of({});
    auto extend_over = [&](const std::function<bool(int)>& eligible) {
      for (int x = 0; x < g1_.order; ++x) {
        if (cur[x] || !eligible(x)) continue;
        gens_.push_back(x);
        cur = closure_of(gens_);
      }
    };
    if (mask1_) extend_over([&](int x) { return (*mask1_)[x] != 0; });
    extend_over([](int) { return true; });
  }

  // Adds x -> y plus everything forced by the homomorphism law. Returns
  // false on any conflict; the caller rolls back via the mapped_ mark.
  bool add_assignment(int x, int y) {
    std::vector<std::pair<int, int>> pending{{x, y}};
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      if (map_[a] != -1) {
        if (map_[a] != b) return false;
        continue;
      }
      if (used_[b] != -1) return false;
      if (profile1_[a] != profile2_[b]) return false;
      if (mask1_ && (*mask1_)[a] != (*mask2_)[b]) return false;
      map_[a] = b;
      used_[b] = a;
      mapped_.push_back(a);
      for (int m : mapped_) {
        pending.emplace_back(g1_.mul(a, m), g2_.mul(b, map_[m]));
        pending.emplace_back(g1_.mul(m, a), g2_.mul(map_[m], b));
      }
    }
    return true;
  }

  void rollback(size_t mark) {
    while (mapped_.size() > mark) {
      int a = mapped_.back();
      mapped_.pop_back();
      used_[map_[a]] = -1;
      map_[a] = -1;
    }
  }

  bool recurse(size_t level) {
    if (level == gens_.size()) return !(*on_found_)(map_);
    int x = gens_[level];
    if (map_[x] != -1) return recurse(level + 1);
    for (int y : cands_[level]) {
      if (used_[y] != -1) continue;
      if (++nodes_ > budget_)
        throw SearchBudgetExceededError("isomorphism search exceeded " +
                                        std::to_string(budget_) + " nodes");
      size_t mark = mapped_.size();
      if (add_assignment(x, y) && recurse(level + 1)) {
        rollback(mark);
        return true;
      }
      rollback(mark);
    }
    return false;
  }
};

// Shared front end: cheap invariant prechecks, then the backtracking engine.
// Returns true if the callback stopped the enumeration.
inline bool enumerate_isomorphisms(
    const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<char>* mask1,
    const std::vector<char>* mask2, long long node_budget,
    const std::function<bool(const std::vector<int>&)>& on_found) {
  if (g1.order != g2.order) return false;
  auto p1 = element_profiles(g1), p2 = element_profiles(g2);
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  if (mask1) {
    std::vector<std::pair<int, int>> a1, a2;
    for (int x = 0; x < g1.order; ++x)
      if ((*mask1)[x]) a1.push_back(p1[x]);
    for (int y = 0; y < g2.order; ++y)
      if ((*mask2)[y]) a2.push_back(p2[y]);
    if (a1.size() != a2.size()) return false;
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    if (a1 != a2) return false;
  }
  IsoSearch search(g1, g2, mask1, mask2, node_budget);
  return search.run(on_found);
}

}  // namespace detail

inline std::optional<Isomorphism> find_isomorphism(const GroupRef& g1, const GroupRef& g2,
                                                   const SearchOptions& opts = {}) {
  std::optional<Isomorphism> out;
  detail::enumerate_isomorphisms(*g1, *g2, nullptr, nullptr, opts.node_budget,
                                 [&](const std::vector<int>& image) {
                                   out = Isomorphism{g1, g2, image};
                                   return false;
                                 });
  return out;
}

// First isomorphism g1 -> g2 mapping subgroup a onto subgroup b, if any.
inline std::optional<Isomorphism> find_isomorphism_mapping(const GroupRef& g1,
                                                           const GroupRef& g2,
                                                           const Subgroup& a,
                                                           const Subgroup& b,
                                                           const SearchOptions& opts = {}) {
  if (a.parent.get() != g1.get() || b.parent.get() != g2.get())
    throw InvalidInputError("constraint subgroups must live in the searched groups");
  std::optional<Isomorphism> out;
  detail::enumerate_isomorphisms(*g1, *g2, &a.mask, &b.mask, opts.node_budget,
                                 [&](const std::vector<int>& image) {
                                   out = Isomorphism{g1, g2, image};
                                   return false;
                                 });
  return out;
}

inline std::vector<Isomorphism> automorphisms(const GroupRef& g, int order_cap = 64,
                                              const SearchOptions& opts = {}) {
  if (g->order > order_cap)
    throw OrderCapExceededError("automorphism enumeration capped at order " +
                                std::to_string(order_cap));
  std::vector<Isomorphism> out;
  detail::enumerate_isomorphisms(*g, *g, nullptr, nullptr, opts.node_budget,
                                 [&](const std::vector<int>& image) {
                                   out.push_back(Isomorphism{g, g, image});
                                   return true;
                                 });
  return out;
}

}  // namespace smallgrp

#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "smallgrp/catalog.hpp"
#include "smallgrp/degrees.hpp"
#include "smallgrp/error.hpp"
#include "smallgrp/group.hpp"
#include "smallgrp/io.hpp"
#include "smallgrp/isoclinism.hpp"
#include "smallgrp/rational.hpp"
#include "smallgrp/structure.hpp"

namespace smallgrp {

enum class VerifyStatus { Pass, Fail, Skip, Error };

struct VerificationInstance {
  std::string description;
  std::string expected;
  std::string actual;
  VerifyStatus status = VerifyStatus::Pass;
};

struct VerificationReport {
  std::string claim;
  std::vector<VerificationInstance> instances;
  double elapsed_seconds = 0.0;

  int count(VerifyStatus s) const {
    int c = 0;
    for (const auto& inst : instances)
      if (inst.status == s) ++c;
    return c;
  }
  int passes() const { return count(VerifyStatus::Pass); }
  int fails() const { return count(VerifyStatus::Fail); }
  int skips() const { return count(VerifyStatus::Skip); }
  int errors() const { return count(VerifyStatus::Error); }
  bool overall() const { return fails() == 0 && errors() == 0; }
};

namespace detail {

inline void add_instance(VerificationReport& r, std::string desc, std::string expected,
                         std::string actual, VerifyStatus st) {
  r.instances.push_back({std::move(desc), std::move(expected), std::move(actual), st});
}

inline void add_check(VerificationReport& r, std::string desc, std::string expected,
                      std::string actual, bool ok) {
  add_instance(r, std::move(desc), std::move(expected), std::move(actual),
               ok ? VerifyStatus::Pass : VerifyStatus::Fail);
}

// Runs one instance body, converting engine errors into error-status rows so a
// batch keeps going past resource limits on individual cases.
inline void run_instance(VerificationReport& r, const std::string& desc,
                         const std::function<void(VerificationReport&)>& body) {
  try {
    body(r);
  } catch (const Error& e) {
    add_instance(r, desc, "computation to finish", std::string("error: ") + e.what(),
                 VerifyStatus::Error);
  }
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline Subgroup apply_automorphism(const Subgroup& h, const std::vector<int>& image) {
  std::vector<int> members;
  members.reserve(h.members.size());
  for (int m : h.members) members.push_back(image[m]);
  std::sort(members.begin(), members.end());
  return make_subgroup(h.parent, std::move(members));
}

}  // namespace detail

// If (G1, G2) are n-isoclinic, every subgroup of G1 is n-isoclinic to the
// subgroup of G2 induced by the witness correspondence.
inline VerificationReport verify_subgroup_transfer(const GroupRef& g1, const GroupRef& g2,
                                                   int n, const SearchOptions& opts = {}) {
  detail::Stopwatch timer;
  VerificationReport report;
  report.claim = "subgroup transfer under n-isoclinism (n=" + std::to_string(n) + ")";
  auto w = are_n_isoclinic(g1, g2, n, opts);
  if (!w) {
    detail::add_instance(report, "groups are n-isoclinic", "witness", "none",
                         VerifyStatus::Skip);
    report.elapsed_seconds = timer.seconds();
    return report;
  }
  for (const auto& h1 : all_subgroups(g1)) {
    std::string desc = "H=" + describe_subgroup(h1);
    detail::run_instance(report, desc, [&](VerificationReport& r) {
      Subgroup h2 = induced_subgroup(*w, h1);
      auto sub1 = as_group(h1);
      auto sub2 = as_group(h2);
      auto wsub = are_n_isoclinic(sub1.group, sub2.group, n, opts);
      detail::add_check(r, desc, "induced pair n-isoclinic",
                        wsub ? "witness found" : "no witness", wsub.has_value());
    });
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

// n-isoclinic pairs (H1, G1) and (H2, G2) share the same relative n-th
// nilpotency degree. Pairs for which no witness exists are skipped.
inline VerificationReport verify_degree_invariance(
    const std::vector<std::pair<Subgroup, Subgroup>>& pairs, int n,
    const SearchOptions& opts = {}) {
  detail::Stopwatch timer;
  VerificationReport report;
  report.claim = "relative degree is an n-isoclinism invariant (n=" + std::to_string(n) + ")";
  for (const auto& [h1, h2] : pairs) {
    std::string desc = "(" + describe_subgroup(h1) + " in |G|=" +
                       std::to_string(h1.parent->order) + ") vs (" + describe_subgroup(h2) +
                       " in |G|=" + std::to_string(h2.parent->order) + ")";
    detail::run_instance(report, desc, [&](VerificationReport& r) {
      auto w = are_relative_n_isoclinic(h1, h2, n, opts);
      if (!w) {
        detail::add_instance(r, desc, "witness", "none", VerifyStatus::Skip);
        return;
      }
      if (!check_diagram(*w, h1, h2)) {
        detail::add_check(r, desc, "witness validates", "diagram check failed", false);
        return;
      }
      ExactRatio d1 = relative_nilpotency_degree(h1, n);
      ExactRatio d2 = relative_nilpotency_degree(h2, n);
      detail::add_check(r, desc, format_ratio(d1), format_ratio(d2), d1 == d2);
    });
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

// For N normal in G with N <= H: (H/N, G/N) is n-isoclinic to (H/K, G/K)
// for both K = N meet gamma_{n+1}(G) and K = N meet [n-H,G]; when K is
// trivial the quotient pair is n-isoclinic to (H, G) itself.
inline VerificationReport verify_quotient_reduction(const Subgroup& h, const Subgroup& nsub,
                                                    int n, const SearchOptions& opts = {}) {
  detail::Stopwatch timer;
  VerificationReport report;
  report.claim = "quotient by a normal subgroup reduces to its commutator trace (n=" +
                 std::to_string(n) + ")";
  const GroupRef& g = h.parent;
  if (nsub.parent != g) throw InvalidInputError("subgroups live in different groups");
  if (!is_normal(nsub)) throw NotNormalError("N is not normal in G");
  if (!subgroup_contains(h, nsub)) throw NotContainedError("N is not contained in H");

  auto qn = quotient(nsub);
  Subgroup h_mod_n = image_in_quotient(qn, h);

  auto gamma_full = lower_central_series(g, n).back();
  Subgroup k_statement = intersect_subgroups(nsub, gamma_full);
  Subgroup rel = relative_gamma(h, n);
  Subgroup k_proof = intersect_subgroups(nsub, rel);

  struct Variant {
    const char* label;
    const Subgroup* k;
  };
  for (const Variant& v : {Variant{"K=N&gamma", &k_statement}, Variant{"K=N&[nH,G]", &k_proof}}) {
    std::string desc = std::string(v.label) + " |K|=" + std::to_string(v.k->order());
    detail::run_instance(report, desc, [&](VerificationReport& r) {
      auto qk = quotient(*v.k);
      Subgroup h_mod_k = image_in_quotient(qk, h);
      auto w = are_relative_n_isoclinic(h_mod_n, h_mod_k, n, opts);
      detail::add_check(r, desc + ": (H/N,G/N) ~ (H/K,G/K)", "witness",
                        w ? "witness found" : "no witness", w.has_value());
      if (v.k->order() == 1) {
        auto wid = are_relative_n_isoclinic(h, h_mod_n, n, opts);
        detail::add_check(r, desc + ": (H,G) ~ (H/N,G/N)", "witness",
                          wid ? "witness found" : "no witness", wid.has_value());
      }
    });
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

// When H Z_n(G) = G the relative degree collapses: d^(n)(H) = d^(n)(H,G) =
// d^(n)(G). Independently, the relative degree is invariant under every
// automorphism image of H.
inline VerificationReport verify_cover_collapse(const Subgroup& h, int n,
                                                const SearchOptions& opts = {}) {
  detail::Stopwatch timer;
  VerificationReport report;
  report.claim = "degrees collapse when H covers G over Z_n (n=" + std::to_string(n) + ")";
  const GroupRef& g = h.parent;
  std::string desc = "H=" + describe_subgroup(h);
  detail::run_instance(report, desc + " collapse", [&](VerificationReport& r) {
    Subgroup zn = upper_central_series(g, n).back();
    auto hz = product_set(h, zn);
    if (static_cast<int>(hz.size()) != g->order) {
      detail::add_instance(r, desc + " collapse", "H Z_n(G) = G",
                           "H Z_n(G) has order " + std::to_string(hz.size()),
                           VerifyStatus::Skip);
      return;
    }
    ExactRatio dh = nilpotency_degree(as_group(h).group, n);
    ExactRatio dhg = relative_nilpotency_degree(h, n);
    ExactRatio dg = nilpotency_degree(g, n);
    detail::add_check(r, desc + ": d(H) = d(H,G)", format_ratio(dh), format_ratio(dhg),
                      dh == dhg);
    detail::add_check(r, desc + ": d(H,G) = d(G)", format_ratio(dhg), format_ratio(dg),
                      dhg == dg);
  });
  detail::run_instance(report, desc + " automorphisms", [&](VerificationReport& r) {
    ExactRatio base = relative_nilpotency_degree(h, n);
    auto autos = automorphisms(g, 64, opts);
    int mismatches = 0;
    std::string first;
    for (const auto& phi : autos) {
      Subgroup image = detail::apply_automorphism(h, phi.image);
      ExactRatio d = relative_nilpotency_degree(image, n);
      if (!(d == base)) {
        ++mismatches;
        if (first.empty())
          first = "phi(H)=" + describe_subgroup(image) + " gives " + format_ratio(d);
      }
    }
    detail::add_check(r,
                      desc + ": all " + std::to_string(autos.size()) + " automorphism images",
                      format_ratio(base),
                      mismatches == 0 ? "all equal" : first, mismatches == 0);
  });
  report.elapsed_seconds = timer.seconds();
  return report;
}

// Over subgroups H containing the center with |G : H| <= 2, d(H,G) = 3/4
// holds exactly when (H, G) is 1-isoclinic to the reference pair (<a>, D8).
// The index hypothesis is not decorative: any witness forces |G/Z(G)| = 4
// and hence |G : H| = 2, while <a^2> inside the order-16 dihedral and
// dicyclic groups has index 4 and degree 3/4 with |G/Z(G)| = 8. Those
// subgroups refute the unrestricted biconditional and are reported as
// expected refutations, not failures. The reverse implication (a witness
// forces degree 3/4) is asserted for every H regardless of index.
inline VerificationReport verify_three_quarters(const GroupRef& g,
                                                const SearchOptions& opts = {}) {
  detail::Stopwatch timer;
  VerificationReport report;
  report.claim = "d(H,G)=3/4 characterizes index-2 pairs 1-isoclinic to (<a>, D8)";
  Subgroup z = center(g);
  Subgroup reference = catalog::named_pair("d8-a");
  ExactRatio target(3, 4);
  for (const auto& h : all_subgroups(g, &z)) {
    int index = g->order / h.order();
    std::string desc = "|G|=" + std::to_string(g->order) + " H=" + describe_subgroup(h) +
                       " [G:H]=" + std::to_string(index);
    detail::run_instance(report, desc, [&](VerificationReport& r) {
      ExactRatio d = relative_commutativity_degree(h);
      bool lhs = (d == target);
      auto w = are_relative_n_isoclinic(h, reference, 1, opts);
      bool rhs = w.has_value();
      if (rhs && !lhs) {
        detail::add_check(r, desc + " d=" + format_ratio(d), "witness forces d=3/4",
                          "witness with d=" + format_ratio(d), false);
        return;
      }
      if (index <= 2) {
        detail::add_check(r, desc + " d=" + format_ratio(d),
                          lhs ? "isoclinic to reference" : "not isoclinic to reference",
                          rhs ? "isoclinic to reference" : "not isoclinic to reference",
                          lhs == rhs);
        return;
      }
      if (rhs) {
        detail::add_check(r, desc + " d=" + format_ratio(d), "no witness at index > 2",
                          "witness found", false);
        return;
      }
      detail::add_check(r, desc + " d=" + format_ratio(d),
                        lhs ? "refutes unrestricted form" : "not isoclinic to reference",
                        lhs ? "refutes unrestricted form" : "not isoclinic to reference",
                        true);
    });
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

// n-isoclinism of pairs escalates: a witness at level n implies one at n+1.
inline VerificationReport verify_escalation(
    const std::vector<std::pair<Subgroup, Subgroup>>& pairs, int n,
    const SearchOptions& opts = {}) {
  detail::Stopwatch timer;
  VerificationReport report;
  report.claim = "n-isoclinism implies (n+1)-isoclinism (n=" + std::to_string(n) + ")";
  for (const auto& [h1, h2] : pairs) {
    std::string desc = "(" + describe_subgroup(h1) + " in |G|=" +
                       std::to_string(h1.parent->order) + ") vs (" + describe_subgroup(h2) +
                       " in |G|=" + std::to_string(h2.parent->order) + ")";
    detail::run_instance(report, desc, [&](VerificationReport& r) {
      auto w = are_relative_n_isoclinic(h1, h2, n, opts);
      if (!w) {
        detail::add_instance(r, desc, "witness at n", "none", VerifyStatus::Skip);
        return;
      }
      auto w2 = are_relative_n_isoclinic(h1, h2, n + 1, opts);
      detail::add_check(r, desc, "witness at n+1", w2 ? "witness found" : "no witness",
                        w2.has_value());
    });
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

// d(G) <= 5/8 for non-abelian G, with equality exactly when G/Z(G) is the
// Klein four-group; d(H,G) <= (|G| + |Z(G) u C_G(H)|) / (2|G|) for every H.
inline VerificationReport verify_bounds(const GroupRef& g, bool include_subgroups = true) {
  detail::Stopwatch timer;
  VerificationReport report;
  report.claim = "commutativity degree bounds";
  std::string gdesc = "|G|=" + std::to_string(g->order);
  detail::run_instance(report, gdesc + " global bound", [&](VerificationReport& r) {
    ExactRatio d = commutativity_degree(g);
    Subgroup z = center(g);
    if (z.order() == g->order) {
      detail::add_check(r, gdesc + " abelian", "1/1", format_ratio(d), d == ExactRatio::one());
      return;
    }
    ExactRatio bound(5, 8);
    detail::add_check(r, gdesc + " d(G) <= 5/8", "<= " + format_ratio(bound), format_ratio(d),
                      d <= bound);
    auto q = quotient(z);
    bool klein = q.base->order == 4;
    if (klein)
      for (int x = 1; x < 4; ++x)
        if (q.base->mul(x, x) != 0) klein = false;
    bool equality = (d == bound);
    detail::add_check(r, gdesc + " equality iff G/Z Klein",
                      klein ? "equality" : "strict", equality ? "equality" : "strict",
                      klein == equality);
  });
  if (include_subgroups) {
    detail::run_instance(report, gdesc + " subgroup bounds", [&](VerificationReport& r) {
      int violations = 0;
      std::string first;
      auto subs = all_subgroups(g);
      for (const auto& h : subs) {
        ExactRatio d = relative_commutativity_degree(h);
        ExactRatio bound = degree_upper_bound(h);
        if (!(d <= bound)) {
          ++violations;
          if (first.empty())
            first = "H=" + describe_subgroup(h) + " d=" + format_ratio(d) + " bound=" +
                    format_ratio(bound);
        }
      }
      detail::add_check(r,
                        gdesc + " d(H,G) bound over " + std::to_string(subs.size()) +
                            " subgroups",
                        "all within bound", violations == 0 ? "all within bound" : first,
                        violations == 0);
    });
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// Claim drivers over the built-in catalog.

struct SweepOptions {
  int max_order = 16;
  int n = 1;
  SearchOptions search;
};

namespace detail {

inline void merge_into(VerificationReport& dst, const VerificationReport& src,
                       const std::string& prefix) {
  for (const auto& inst : src.instances) {
    VerificationInstance copy = inst;
    copy.description = prefix + copy.description;
    dst.instances.push_back(std::move(copy));
  }
}

inline std::vector<std::pair<std::string, GroupRef>> sweep_groups(int max_order) {
  std::vector<std::pair<std::string, GroupRef>> out;
  for (const auto& entry : catalog::entries()) {
    GroupRef g = catalog::get(entry.name);
    if (g->order <= max_order) out.emplace_back(entry.name, g);
  }
  return out;
}

inline std::vector<std::pair<Subgroup, Subgroup>> named_pair_combinations() {
  auto names = catalog::named_pair_names();
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i; j < names.size(); ++j)
      out.emplace_back(catalog::named_pair(names[i]), catalog::named_pair(names[j]));
  return out;
}

struct ReductionCase {
  std::string label;
  Subgroup h;
  Subgroup nsub;
  int n;
};

inline std::vector<ReductionCase> reduction_cases() {
  std::vector<ReductionCase> cases;
  GroupRef d8 = catalog::get("dihedral:8");
  Subgroup a = subgroup_generated(d8, {1});
  Subgroup a2 = subgroup_generated(d8, {d8->mul(1, 1)});
  cases.push_back({"D8, H=<a>, N=<a^2>, n=2", a, a2, 2});
  cases.push_back({"D8, H=<a>, N=1, n=1", a, trivial_subgroup(d8), 1});
  GroupRef g16 = catalog::get("product:dihedral:8*cyclic:2");
  Subgroup h16 = subgroup_generated(g16, {2, 1});
  Subgroup n16 = subgroup_generated(g16, {1});
  cases.push_back({"D8xC2, H=<a>xC2, N=1xC2, n=1", h16, n16, 1});
  cases.push_back({"D8xC2, H=<a>xC2, N=Z(G), n=1", h16, center(g16), 1});
  cases.push_back({"D8xC2, H=G, N=1xC2, n=1", full_subgroup(g16), n16, 1});
  return cases;
}

struct CoverCase {
  std::string label;
  Subgroup h;
  int n;
};

inline std::vector<CoverCase> cover_cases() {
  std::vector<CoverCase> cases;
  GroupRef d8 = catalog::get("dihedral:8");
  GroupRef g16 = catalog::get("product:dihedral:8*cyclic:2");
  GroupRef q8 = catalog::get("quaternion8");
  cases.push_back({"D8xC2, H=D8x1, n=1", subgroup_generated(g16, {2, 4}), 1});
  cases.push_back({"D8xC2, H=D8x1, n=2", subgroup_generated(g16, {2, 4}), 2});
  cases.push_back({"D8, H=<a^2,b>, n=1", subgroup_generated(d8, {d8->mul(1, 1), 2}), 1});
  cases.push_back({"D8, H=D8, n=1", full_subgroup(d8), 1});
  cases.push_back({"Q8, H=<i>, n=1", subgroup_generated(q8, {1}), 1});
  return cases;
}

}  // namespace detail

inline std::vector<std::string> claim_names() {
  return {"subgroup-transfer", "degree-invariance", "quotient-reduction", "cover-collapse",
          "three-quarters",    "escalation",        "bounds",             "all"};
}

inline VerificationReport run_claim(const std::string& claim, const SweepOptions& opts = {});

namespace detail {

inline VerificationReport run_single_claim(const std::string& claim, const SweepOptions& opts) {
  Stopwatch timer;
  VerificationReport report;
  if (claim == "subgroup-transfer") {
    report.claim = "subgroup transfer under n-isoclinism (n=" + std::to_string(opts.n) + ")";
    struct Pair {
      const char* g1;
      const char* g2;
    };
    for (const Pair& p : {Pair{"dihedral:8", "quaternion8"},
                          Pair{"product:dihedral:8*cyclic:2", "product:quaternion8*cyclic:2"},
                          Pair{"dihedral:8", "dihedral:8"}}) {
      auto sub = verify_subgroup_transfer(catalog::get(p.g1), catalog::get(p.g2), opts.n,
                                          opts.search);
      merge_into(report, sub, std::string(p.g1) + " vs " + p.g2 + ": ");
    }
  } else if (claim == "degree-invariance") {
    auto sub = verify_degree_invariance(named_pair_combinations(), opts.n, opts.search);
    report.claim = sub.claim;
    merge_into(report, sub, "");
  } else if (claim == "quotient-reduction") {
    report.claim = "quotient by a normal subgroup reduces to its commutator trace";
    for (const auto& c : reduction_cases()) {
      auto sub = verify_quotient_reduction(c.h, c.nsub, c.n, opts.search);
      merge_into(report, sub, c.label + ": ");
    }
  } else if (claim == "cover-collapse") {
    report.claim = "degrees collapse when H covers G over Z_n";
    for (const auto& c : cover_cases()) {
      auto sub = verify_cover_collapse(c.h, c.n, opts.search);
      merge_into(report, sub, c.label + ": ");
    }
  } else if (claim == "three-quarters") {
    report.claim = "d(H,G)=3/4 characterizes pairs 1-isoclinic to (<a>, D8)";
    for (const auto& [name, g] : sweep_groups(std::min(opts.max_order, 16))) {
      auto sub = verify_three_quarters(g, opts.search);
      merge_into(report, sub, name + ": ");
    }
  } else if (claim == "escalation") {
    auto sub = verify_escalation(named_pair_combinations(), opts.n, opts.search);
    report.claim = sub.claim;
    merge_into(report, sub, "");
  } else if (claim == "bounds") {
    report.claim = "commutativity degree bounds";
    for (const auto& [name, g] : sweep_groups(opts.max_order)) {
      auto sub = verify_bounds(g, g->order <= 16);
      merge_into(report, sub, name + ": ");
    }
  } else {
    throw UnknownNameError("unknown claim: " + claim);
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

}  // namespace detail

inline VerificationReport run_claim(const std::string& claim, const SweepOptions& opts) {
  if (claim != "all") return detail::run_single_claim(claim, opts);
  detail::Stopwatch timer;
  VerificationReport report;
  report.claim = "all claims";
  for (const auto& name : claim_names()) {
    if (name == "all") continue;
    auto sub = detail::run_single_claim(name, opts);
    detail::merge_into(report, sub, "[" + name + "] ");
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

inline const char* status_word(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "FAIL";
    case VerifyStatus::Skip: return "skip";
    case VerifyStatus::Error: return "ERROR";
  }
  return "?";
}

inline void render_report(std::ostream& out, const VerificationReport& r) {
  out << "claim: " << r.claim << "\n";
  for (const auto& inst : r.instances) {
    out << "  [" << status_word(inst.status) << "] " << inst.description;
    if (inst.status == VerifyStatus::Fail || inst.status == VerifyStatus::Error)
      out << "\n         expected: " << inst.expected << "\n         actual:   " << inst.actual;
    out << "\n";
  }
  out << "overall: " << (r.overall() ? "PASS" : "FAIL") << " (" << r.passes() << " passed, "
      << r.fails() << " failed, " << r.skips() << " skipped, " << r.errors() << " errors) in "
      << r.elapsed_seconds << "s\n";
}

inline void render_machine_report(std::ostream& out, const VerificationReport& r) {
  for (const auto& inst : r.instances)
    out << r.claim << "\t" << inst.description << "\t" << inst.expected << "\t" << inst.actual
        << "\t" << status_word(inst.status) << "\n";
}

}  // namespace smallgrp

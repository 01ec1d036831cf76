#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smallgrp/smallgrp.hpp"

namespace {

using namespace smallgrp;

GroupRef load_group(const std::string& src) {
  if (src.rfind("catalog:", 0) == 0) return catalog::get(src.substr(8));
  if (src.rfind("file:", 0) == 0) {
    std::string path = src.substr(5);
    std::ifstream f(path);
    if (!f) throw InvalidInputError("cannot open group file: " + path);
    return read_group(f);
  }
  throw InvalidInputError("group source must be catalog:<name> or file:<path>: " + src);
}

struct SubgroupSpec {
  std::string group_src;
  std::string gens_csv;
  std::string members_file;
  std::string pair_name;

  Subgroup resolve() const {
    if (!pair_name.empty()) {
      if (!group_src.empty() || !gens_csv.empty() || !members_file.empty())
        throw InvalidInputError("a named pair already fixes both subgroup and group");
      return catalog::named_pair(pair_name);
    }
    if (group_src.empty()) throw InvalidInputError("missing group source");
    GroupRef g = load_group(group_src);
    if (!gens_csv.empty()) {
      if (!members_file.empty())
        throw InvalidInputError("give generators or a member file, not both");
      return subgroup_generated(g, parse_csv_indices(gens_csv));
    }
    if (!members_file.empty()) {
      std::ifstream f(members_file);
      if (!f) throw InvalidInputError("cannot open member file: " + members_file);
      return subgroup_generated(g, read_index_list(f));
    }
    throw InvalidInputError("missing subgroup: use generators, a member file, or a pair name");
  }
};

void print_series(std::ostream& out, const GroupRef& g, int n) {
  auto upper = upper_central_series(g, n);
  for (size_t i = 0; i < upper.size(); ++i)
    out << "Z_" << i << ": order " << upper[i].order() << " " << describe_subgroup(upper[i])
        << "\n";
  auto lower = lower_central_series(g, n);
  for (size_t i = 0; i < lower.size(); ++i)
    out << "gamma_" << i + 1 << ": order " << lower[i].order() << " "
        << describe_subgroup(lower[i]) << "\n";
}

void print_catalog_entry(std::ostream& out, const std::string& name) {
  GroupRef g = catalog::get(name);
  out << name << ": order " << g->order << "\n";
  if (g->has_labels())
    for (int i = 0; i < g->order; ++i) out << i << ": " << g->label(i) << "\n";
  write_group(out, *g);
}

int exit_code_for(const Error& e) {
  bool usage = dynamic_cast<const UnknownNameError*>(&e) != nullptr ||
               dynamic_cast<const InvalidInputError*>(&e) != nullptr ||
               dynamic_cast<const ParseError*>(&e) != nullptr ||
               dynamic_cast<const NotAGroupError*>(&e) != nullptr ||
               dynamic_cast<const NotUnimodularError*>(&e) != nullptr ||
               dynamic_cast<const EmptyInputError*>(&e) != nullptr ||
               dynamic_cast<const NotNormalError*>(&e) != nullptr ||
               dynamic_cast<const NotContainedError*>(&e) != nullptr;
  return usage ? 2 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact commutativity degrees and n-isoclinism for small finite groups"};
  app.require_subcommand(1);

  int n = 1;
  long long budget = SearchOptions{}.node_budget;
  app.add_option("--n", n, "series depth n (default 1)")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "isomorphism search node budget")
      ->check(CLI::PositiveNumber);

  std::string degree_group;
  auto* degree_cmd = app.add_subcommand("degree", "n-th nilpotency degree of a group");
  degree_cmd->add_option("--group", degree_group, "catalog:<name> or file:<path>")->required();

  SubgroupSpec rel_spec;
  auto* rel_cmd = app.add_subcommand("rel-degree", "relative n-th nilpotency degree d^(n)(H,G)");
  rel_cmd->add_option("--group", rel_spec.group_src, "catalog:<name> or file:<path>");
  rel_cmd->add_option("--subgroup-gens", rel_spec.gens_csv, "comma-separated generator indices");
  rel_cmd->add_option("--subgroup-file", rel_spec.members_file, "file of generator indices");
  rel_cmd->add_option("--pair", rel_spec.pair_name, "named catalog pair");

  std::string series_group;
  auto* series_cmd = app.add_subcommand("series", "upper and lower central series");
  series_cmd->add_option("--group", series_group, "catalog:<name> or file:<path>")->required();

  std::vector<std::string> iso_groups;
  auto* iso_cmd = app.add_subcommand("isoclinic", "decide n-isoclinism of two groups");
  iso_cmd->add_option("groups", iso_groups, "two group sources")->expected(2);

  SubgroupSpec rel_iso_1, rel_iso_2;
  auto* rel_iso_cmd =
      app.add_subcommand("rel-isoclinic", "decide relative n-isoclinism of two pairs (H,G)");
  rel_iso_cmd->add_option("--group1", rel_iso_1.group_src, "first group source");
  rel_iso_cmd->add_option("--subgroup-gens1", rel_iso_1.gens_csv, "first subgroup generators");
  rel_iso_cmd->add_option("--subgroup-file1", rel_iso_1.members_file, "first generator file");
  rel_iso_cmd->add_option("--pair1", rel_iso_1.pair_name, "first named catalog pair");
  rel_iso_cmd->add_option("--group2", rel_iso_2.group_src, "second group source");
  rel_iso_cmd->add_option("--subgroup-gens2", rel_iso_2.gens_csv, "second subgroup generators");
  rel_iso_cmd->add_option("--subgroup-file2", rel_iso_2.members_file, "second generator file");
  rel_iso_cmd->add_option("--pair2", rel_iso_2.pair_name, "second named catalog pair");

  auto* catalog_cmd = app.add_subcommand("catalog", "inspect the built-in group catalog");
  auto* catalog_list = catalog_cmd->add_subcommand("list", "list catalog names");
  std::string show_name;
  auto* catalog_show = catalog_cmd->add_subcommand("show", "print one catalog group");
  catalog_show->add_option("name", show_name, "catalog name")->required();
  catalog_cmd->require_subcommand(1);

  std::string claim;
  int max_order = 16;
  std::string report_path;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification claim sweep");
  verify_cmd->add_option("claim", claim, "claim name (see docs; 'all' runs everything)")
      ->required();
  verify_cmd->add_option("--max-order", max_order, "largest group order in sweeps")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--report", report_path, "write machine-readable report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    SearchOptions search;
    search.node_budget = budget;

    if (*degree_cmd) {
      GroupRef g = load_group(degree_group);
      std::cout << format_ratio(nilpotency_degree(g, n)) << "\n";
    } else if (*rel_cmd) {
      Subgroup h = rel_spec.resolve();
      std::cout << format_ratio(relative_nilpotency_degree(h, n)) << "\n";
    } else if (*series_cmd) {
      print_series(std::cout, load_group(series_group), n);
    } else if (*iso_cmd) {
      GroupRef g1 = load_group(iso_groups[0]);
      GroupRef g2 = load_group(iso_groups[1]);
      auto w = are_n_isoclinic(g1, g2, n, search);
      if (w) {
        if (!check_diagram(*w)) throw Error("internal: witness failed diagram validation");
        std::cout << "YES\n";
        write_witness(std::cout, *w);
      } else {
        std::cout << "NO\n";
      }
    } else if (*rel_iso_cmd) {
      Subgroup h1 = rel_iso_1.resolve();
      Subgroup h2 = rel_iso_2.resolve();
      auto w = are_relative_n_isoclinic(h1, h2, n, search);
      if (w) {
        if (!check_diagram(*w, h1, h2))
          throw Error("internal: witness failed diagram validation");
        std::cout << "YES\n";
        write_witness(std::cout, *w);
      } else {
        std::cout << "NO\n";
      }
    } else if (*catalog_cmd) {
      if (*catalog_list) {
        for (const auto& entry : catalog::entries())
          std::cout << entry.name << "\t" << entry.description << "\n";
        for (const auto& pname : catalog::named_pair_names())
          std::cout << "pair:" << pname << "\t named subgroup pair\n";
      } else if (*catalog_show) {
        print_catalog_entry(std::cout, show_name);
      }
    } else if (*verify_cmd) {
      SweepOptions opts;
      opts.max_order = max_order;
      opts.n = n;
      opts.search = search;
      VerificationReport report = run_claim(claim, opts);
      render_report(std::cout, report);
      if (!report_path.empty()) {
        std::ofstream rf(report_path);
        if (!rf) throw InvalidInputError("cannot open report file: " + report_path);
        render_machine_report(rf, report);
      }
      if (report.fails() > 0) return 1;
      if (report.errors() > 0) return 3;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

// extraloop: command-line front end for the finite extra-loop toolkit.
//
// Subcommands load Cayley tables or extension specs, run analyses and
// the lemma property suite, and emit reports in a human-readable or a
// line-oriented key=value format.  Exit codes: 0 all checks passed,
// 1 a mathematical assertion failed, 2 input error, 3 enumeration cap
// exceeded.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "extraloop/census.hpp"
#include "extraloop/common.hpp"
#include "extraloop/extension.hpp"
#include "extraloop/fixtures.hpp"
#include "extraloop/loop.hpp"
#include "extraloop/multgroups.hpp"
#include "extraloop/structure.hpp"
#include "extraloop/suite.hpp"
#include "extraloop/sylow.hpp"

using namespace extraloop;

namespace {

struct Options {
  std::string format = "text";  // text | kv
  int jobs = 0;
  std::uint64_t seed = 0;
  std::uint64_t cap = 0;  // 0: use enumeration_cap()
  std::uint64_t samples = 100000;

  bool kv() const { return format == "kv"; }
  std::uint64_t cap_or_default() const {
    return cap ? cap : enumeration_cap();
  }
};

// One report line; "key: value" for humans, "key=value" for machines.
void emit(const Options& o, const std::string& key, const std::string& val) {
  if (o.kv())
    std::cout << key << "=" << val << "\n";
  else
    std::cout << key << ": " << val << "\n";
}
void emit(const Options& o, const std::string& key, std::uint64_t val) {
  emit(o, key, std::to_string(val));
}
void emit_flag(const Options& o, const std::string& key, bool val) {
  emit(o, key, std::string(val ? "1" : "0"));
}

FiniteLoop load(const std::string& path) { return load_table(path).loop; }

std::string profile_string(const std::map<int, int>& prof) {
  std::string s;
  for (const auto& [ord, cnt] : prof) {
    if (!s.empty()) s += " ";
    s += std::to_string(ord) + ":" + std::to_string(cnt);
  }
  return s;
}

void emit_identity_report(const Options& o, const IdentityReport& r) {
  emit_flag(o, "extra", r.extra());
  emit_flag(o, "extra1", r.extra1);
  emit_flag(o, "extra2", r.extra2);
  emit_flag(o, "extra3", r.extra3);
  emit_flag(o, "moufang", r.moufang);
  emit_flag(o, "conjugacy_closed", r.conj_closed);
  emit_flag(o, "flexible", r.flexible);
  emit_flag(o, "associative", r.associative);
  emit_flag(o, "commutative", r.commutative);
  emit_flag(o, "power_associative", r.power_associative);
  emit_flag(o, "boolean_group", r.boolean_group);
}

int cmd_check(const Options& o, const std::string& path) {
  FiniteLoop l = load(path);
  emit(o, "loop", l.name());
  emit(o, "order", static_cast<std::uint64_t>(l.size()));
  emit_identity_report(o, check_identities(l));
  return 0;
}

int cmd_analyze(const Options& o, const std::string& path) {
  FiniteLoop l = load(path);
  IdentityReport ids = check_identities(l);
  ElemSet nuc = nucleus(l), zen = center(l), asub = associator_subloop(l);
  emit(o, "loop", l.name());
  emit(o, "order", static_cast<std::uint64_t>(l.size()));
  emit_flag(o, "extra", ids.extra());
  emit_flag(o, "associative", ids.associative);
  emit(o, "nucleus_order", nuc.size());
  emit(o, "center_order", zen.size());
  emit(o, "associator_subloop_order", asub.size());
  emit(o, "nucleus_index", static_cast<std::uint64_t>(l.size()) / nuc.size());
  emit(o, "order_profile", profile_string(order_profile_or_flag(l)));
  if (ids.extra()) {
    SolvabilityReport s = is_solvable(l);
    emit_flag(o, "solvable", s.solvable);
    emit(o, "derived_series_length", s.series.size());
  }
  return 0;
}

int cmd_build(const Options& o, const std::string& spec_path,
              const std::string& out_path, const std::string& name) {
  std::ifstream in(spec_path);
  if (!in) throw InputError("build: cannot open " + spec_path);
  ExtensionSpec spec = parse_extension_spec(in);
  FiniteLoop l = build_from_spec(spec, name);
  if (out_path.empty()) {
    write_table(std::cout, l);
  } else {
    save_table(out_path, l);
    emit(o, "written", out_path);
    emit(o, "order", static_cast<std::uint64_t>(l.size()));
  }
  return 0;
}

void emit_family(const Options& o, const SubloopFamily& fam) {
  if (!o.kv()) {
    write_family(std::cout, fam);
    return;
  }
  emit(o, "family", fam.label);
  emit(o, "members", fam.members.size());
  emit(o, "member_order", fam.member_order);
  emit(o, "r", fam.r);
  emit_flag(o, "count_divides_r", fam.divides_r);
  emit_flag(o, "count_divides_r_flagged", fam.divides_r_flagged);
}

int cmd_sylow(const Options& o, const std::string& path, int p) {
  FiniteLoop l = load(path);
  emit_family(o, sylow_subloops(l, p));
  return 0;
}

int cmd_hall(const Options& o, const std::string& path,
             const std::string& pi_csv) {
  FiniteLoop l = load(path);
  std::vector<int> pi;
  std::stringstream ss(pi_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      pi.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("hall: bad prime list entry '" + tok + "'");
    }
  }
  if (pi.empty()) throw InputError("hall: empty prime list");
  emit_family(o, hall_subloops(l, pi));
  return 0;
}

int cmd_iso(const Options& o, const std::string& p1, const std::string& p2) {
  FiniteLoop a = load(p1), b = load(p2);
  auto f = find_isomorphism(a, b);
  emit_flag(o, "isomorphic", f.has_value());
  if (!f) return 1;
  std::string map;
  for (std::size_t i = 0; i < f->size(); ++i) {
    if (i) map += " ";
    map += std::to_string((*f)[i]);
  }
  emit(o, "map", map);
  return 0;
}

int cmd_census16(const Options& o, const std::string& out_dir) {
  Census16 c = census_order16(o.jobs);
  emit(o, "candidates", static_cast<std::uint64_t>(c.candidates));
  emit(o, "cocycle_kernel_dim",
       static_cast<std::uint64_t>(c.cocycle_kernel_dim));
  if (o.kv()) {
    emit(o, "nonassociative_classes", c.nonassociative.size());
    emit(o, "associative_classes", c.associative.size());
  } else {
    std::cout << c.nonassociative.size() << " nonassociative classes, "
              << c.associative.size() << " group classes\n";
  }
  for (std::size_t i = 0; i < c.nonassociative.size(); ++i) {
    const IsoClass& k = c.nonassociative[i];
    emit(o, "class_n" + std::to_string(i),
         "members=" + std::to_string(k.members) + " fp=" + k.fingerprint);
  }
  for (std::size_t i = 0; i < c.associative.size(); ++i) {
    const IsoClass& k = c.associative[i];
    emit(o, "class_a" + std::to_string(i),
         "members=" + std::to_string(k.members) + " fp=" + k.fingerprint);
  }
  if (!out_dir.empty()) {
    write_census_files(out_dir, "extra16", c.nonassociative);
    write_census_files(out_dir, "group16", c.associative);
    emit(o, "written", out_dir);
  }
  return 0;
}

int cmd_census16p(const Options& o, int p, const std::string& out_dir) {
  std::vector<IsoClass> classes = census_16p(p, o.jobs);
  if (o.kv())
    emit(o, "classes", classes.size());
  else
    std::cout << classes.size() << " classes\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    emit(o, "class_" + std::to_string(i),
         "members=" + std::to_string(classes[i].members) +
             " fp=" + classes[i].fingerprint);
  if (!out_dir.empty()) {
    write_census_files(out_dir, "extra16x" + std::to_string(p), classes);
    emit(o, "written", out_dir);
  }
  return 0;
}

int cmd_rmlt(const Options& o, const std::string& path, int p) {
  FiniteLoop l = load(path);
  const std::uint64_t cap = o.cap_or_default();
  PermGroup r = rmlt(l, cap);
  PermGroup lm = lmlt(l, cap);
  PermGroup r1 = inner_mapping_group(l, Side::right, cap);
  emit(o, "order", static_cast<std::uint64_t>(l.size()));
  emit(o, "rmlt_order", r.order());
  emit(o, "lmlt_order", lm.order());
  emit(o, "rmlt1_order", r1.order());
  if (check_identities(l).extra()) {
    AStar as = a_star(l, cap);
    emit(o, "a_star_order", as.group.order());
    emit(o, "a_star_factor_rmlt1", as.rmlt1.order());
    emit(o, "a_star_factor_ra", as.assoc.size());
  }
  if (p > 0) {
    SylowRmltReport rep = sylow_rmlt_correspondence(l, p, cap);
    emit(o, "sylow_p", static_cast<std::uint64_t>(rep.p));
    emit(o, "sylow_loop_count", rep.loop_count);
    emit(o, "sylow_group_count", rep.group_count);
    emit(o, "sylow_loop_member_order", rep.loop_member_order);
    emit(o, "sylow_group_member_order", rep.group_member_order);
    emit_flag(o, "sylow_bijective", rep.bijective);
    if (!rep.bijective) return 1;
  }
  return 0;
}

int suite_one(const Options& o, const FiniteLoop& l) {
  SuiteOptions so;
  so.seed = o.seed;
  so.sample_tuples = o.samples;
  so.cap = o.cap_or_default();
  SuiteReport rep = property_suite(l, so);
  write_suite_report(std::cout, rep);
  return rep.all_pass() ? 0 : 1;
}

int cmd_suite(const Options& o, const std::string& target) {
  if (target == "catalog") {
    int bad = 0;
    std::vector<CatalogEntry> cat = acceptance_catalog(o.jobs);
    for (const CatalogEntry& e : cat)
      if (suite_one(o, e.loop) != 0) ++bad;
    emit(o, "catalog_loops", cat.size());
    emit(o, "catalog_failures", static_cast<std::uint64_t>(bad));
    return bad == 0 ? 0 : 1;
  }
  return suite_one(o, load(target));
}

int cmd_examples(const Options& o, const std::string& dir) {
  struct Item {
    const char* file;
    FiniteLoop loop;
    const char* blurb;
  };
  std::vector<Item> items;
  items.push_back({"cayley.tbl", cayley_loop(),
                   "nonassociative extra loop of order 16, all non-nuclear "
                   "elements of order 4"});
  items.push_back({"canonical16.tbl", canonical16(),
                   "nonassociative extra loop of order 16, exactly two "
                   "elements of order 4"});
  items.push_back({"example512.tbl", example_512(),
                   "extra loop of order 512 with an associator outside the "
                   "center; |Z|=2, |A|=|N|=32, |Q:N|=16"});
  items.push_back(
      {"nonsolvable960.tbl",
       nucleus_realization(direct_product(boolean_group(1),
                                          alternating_group_5()),
                           60, "nonsolvable960"),
       "nonsolvable extra loop of order 960 with nucleus Z_2 x A_5"});
  std::string prefix = dir.empty() ? std::string(".") : dir;
  for (const Item& it : items) {
    std::string path = prefix + "/" + it.file;
    save_table(path, it.loop, {it.blurb});
    emit(o, "written", path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite extra-loop toolkit"};
  app.require_subcommand(1);

  Options o;
  app.add_option("--format", o.format, "report style: text or kv")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "worker cap for parallel censuses")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "seed for sampled suite checks")
      ->capture_default_str();
  app.add_option("--cap", o.cap,
                 "enumeration cap override (0: default or EXTRALOOP_CAP)");
  app.add_option("--samples", o.samples,
                 "sample count for non-exhaustive suite checks")
      ->capture_default_str();

  std::string table, table2, spec_path, out_path, out_dir, pi_csv, name;
  int p = 0;

  CLI::App* c_check = app.add_subcommand("check", "identity report");
  c_check->add_option("table", table, "Cayley table file")->required();

  CLI::App* c_analyze =
      app.add_subcommand("analyze", "order, N, Z, A, solvability, profile");
  c_analyze->add_option("table", table, "Cayley table file")->required();

  CLI::App* c_build =
      app.add_subcommand("build", "build a loop from an extension spec");
  c_build->add_option("spec", spec_path, "extension spec file")->required();
  c_build->add_option("-o,--out", out_path, "output table file (default stdout)");
  c_build->add_option("--name", name, "name for the built loop");

  CLI::App* c_sylow = app.add_subcommand("sylow", "Sylow p-subloop family");
  c_sylow->add_option("table", table, "Cayley table file")->required();
  c_sylow->add_option("-p", p, "prime")->required();

  CLI::App* c_hall = app.add_subcommand("hall", "Hall pi-subloop family");
  c_hall->add_option("table", table, "Cayley table file")->required();
  c_hall->add_option("--pi", pi_csv, "comma-separated primes")->required();

  CLI::App* c_iso = app.add_subcommand("iso", "isomorphism test");
  c_iso->add_option("table1", table, "first table")->required();
  c_iso->add_option("table2", table2, "second table")->required();

  CLI::App* c_c16 =
      app.add_subcommand("census16", "order-16 extra loop census");
  c_c16->add_option("--out", out_dir, "write class representatives here");

  CLI::App* c_c16p =
      app.add_subcommand("census16p", "order-16p extra loop census");
  c_c16p->add_option("-p", p, "odd prime")->required();
  c_c16p->add_option("--out", out_dir, "write class representatives here");

  CLI::App* c_rmlt =
      app.add_subcommand("rmlt", "multiplication-group structure");
  c_rmlt->add_option("table", table, "Cayley table file")->required();
  c_rmlt->add_option("-p", p, "also verify the Sylow correspondence at p");

  CLI::App* c_suite =
      app.add_subcommand("suite", "lemma property suite (table or 'catalog')");
  c_suite->add_option("target", table, "Cayley table file or 'catalog'")
      ->required();

  CLI::App* c_ex = app.add_subcommand("examples", "emit the landmark tables");
  c_ex->add_option("-o,--out", out_dir, "output directory (default .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_check->parsed()) return cmd_check(o, table);
    if (c_analyze->parsed()) return cmd_analyze(o, table);
    if (c_build->parsed()) return cmd_build(o, spec_path, out_path, name);
    if (c_sylow->parsed()) return cmd_sylow(o, table, p);
    if (c_hall->parsed()) return cmd_hall(o, table, pi_csv);
    if (c_iso->parsed()) return cmd_iso(o, table, table2);
    if (c_c16->parsed()) return cmd_census16(o, out_dir);
    if (c_c16p->parsed()) return cmd_census16p(o, p, out_dir);
    if (c_rmlt->parsed()) return cmd_rmlt(o, table, p);
    if (c_suite->parsed()) return cmd_suite(o, table);
    if (c_ex->parsed()) return cmd_examples(o, out_dir);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const CheckError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

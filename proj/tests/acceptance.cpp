// Acceptance suite: one pass/fail line per criterion, budgets pinned in
// code.  Exit status 0 only when every criterion passes.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "extraloop/census.hpp"
#include "extraloop/common.hpp"
#include "extraloop/extension.hpp"
#include "extraloop/fixtures.hpp"
#include "extraloop/loop.hpp"
#include "extraloop/structure.hpp"
#include "extraloop/suite.hpp"
#include "extraloop/sylow.hpp"

using namespace extraloop;

namespace {

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void run_criterion(int id, const std::string& label, double budget_s,
                   const std::function<Outcome()>& body) {
  double t0 = now_s();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double dt = now_s() - t0;
  bool in_budget = budget_s <= 0 || dt <= budget_s;
  bool pass = out.pass && in_budget;
  if (!pass) ++g_failures;
  std::printf("criterion %d [%s]: %s (%.1fs%s)%s%s\n", id, label.c_str(),
              pass ? "PASS" : "FAIL", dt,
              budget_s > 0 ? (", budget " + std::to_string((int)budget_s) + "s").c_str()
                           : "",
              out.detail.empty() ? "" : " ",
              out.detail.c_str());
  if (out.pass && !in_budget)
    std::printf("criterion %d: checks passed but exceeded the budget\n", id);
  std::fflush(stdout);
}

ElemSet intersect_sets(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) out.push_back(x);
  return out;
}

// Associator value outside the center, witnessed over nucleus-coset
// representative triples (associators only depend on the cosets).
bool has_noncentral_associator(const FiniteLoop& l) {
  ElemSet nuc = nucleus(l), zen = center(l);
  std::vector<char> in_z(l.size(), 0);
  for (int z : zen) in_z[z] = 1;
  Quotient q = quotient(l, nuc);
  for (int a = 0; a < q.loop.size(); ++a)
    for (int b = 0; b < q.loop.size(); ++b)
      for (int c = 0; c < q.loop.size(); ++c)
        if (!in_z[associator(l, q.rep_of[a], q.rep_of[b], q.rep_of[c])])
          return true;
  return false;
}

std::vector<int> primes_of(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  return out;
}

}  // namespace

int main() {
  std::printf("acceptance suite: 9 criteria\n");

  // Shared artifacts built once and reused where a criterion's wording
  // permits; censuses re-run inside their own criteria so the stated
  // budgets cover the actual computation.
  std::vector<IsoClass> c48;  // filled by criterion 2, reused by 6 and 7

  run_criterion(1, "order-16 census", 120, [&]() -> Outcome {
    Census16 c = census_order16();
    Outcome o;
    o.pass = c.nonassociative.size() == 5;
    o.detail = "nonassociative_classes=" +
               std::to_string(c.nonassociative.size()) +
               " candidates=" + std::to_string(c.candidates);
    return o;
  });

  run_criterion(2, "order-16p censuses", 0, [&]() -> Outcome {
    Outcome o;
    o.pass = true;
    const struct {
      int p;
      double budget;
    } runs[] = {{3, 300}, {5, 900}, {7, 900}};
    for (const auto& r : runs) {
      double t0 = now_s();
      std::vector<IsoClass> classes = census_16p(r.p);
      double dt = now_s() - t0;
      if (r.p == 3) c48 = classes;
      bool ok = classes.size() == 16 && dt <= r.budget;
      if (!ok) o.pass = false;
      o.detail += (o.detail.empty() ? "" : " ") + std::string("p=") +
                  std::to_string(r.p) + ":" + std::to_string(classes.size()) +
                  "(" + std::to_string(dt).substr(0, 4) + "s/" +
                  std::to_string((int)r.budget) + "s)";
    }
    return o;
  });

  run_criterion(3, "order-512 example metrics", 60, [&]() -> Outcome {
    FiniteLoop l = example_512();
    ElemSet nuc = nucleus(l), zen = center(l), asub = associator_subloop(l);
    FiniteLoop qz = quotient(l, zen).loop;
    bool qz_nonassoc = !check_identities(qz).associative;
    Outcome o;
    o.pass = l.size() == 512 && zen.size() == 2 && asub.size() == 32 &&
             nuc.size() == 32 && l.size() / (int)nuc.size() == 16 &&
             qz_nonassoc;
    o.detail = "order=" + std::to_string(l.size()) +
               " |Z|=" + std::to_string(zen.size()) +
               " |A|=" + std::to_string(asub.size()) +
               " |N|=" + std::to_string(nuc.size()) +
               " |Q:N|=" + std::to_string(l.size() / nuc.size()) +
               " QmodZ_nonassoc=" + std::to_string(qz_nonassoc);
    return o;
  });

  run_criterion(4, "sharpness of the 512 bound", 0, [&]() -> Outcome {
    FiniteLoop l = example_512();
    ElemSet nuc = nucleus(l), asub = associator_subloop(l);
    bool witness = has_noncentral_associator(l);
    Outcome o;
    o.pass = witness && asub.size() == 32 &&
             l.size() / (int)nuc.size() == 16;
    o.detail = std::string("associator_outside_Z=") +
               std::to_string(witness) + " |A|=" +
               std::to_string(asub.size()) + " |Q:N|=" +
               std::to_string(l.size() / nuc.size());
    return o;
  });

  run_criterion(5, "order-960 nonsolvable example", 180, [&]() -> Outcome {
    FiniteLoop g = direct_product(boolean_group(1), alternating_group_5());
    FiniteLoop l = nucleus_realization(g, 60, "nonsolvable960");
    IdentityReport ids = check_identities(l);
    SolvabilityReport s = is_solvable(l);
    Outcome o;
    o.pass = l.size() == 960 && ids.extra() && !ids.associative &&
             !s.solvable;
    o.detail = "order=" + std::to_string(l.size()) +
               " extra=" + std::to_string(ids.extra()) +
               " nonassociative=" + std::to_string(!ids.associative) +
               " solvable=" + std::to_string(s.solvable) +
               "; minimality not verified (out of scope)";
    return o;
  });

  run_criterion(6, "Sylow facts on the order-48 census", 300,
                [&]() -> Outcome {
    Outcome o;
    if (c48.empty()) {
      o.detail = "order-48 census unavailable";
      return o;
    }
    o.pass = true;
    std::set<std::size_t> counts;
    for (const IsoClass& cls : c48) {
      // sylow_subloops verifies internally: count = 1 + 2k, x in N
      // conjugation transitive, every 2-subloop inside a member.
      SubloopFamily fam = sylow_subloops(cls.representative, 2);
      std::size_t k = fam.members.size();
      counts.insert(k);
      if (k % 2 != 1 || 3 % k != 0) o.pass = false;
    }
    o.detail = "loops=" + std::to_string(c48.size()) + " |Syl_2| in {";
    bool first = true;
    for (std::size_t k : counts) {
      o.detail += (first ? "" : ",") + std::to_string(k);
      first = false;
    }
    o.detail += "}, each odd and dividing 3";
    return o;
  });

  run_criterion(7, "Sylow correspondence with RMlt", 0, [&]() -> Outcome {
    Outcome o;
    if (c48.size() < 3) {
      o.detail = "order-48 census unavailable";
      return o;
    }
    const std::uint64_t cap = 1ull << 20;  // stated enumeration cap
    o.pass = true;
    for (int i = 0; i < 3; ++i)
      for (int p : {2, 3}) {
        SylowRmltReport r =
            sylow_rmlt_correspondence(c48[i].representative, p, cap);
        if (!r.bijective || r.loop_count != r.group_count) o.pass = false;
        o.detail += (o.detail.empty() ? "" : " ") + std::to_string(i) + ",p=" +
                    std::to_string(p) + ":" + std::to_string(r.loop_count) +
                    "=" + std::to_string(r.group_count);
      }
    return o;
  });

  run_criterion(8, "lemma property suite over the catalog", 1800,
                [&]() -> Outcome {
    std::vector<CatalogEntry> cat = acceptance_catalog();
    Outcome o;
    o.pass = true;
    std::uint64_t laws = 0, skipped = 0;
    std::string bad;
    for (const CatalogEntry& e : cat) {
      SuiteReport r = property_suite(e.loop);
      for (const LawCheck& ch : r.checks) {
        ++laws;
        if (ch.skipped) ++skipped;
        if (!ch.pass && !ch.skipped) {
          o.pass = false;
          if (bad.size() < 200)
            bad += " " + e.name + "/" + ch.tag;
        }
      }
    }
    o.detail = "loops=" + std::to_string(cat.size()) +
               " laws=" + std::to_string(laws) +
               " skipped_with_reason=" + std::to_string(skipped);
    if (!bad.empty()) o.detail += " failures:" + bad;
    return o;
  });

  run_criterion(9, "center, Burnside, and Hall theorems", 0,
                [&]() -> Outcome {
    std::vector<CatalogEntry> cat = acceptance_catalog();
    Outcome o;
    o.pass = true;
    int nonassoc = 0, twoprime = 0, halls = 0;
    for (const CatalogEntry& e : cat) {
      const FiniteLoop& l = e.loop;
      IdentityReport ids = check_identities(l);
      if (!ids.associative) {
        ++nonassoc;
        ElemSet za = intersect_sets(center(l), associator_subloop(l));
        if (za.size() < 2) {
          o.pass = false;
          o.detail += " center_failure=" + e.name;
        }
      }
      std::vector<int> primes = primes_of(l.size());
      SolvabilityReport s = is_solvable(l);
      if (primes.size() <= 2) {
        ++twoprime;
        if (!s.solvable) {
          o.pass = false;
          o.detail += " burnside_failure=" + e.name;
        }
      }
      if (s.solvable) {
        for (int mask = 1; mask < (1 << primes.size()); ++mask) {
          std::vector<int> pi;
          for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (1 << i)) pi.push_back(primes[i]);
          // hall_subloops verifies existence and T_x-conjugacy
          // internally and throws on violation.
          SubloopFamily fam = hall_subloops(l, pi);
          if (fam.members.empty()) {
            o.pass = false;
            o.detail += " hall_failure=" + e.name;
          }
          ++halls;
        }
      }
    }
    o.detail = "nonassociative=" + std::to_string(nonassoc) +
               " two_prime_orders=" + std::to_string(twoprime) +
               " hall_families=" + std::to_string(halls) + o.detail;
    return o;
  });

  std::printf("acceptance: %d/9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}

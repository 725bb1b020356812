// Sylow and Hall families, solvability, and the RMlt correspondence.
#include "extraloop/sylow.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "extraloop/common.hpp"
#include "extraloop/multgroups.hpp"

namespace extraloop {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, int p) {
  std::uint64_t m = 1;
  while (n % p == 0) {
    n /= p;
    m *= p;
  }
  return m;
}

std::uint64_t pi_part(std::uint64_t n, const std::vector<int>& pi) {
  std::uint64_t m = 1;
  for (int p : pi) m *= p_part(n, p);
  return m;
}

namespace {

// Single-identity associativity scan; cheaper than the full battery.
bool table_is_group(const FiniteLoop& g) {
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = g.mul(x, y);
      for (int z = 0; z < n; ++z)
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z))) return false;
    }
  return true;
}

std::vector<int> orders_of(const FiniteLoop& g) {
  std::vector<int> ord(g.size(), 0);
  for (int x = 0; x < g.size(); ++x) {
    auto o = element_order(g, x);
    ord[x] = o ? *o : -1;  // -1: not power-associative at x
  }
  return ord;
}

bool order_is_p_power(int ord, int p) {
  if (ord <= 0) return false;
  while (ord % p == 0) ord /= p;
  return ord == 1;
}

bool order_is_pi(int ord, const std::vector<int>& pi) {
  if (ord <= 0) return false;
  for (int p : pi)
    while (ord % p == 0) ord /= p;
  return ord == 1;
}

int conj_in_group(const FiniteLoop& g, int x, int s) {
  return g.mul(g.mul(g.inv(x), s), x);
}

ElemSet conj_set(const FiniteLoop& g, const ElemSet& s, int x) {
  ElemSet out;
  out.reserve(s.size());
  for (int e : s) out.push_back(conj_in_group(g, x, e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ElemSet> group_sylow_subgroups(const FiniteLoop& g, int p) {
  if (!is_prime(p)) throw InputError("group_sylow_subgroups: p is not prime");
  if (!table_is_group(g))
    throw InputError("group_sylow_subgroups: table is not associative");
  const int n = g.size();
  const std::uint64_t m = p_part(n, p);
  if (m == 1) return {{0}};
  std::vector<int> ord = orders_of(g);

  // Grow one Sylow subgroup: a proper p-subgroup always has a p-element
  // outside it in its normalizer, and adjoining one stays a p-group.
  ElemSet s{0};
  std::vector<char> in(n, 0);
  in[0] = 1;
  while (s.size() < m) {
    int pick = -1;
    for (int x = 0; x < n && pick < 0; ++x) {
      if (in[x] || !order_is_p_power(ord[x], p)) continue;
      bool normalizes = true;
      for (int e : s)
        if (!in[conj_in_group(g, x, e)]) {
          normalizes = false;
          break;
        }
      if (normalizes) pick = x;
    }
    if (pick < 0)
      throw CheckError("group_sylow_subgroups: growth stalled below p-part");
    std::vector<int> gens = s;
    gens.push_back(pick);
    s = generate_subloop(g, gens);
    std::fill(in.begin(), in.end(), 0);
    for (int e : s) in[e] = 1;
    if (p_part(s.size(), p) != s.size())
      throw CheckError("group_sylow_subgroups: closure left the p-world");
  }

  // The family is the full conjugation orbit.
  std::set<ElemSet> seen{s};
  std::vector<ElemSet> queue{s};
  for (std::size_t at = 0; at < queue.size(); ++at) {
    ElemSet cur = queue[at];
    for (int x = 0; x < n; ++x) {
      ElemSet c = conj_set(g, cur, x);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<ElemSet> family(seen.begin(), seen.end());
  const std::uint64_t count = family.size();
  const std::uint64_t r = n / m;
  if (count % p != 1)
    throw CheckError("group_sylow_subgroups: count is not 1 mod p");
  if (r % count != 0)
    throw CheckError("group_sylow_subgroups: count does not divide the p'-part");
  return family;
}

std::vector<ElemSet> group_hall_subgroups(const FiniteLoop& g,
                                          const std::vector<int>& pi) {
  if (!table_is_group(g))
    throw InputError("group_hall_subgroups: table is not associative");
  const int n = g.size();
  const std::uint64_t t = pi_part(n, pi);
  if (t == 1) return {{0}};
  if (t == static_cast<std::uint64_t>(n)) {
    ElemSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return {all};
  }
  std::vector<int> ord = orders_of(g);
  std::vector<int> pi_elems;
  for (int x = 1; x < n; ++x)
    if (order_is_pi(ord[x], pi)) pi_elems.push_back(x);

  // Every pi-subgroup grows to a larger one by adjoining a pi-element,
  // so breadth-first growth bounded by t visits them all.
  std::set<ElemSet> seen{ElemSet{0}};
  std::vector<ElemSet> queue{ElemSet{0}};
  for (std::size_t at = 0; at < queue.size(); ++at) {
    ElemSet cur = queue[at];
    for (int x : pi_elems) {
      if (contains(cur, x)) continue;
      std::vector<int> gens = cur;
      gens.push_back(x);
      auto grown = generate_subloop_bounded(g, gens, t);
      if (!grown) continue;
      if (seen.insert(*grown).second) queue.push_back(*grown);
    }
  }
  std::vector<ElemSet> family;
  for (const ElemSet& s : seen)
    if (s.size() == t) family.push_back(s);
  // May be empty: Hall subgroups need not exist outside solvable groups.
  return family;
}

ElemSet group_o_p(const FiniteLoop& g, int p) {
  std::vector<int> ord = orders_of(g);
  std::vector<int> gens;
  for (int x = 0; x < g.size(); ++x)
    if (ord[x] > 0 && ord[x] % p != 0) gens.push_back(x);
  return generate_subloop(g, gens);
}

std::optional<int> group_sylow_conjugator_in_op(const FiniteLoop& g,
                                                const ElemSet& p1,
                                                const ElemSet& p2, int p) {
  for (int x : group_o_p(g, p))
    if (conj_set(g, p1, x) == p2) return x;
  return std::nullopt;
}

namespace {

// Map a family living in a view or quotient back to parent indices.
ElemSet map_through(const ElemSet& s, const std::vector<int>& to_parent) {
  ElemSet out;
  out.reserve(s.size());
  for (int e : s) out.push_back(to_parent[e]);
  std::sort(out.begin(), out.end());
  return out;
}

ElemSet pull_back(const ElemSet& cosets, const std::vector<int>& coset_of) {
  ElemSet out;
  std::vector<char> want(*std::max_element(coset_of.begin(), coset_of.end()) +
                             1,
                         0);
  for (int c : cosets) want[c] = 1;
  for (int x = 0; x < static_cast<int>(coset_of.size()); ++x)
    if (want[coset_of[x]]) out.push_back(x);
  return out;
}

// T_x transitivity on a family; conjugators drawn from `movers`.
void check_middle_map_transitivity(const FiniteLoop& l,
                                   const std::vector<ElemSet>& family,
                                   const ElemSet& movers, const char* who) {
  std::vector<Perm> maps;
  maps.reserve(movers.size());
  for (int x : movers) maps.push_back(middle_inner_map(l, x));
  for (const ElemSet& a : family)
    for (const ElemSet& b : family) {
      bool hit = false;
      for (const Perm& t : maps) {
        ElemSet img;
        img.reserve(a.size());
        for (int e : a) img.push_back(t[e]);
        std::sort(img.begin(), img.end());
        if (img == b) {
          hit = true;
          break;
        }
      }
      if (!hit)
        throw CheckError(std::string(who) +
                         ": middle inner maps are not transitive on the family");
    }
}

std::vector<ElemSet> enumerate_bounded_subloops(
    const FiniteLoop& l, const std::vector<int>& seeds, std::uint64_t bound,
    bool (*size_ok)(std::uint64_t, const std::vector<int>&),
    const std::vector<int>& primes) {
  std::set<ElemSet> seen{ElemSet{0}};
  std::vector<ElemSet> queue{ElemSet{0}};
  for (std::size_t at = 0; at < queue.size(); ++at) {
    ElemSet cur = queue[at];
    for (int x : seeds) {
      if (contains(cur, x)) continue;
      std::vector<int> gens = cur;
      gens.push_back(x);
      auto grown = generate_subloop_bounded(l, gens, bound);
      if (!grown || !size_ok(grown->size(), primes)) continue;
      if (seen.insert(*grown).second) queue.push_back(*grown);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<ElemSet> enumerate_p_subloops(const FiniteLoop& l, int p) {
  if (!is_prime(p)) throw InputError("enumerate_p_subloops: p is not prime");
  std::vector<int> ord = orders_of(l);
  std::vector<int> seeds;
  for (int x = 1; x < l.size(); ++x)
    if (order_is_p_power(ord[x], p)) seeds.push_back(x);
  auto ok = [](std::uint64_t sz, const std::vector<int>& pr) {
    return p_part(sz, pr[0]) == sz;
  };
  return enumerate_bounded_subloops(l, seeds, p_part(l.size(), p), ok, {p});
}

std::vector<ElemSet> enumerate_pi_subloops(const FiniteLoop& l,
                                           const std::vector<int>& pi) {
  std::vector<int> ord = orders_of(l);
  std::vector<int> seeds;
  for (int x = 1; x < l.size(); ++x)
    if (order_is_pi(ord[x], pi)) seeds.push_back(x);
  auto ok = [](std::uint64_t sz, const std::vector<int>& pr) {
    return pi_part(sz, pr) == sz;
  };
  return enumerate_bounded_subloops(l, seeds, pi_part(l.size(), pi), ok, pi);
}

namespace {

void check_family_containment(const FiniteLoop& l,
                              const std::vector<ElemSet>& family,
                              const std::vector<ElemSet>& all, const char* who) {
  // Every enumerated subloop embeds in a member, and the maximal-order
  // enumerated subloops are exactly the family (the independent route).
  std::set<ElemSet> fam(family.begin(), family.end());
  const std::uint64_t target = family.front().size();
  std::set<ElemSet> maximal;
  for (const ElemSet& s : all) {
    if (s.size() == target) maximal.insert(s);
    bool inside = false;
    for (const ElemSet& m : family)
      if (std::includes(m.begin(), m.end(), s.begin(), s.end())) {
        inside = true;
        break;
      }
    if (!inside)
      throw CheckError(std::string(who) +
                       ": an enumerated subloop escapes every family member");
  }
  if (maximal != fam)
    throw CheckError(std::string(who) +
                     ": enumeration disagrees with the family");
}

}  // namespace

SubloopFamily sylow_subloops(const FiniteLoop& l, int p) {
  if (!is_prime(p)) throw InputError("sylow_subloops: p is not prime");
  require_extra(l, "sylow_subloops");
  const int n = l.size();
  const std::uint64_t m = p_part(n, p);

  SubloopFamily fam;
  fam.label = "Syl_" + std::to_string(p);
  fam.primes = {p};
  fam.member_order = m;

  ElemSet nuc = nucleus(l);
  if (p != 2) {
    SubloopView view = subloop_as_loop(l, nuc);
    // Odd p-subloops all sit in N, so the p-parts of |Q| and |N| agree.
    if (p_part(nuc.size(), p) != m)
      throw CheckError("sylow_subloops: odd p-part escapes the nucleus");
    for (const ElemSet& s : group_sylow_subgroups(view.loop, p))
      fam.members.push_back(map_through(s, view.to_parent));
  } else {
    ElemSet a = associator_subloop(l);
    Quotient q = quotient(l, a);
    try {
      for (const ElemSet& s : group_sylow_subgroups(q.loop, 2))
        fam.members.push_back(pull_back(s, q.coset_of));
    } catch (const InputError&) {
      throw CheckError(
          "sylow_subloops: quotient by the associator subloop is not a group");
    }
  }
  std::sort(fam.members.begin(), fam.members.end());

  for (const ElemSet& s : fam.members) {
    if (s.size() != m)
      throw CheckError("sylow_subloops: member order is not the p-part");
    if (!is_subloop(l, s))
      throw CheckError("sylow_subloops: member is not a subloop");
  }
  const std::uint64_t count = fam.members.size();
  fam.r = nuc.size() / p_part(nuc.size(), p);
  if (count % p != 1)
    throw CheckError("sylow_subloops: count is not 1 mod p");
  fam.divides_r = fam.r % count == 0;
  if (!fam.divides_r) {
    if (p != 2) throw CheckError("sylow_subloops: count does not divide r");
    fam.divides_r_flagged = true;  // flagged for review, not an error
  }

  check_middle_map_transitivity(l, fam.members, nuc, "sylow_subloops");
  if (m != static_cast<std::uint64_t>(n) && n <= kExhaustiveSubloopLimit)
    check_family_containment(l, fam.members, enumerate_p_subloops(l, p),
                             "sylow_subloops");
  return fam;
}

SubloopFamily hall_subloops(const FiniteLoop& l, std::vector<int> pi) {
  require_extra(l, "hall_subloops");
  std::sort(pi.begin(), pi.end());
  pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
  for (int p : pi)
    if (!is_prime(p)) throw InputError("hall_subloops: pi contains a non-prime");
  const int n = l.size();
  if (!is_solvable(l).solvable)
    throw InputError("hall_subloops: loop is not solvable");

  SubloopFamily fam;
  {
    std::string label = "Hall_{";
    for (std::size_t i = 0; i < pi.size(); ++i)
      label += (i ? "," : "") + std::to_string(pi[i]);
    fam.label = label + "}";
  }
  fam.primes = pi;
  // Primes not dividing |Q| are tolerated and ignored.
  std::vector<int> eff;
  for (int p : pi)
    if (n % p == 0) eff.push_back(p);
  const std::uint64_t t = pi_part(n, eff);
  fam.member_order = t;

  if (t == static_cast<std::uint64_t>(n)) {
    ElemSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    fam.members = {all};
    return fam;
  }
  if (t == 1) {
    fam.members = {ElemSet{0}};
    return fam;
  }

  const bool even = std::find(eff.begin(), eff.end(), 2) != eff.end();
  if (!even) {
    ElemSet nuc = nucleus(l);
    if (pi_part(nuc.size(), eff) != t)
      throw CheckError("hall_subloops: odd pi-part escapes the nucleus");
    SubloopView view = subloop_as_loop(l, nuc);
    for (const ElemSet& s : group_hall_subgroups(view.loop, eff))
      fam.members.push_back(map_through(s, view.to_parent));
  } else {
    ElemSet a = associator_subloop(l);
    Quotient q = quotient(l, a);
    try {
      for (const ElemSet& s : group_hall_subgroups(q.loop, eff))
        fam.members.push_back(pull_back(s, q.coset_of));
    } catch (const InputError&) {
      throw CheckError(
          "hall_subloops: quotient by the associator subloop is not a group");
    }
  }
  std::sort(fam.members.begin(), fam.members.end());
  if (fam.members.empty())
    throw CheckError("hall_subloops: no Hall subloop in a solvable extra loop");

  for (const ElemSet& s : fam.members) {
    if (s.size() != t)
      throw CheckError("hall_subloops: member order is not the pi-part");
    if (!is_subloop(l, s))
      throw CheckError("hall_subloops: member is not a subloop");
  }
  ElemSet everyone(n);
  for (int i = 0; i < n; ++i) everyone[i] = i;
  check_middle_map_transitivity(l, fam.members, everyone, "hall_subloops");
  if (n <= kExhaustiveSubloopLimit)
    check_family_containment(l, fam.members, enumerate_pi_subloops(l, eff),
                             "hall_subloops");
  return fam;
}

namespace {

// One derived step: the smallest normal subloop with abelian-group
// quotient, i.e. the normal closure of all associators and commutators.
ElemSet derived_subloop(const FiniteLoop& l) {
  const int n = l.size();
  std::vector<char> hit(n, 0);
  for (int v : associator_values(l)) hit[v] = 1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < x; ++y) hit[commutator(l, x, y)] = 1;
  std::vector<int> gens;
  for (int v = 0; v < n; ++v)
    if (hit[v]) gens.push_back(v);
  return normal_closure(l, gens);
}

bool derived_series(const FiniteLoop& l, std::vector<ElemSet>* series) {
  // Series entries are in the original loop's indices.
  const int n = l.size();
  ElemSet all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (series) series->push_back(all);

  FiniteLoop cur = l;
  std::vector<int> to_orig = all;
  while (true) {
    ElemSet d = derived_subloop(cur);
    if (d.size() == static_cast<std::size_t>(cur.size())) return false;
    ElemSet in_orig;
    for (int e : d) in_orig.push_back(to_orig[e]);
    std::sort(in_orig.begin(), in_orig.end());
    if (series) series->push_back(in_orig);
    if (d.size() == 1) return true;
    SubloopView view = subloop_as_loop(cur, d);
    std::vector<int> next_map;
    for (int e : view.to_parent) next_map.push_back(to_orig[e]);
    cur = view.loop;
    to_orig = next_map;
  }
}

}  // namespace

SolvabilityReport is_solvable(const FiniteLoop& l) {
  SolvabilityReport rep;
  rep.solvable = derived_series(l, &rep.series);
  if (is_extra(l)) {
    // Independent route for extra loops: solvability passes to and from
    // the nucleus.
    SubloopView nuc = subloop_as_loop(l, nucleus(l));
    if (derived_series(nuc.loop, nullptr) != rep.solvable)
      throw CheckError("is_solvable: loop and nucleus disagree");
  }
  return rep;
}

SylowRmltReport sylow_rmlt_correspondence(const FiniteLoop& l, int p,
                                          std::uint64_t cap) {
  if (!is_prime(p)) throw InputError("sylow_rmlt_correspondence: p not prime");
  require_extra(l, "sylow_rmlt_correspondence");
  SubloopFamily fam = sylow_subloops(l, p);
  PermGroup full = rmlt(l, cap);

  SylowRmltReport rep;
  rep.p = p;
  rep.loop_count = fam.members.size();
  rep.loop_member_order = fam.member_order;
  rep.group_member_order = p_part(full.order(), p);

  // Images of the loop-side family, as sorted index sets inside RMlt.
  std::vector<Perm> extra_gens;
  if (p == 2)
    extra_gens = inner_mapping_group(l, Side::right, cap).generators();
  std::set<ElemSet> images;
  for (const ElemSet& member : fam.members) {
    std::vector<Perm> gens = extra_gens;
    for (int a : member) gens.push_back(right_translation(l, a));
    PermGroup img = PermGroup::closure(l.size(), std::move(gens), cap);
    if (img.order() != rep.group_member_order)
      throw CheckError(
          "sylow_rmlt_correspondence: image order is not the p-part of |RMlt|");
    ElemSet idx;
    for (const Perm& e : img.elements()) {
      int i = full.index_of(e);
      if (i < 0)
        throw CheckError("sylow_rmlt_correspondence: image escapes RMlt");
      idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    if (!images.insert(idx).second)
      throw CheckError("sylow_rmlt_correspondence: map is not injective");
  }

  // Independent route: the conjugation orbit of one image enumerates
  // Syl_p(RMlt) in full.
  std::set<ElemSet> orbit{*images.begin()};
  std::vector<ElemSet> queue{*images.begin()};
  std::vector<int> gen_idx;
  for (const Perm& g : full.generators()) gen_idx.push_back(full.index_of(g));
  for (std::size_t at = 0; at < queue.size(); ++at) {
    ElemSet cur = queue[at];
    for (int g : gen_idx) {
      const int ginv = full.inv(g);
      ElemSet img;
      img.reserve(cur.size());
      for (int e : cur) img.push_back(full.mul(full.mul(ginv, e), g));
      std::sort(img.begin(), img.end());
      if (orbit.insert(img).second) queue.push_back(img);
    }
  }
  rep.group_count = orbit.size();
  rep.bijective = images == orbit;
  if (!rep.bijective)
    throw CheckError(
        "sylow_rmlt_correspondence: images differ from the Sylow orbit");
  return rep;
}

void write_family(std::ostream& out, const SubloopFamily& fam) {
  out << "# " << fam.label << '\n';
  for (const ElemSet& s : fam.members) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  out << "count=" << fam.members.size() << '\n';
  out << "member_order=" << fam.member_order << '\n';
  if (fam.primes.size() == 1) {
    out << "mod_p=" << fam.members.size() % fam.primes[0] << '\n';
    out << "divides_r=" << (fam.divides_r ? "true" : "false");
    if (fam.divides_r_flagged) out << "  # flagged for review";
    out << '\n';
  }
}

}  // namespace extraloop

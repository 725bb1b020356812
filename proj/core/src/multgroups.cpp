// Multiplication groups, inner mapping groups, and the associator-coset
// kernel of an extra loop.
#include "extraloop/multgroups.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "extraloop/common.hpp"
#include "extraloop/structure.hpp"

namespace extraloop {

InnerMaps::InnerMaps(const FiniteLoop& l) : loop(l) {
  t.reserve(l.size());
  for (int x = 0; x < l.size(); ++x) t.push_back(middle_inner_map(l, x));
}

namespace {

std::vector<Perm> all_translations(const FiniteLoop& l, Side side) {
  std::vector<Perm> gens;
  gens.reserve(l.size());
  for (int a = 0; a < l.size(); ++a)
    gens.push_back(side == Side::right ? right_translation(l, a)
                                       : left_translation(l, a));
  return gens;
}

}  // namespace

PermGroup rmlt(const FiniteLoop& l, std::uint64_t cap) {
  return PermGroup::closure(l.size(), all_translations(l, Side::right), cap);
}

PermGroup lmlt(const FiniteLoop& l, std::uint64_t cap) {
  return PermGroup::closure(l.size(), all_translations(l, Side::left), cap);
}

PermGroup inner_mapping_group(const FiniteLoop& l, Side side,
                              std::uint64_t cap) {
  const int n = l.size();
  std::vector<Perm> gens;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Perm g = side == Side::right ? right_inner_map(l, x, y)
                                   : left_inner_map(l, x, y);
      if (!perm_is_identity(g)) gens.push_back(std::move(g));
    }
  PermGroup generated = PermGroup::closure(n, std::move(gens), cap);

  // Independent route: the stabilizer of the identity in the full
  // multiplication group.  For loops the two must coincide.
  PermGroup mlt = side == Side::right ? rmlt(l, cap) : lmlt(l, cap);
  std::uint64_t stab = 0;
  for (const Perm& e : mlt.elements())
    if (e[0] == 0) {
      ++stab;
      if (!generated.contains(e))
        throw CheckError(
            "inner mapping group: identity stabilizer is not generated by "
            "two-argument inner maps");
    }
  if (stab != generated.order())
    throw CheckError(
        "inner mapping group: generated group escapes the identity "
        "stabilizer");
  return generated;
}

AStar a_star(const FiniteLoop& l, std::uint64_t cap) {
  require_extra(l, "a_star");
  const int n = l.size();
  AStar out{PermGroup{}, inner_mapping_group(l, Side::right, cap),
            associator_subloop(l)};
  std::vector<char> in_a(n, 0);
  for (int a : out.assoc) in_a[a] = 1;

  PermGroup full = rmlt(l, cap);
  // xg lies in Ax exactly when (xg)/x lands in A.
  std::vector<Perm> members;
  for (const Perm& g : full.elements()) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = in_a[l.rdiv(g[x], x)];
    if (ok) members.push_back(g);
  }

  // Route two: every product h * R_a with h in RMlt1 and a in A, each
  // exactly once (internal direct product with trivial intersection).
  std::vector<Perm> built;
  for (const Perm& h : out.rmlt1.elements())
    for (int a : out.assoc)
      built.push_back(perm_compose(h, right_translation(l, a)));
  if (built.size() != members.size())
    throw CheckError("a_star: size differs from |RMlt1| * |A|");
  {
    std::vector<Perm> ms = members, bs = built;
    std::sort(ms.begin(), ms.end());
    std::sort(bs.begin(), bs.end());
    if (ms != bs) throw CheckError("a_star: not equal to RMlt1 * R(A)");
    // Distinct pairs giving distinct products pins the intersection at 1.
    for (std::size_t i = 1; i < bs.size(); ++i)
      if (bs[i] == bs[i - 1])
        throw CheckError("a_star: RMlt1 and R(A) overlap");
  }
  // Directness also needs the factors to commute elementwise.
  for (const Perm& h : out.rmlt1.elements())
    for (int a : out.assoc) {
      Perm ra = right_translation(l, a);
      if (perm_compose(h, ra) != perm_compose(ra, h))
        throw CheckError("a_star: RMlt1 and R(A) do not commute");
    }
  for (const Perm& g : members)
    if (!perm_is_identity(perm_compose(g, g)))
      throw CheckError("a_star: an element has order above 2");
  // Normality in RMlt: conjugation by the translation generators.
  std::vector<char> member_set(full.order(), 0);
  for (const Perm& g : members) {
    int idx = full.index_of(g);
    if (idx < 0) throw CheckError("a_star: member escaped RMlt");
    member_set[idx] = 1;
  }
  for (int y = 0; y < n; ++y) {
    Perm ry = right_translation(l, y);
    Perm ry_inv = perm_inverse(ry);
    for (const Perm& g : members) {
      Perm conj = perm_compose(perm_compose(ry_inv, g), ry);
      int idx = full.index_of(conj);
      if (idx < 0 || !member_set[idx])
        throw CheckError("a_star: not normal in RMlt");
    }
  }

  std::vector<Perm> gens = out.rmlt1.generators();
  for (int a : out.assoc)
    if (a != 0) gens.push_back(right_translation(l, a));
  out.group = PermGroup::closure(n, std::move(gens), cap);
  if (out.group.order() != members.size())
    throw CheckError("a_star: generated group differs from the filter");
  for (const Perm& g : members)
    if (!out.group.contains(g))
      throw CheckError("a_star: filter member escapes the generated group");
  return out;
}

void write_perm(std::ostream& out, const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ' ';
    out << p[i];
  }
  out << '\n';
}

void write_permgroup(std::ostream& out, const PermGroup& g,
                     const std::string& name) {
  out << "# " << name << '\n';
  out << "degree " << g.degree() << '\n';
  out << "generators " << g.generators().size() << '\n';
  for (const Perm& p : g.generators()) write_perm(out, p);
  out << "order " << g.order() << '\n';
}

}  // namespace extraloop

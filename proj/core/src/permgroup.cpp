// Breadth-first closure for permutation groups.
#include "extraloop/permgroup.hpp"

#include <string>

#include "extraloop/common.hpp"

namespace extraloop {

PermGroup PermGroup::closure(int degree, std::vector<Perm> generators,
                             std::uint64_t cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const Perm& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw InputError("generator degree mismatch");
  }
  // Duplicate generators only slow the scan; drop them, keeping order.
  for (Perm& p : generators) {
    bool seen = false;
    for (const Perm& q : g.generators_)
      if (p == q) {
        seen = true;
        break;
      }
    if (!seen) g.generators_.push_back(std::move(p));
  }

  g.elements_.push_back(perm_identity(degree));
  g.index_.emplace(g.elements_[0], 0);
  // Every generator has finite order, so closing under right
  // multiplication by generators already yields the full group.
  for (std::size_t at = 0; at < g.elements_.size(); ++at) {
    for (const Perm& gen : g.generators_) {
      Perm next = perm_compose(g.elements_[at], gen);
      if (g.index_.count(next)) continue;
      if (g.elements_.size() >= cap)
        throw ResourceError(
            "permutation group enumeration exceeded cap " +
            std::to_string(cap) + " (at least " +
            std::to_string(g.elements_.size() + 1) + " elements)");
      g.index_.emplace(next, static_cast<int>(g.elements_.size()));
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

PermGroup o_p_subgroup(const PermGroup& g, int p) {
  if (p < 2) throw InputError("o_p_subgroup: p must be at least 2");
  std::vector<Perm> gens;
  for (const Perm& e : g.elements())
    if (perm_order(e) % p != 0) gens.push_back(e);
  // Generators live in g, so the closure cannot exceed |g|.
  return PermGroup::closure(g.degree(), std::move(gens), g.order() + 1);
}

}  // namespace extraloop

// Permutation groups with full element enumeration.
//
// Degrees stay at desk scale (<= 1024) and orders below the enumeration
// cap, so breadth-first closure over the generators replaces any
// stabilizer-chain machinery.  Elements are stored in BFS discovery
// order, identity first, which makes every enumeration deterministic.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "extraloop/loop.hpp"

namespace extraloop {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class PermGroup {
 public:
  // Breadth-first closure of the generators; throws ResourceError with
  // the partial count when the group outgrows the cap.
  static PermGroup closure(int degree, std::vector<Perm> generators,
                           std::uint64_t cap = enumeration_cap());

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  // Position in elements(), or -1.
  int index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }
  int mul(int i, int j) const {
    return index_of(perm_compose(elements_[i], elements_[j]));
  }
  int inv(int i) const { return index_of(perm_inverse(elements_[i])); }

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
};

// Subgroup generated by all elements of order coprime to p.
PermGroup o_p_subgroup(const PermGroup& g, int p);

}  // namespace extraloop

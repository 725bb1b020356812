// Multiplication groups of a finite loop and their distinguished pieces.
//
// Conventions: permutations act on the right (xg = g[x]), composition is
// left factor first, and the loop identity is element 0.  RMlt(Q) is the
// group generated by all right translations, LMlt(Q) by all left
// translations; the pointwise constructions below all lean on complete
// element enumeration (see permgroup.hpp), which is the intended scale.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "extraloop/loop.hpp"
#include "extraloop/permgroup.hpp"

namespace extraloop {

// Cached inner mappings.  t(x) = T_x is precomputed for every x; the
// two-argument maps are built per call.
struct InnerMaps {
  explicit InnerMaps(const FiniteLoop& l);
  const FiniteLoop& loop;
  std::vector<Perm> t;  // t[x] = middle inner map T_x
  Perm r(int x, int y) const { return right_inner_map(loop, x, y); }
  Perm l(int x, int y) const { return left_inner_map(loop, x, y); }
};

// Full right/left multiplication group by breadth-first closure over the
// translations.  ResourceError (with a partial lower bound) if the group
// outgrows the cap.
PermGroup rmlt(const FiniteLoop& l, std::uint64_t cap = enumeration_cap());
PermGroup lmlt(const FiniteLoop& l, std::uint64_t cap = enumeration_cap());

enum class Side { right, left };

// Inner mapping group on the chosen side: the group generated by the
// two-argument inner maps R(x,y) (resp. L(x,y)).  Always cross-checked
// against the stabilizer of the identity inside the fully enumerated
// multiplication group; a mismatch is a CheckError.
PermGroup inner_mapping_group(const FiniteLoop& l, Side side,
                              std::uint64_t cap = enumeration_cap());

// For an extra loop: the set of g in RMlt(Q) with xg in Ax for every x,
// where A is the associator subloop.  Verified on construction to be the
// internal direct product RMlt1(Q) x R(A), elementary abelian 2, and
// normal in RMlt(Q); any failure is a CheckError.
struct AStar {
  PermGroup group;          // the subgroup itself
  PermGroup rmlt1;          // right inner mapping group used in the check
  std::vector<int> assoc;   // elements of the associator subloop
};
AStar a_star(const FiniteLoop& l, std::uint64_t cap = enumeration_cap());

// Serialization: a permutation is one line of images; a group is a
// '#'-commented header, the degree, the generator count and lines, and
// the element count.
void write_perm(std::ostream& out, const Perm& p);
void write_permgroup(std::ostream& out, const PermGroup& g,
                     const std::string& name);

}  // namespace extraloop

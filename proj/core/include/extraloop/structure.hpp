// Subloop structure: generated subloops, nucleus and center, associator
// subloop, normality, quotients, direct products, and isomorphism search.
//
// Subloops are represented as sorted element lists of a parent loop.
// Normality is decided by closure under the inner mappings T_x, R(x,y),
// L(x,y); every positive or negative answer is cross-checked against
// coset well-definedness, and disagreement raises CheckError since the
// two criteria are equivalent.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extraloop/loop.hpp"

namespace extraloop {

using ElemSet = std::vector<int>;  // sorted, duplicate-free

bool contains(const ElemSet& s, int x);

ElemSet generate_subloop(const FiniteLoop& L, const std::vector<int>& gens);
// As above, but abandons the closure once it would exceed `bound`
// elements.  Lets subloop enumerations discard oversized candidates
// without paying for the full closure.
std::optional<ElemSet> generate_subloop_bounded(const FiniteLoop& L,
                                                const std::vector<int>& gens,
                                                std::size_t bound);
bool is_subloop(const FiniteLoop& L, const ElemSet& s);

int associator(const FiniteLoop& L, int x, int y, int z);  // (x*yz)a = xy*z
int commutator(const FiniteLoop& L, int x, int y);         // xy = (yx)c

ElemSet nucleus(const FiniteLoop& L);
ElemSet center(const FiniteLoop& L);
// Subloop generated by all associators (x,y,z).
ElemSet associator_subloop(const FiniteLoop& L);
// All distinct associator values, before closing into a subloop.
ElemSet associator_values(const FiniteLoop& L);

bool is_normal(const FiniteLoop& L, const ElemSet& s);
// Smallest normal subloop containing the given elements.
ElemSet normal_closure(const FiniteLoop& L, const std::vector<int>& gens);

struct Quotient {
  FiniteLoop loop;          // cosets renumbered by minimum representative
  std::vector<int> coset_of;  // parent element -> coset index
  std::vector<int> rep_of;    // coset index -> least representative
};
Quotient quotient(const FiniteLoop& L, const ElemSet& s);

// Indexing of the product is (x1, x2) -> x1*|b| + x2.
FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b);

struct SubloopView {
  FiniteLoop loop;            // the subloop as a standalone loop
  std::vector<int> to_parent;  // new index -> parent element
};
SubloopView subloop_as_loop(const FiniteLoop& L, const ElemSet& s);

// Relabeling-invariant summary used to pre-filter isomorphism tests and
// to order census classes.
std::string fingerprint(const FiniteLoop& L);

// Bijection f (as f[x] in a -> b) with f(xy) = f(x)f(y), or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FiniteLoop& a,
                                                 const FiniteLoop& b);

// Whether f is a bijection a -> b with f(xy) = f(x)f(y).
bool is_isomorphism(const FiniteLoop& a, const FiniteLoop& b,
                    const std::vector<int>& f);

// Full automorphism group, enumerated; guarded to |L| <= 64 since the
// search stores every automorphism.
std::vector<Perm> automorphism_group(const FiniteLoop& L);

}  // namespace extraloop

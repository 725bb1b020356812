// Small built-in loops and groups used as fixtures and controls.
#pragma once

#include "extraloop/loop.hpp"

namespace extraloop {

FiniteLoop cyclic_group(int m);
FiniteLoop boolean_group(int rank);  // (Z_2)^rank, elements as bitmasks
FiniteLoop symmetric_group_3();
FiniteLoop alternating_group_5();    // 60 even permutations of 5 points

// Chein double M(G,2) on G u Gu: g*h = gh, g*(hu) = (hg)u,
// (gu)*h = (g h^-1)u, (gu)*(hu) = h^-1 g.  Moufang for any group G;
// nonassociative exactly when G is nonabelian.
FiniteLoop chein_double(const FiniteLoop& g);

// The 6-element nonassociative conjugacy closed loop (lexicographically
// least table among the 40 reduced ones); not Moufang, not power
// associative, and has no subloop of order 2.
FiniteLoop cc6_loop();

}  // namespace extraloop

// Property suite: the structural laws of extra loops, each checked on a
// concrete Cayley table and reported pass/fail/skip with its
// quantification mode (exhaustive sweep vs seeded sampling).
//
// Law tags, in report order:
//   fenyves        the three defining identities and Moufang+CC agree
//   square         squares in N, boolean N-quotient, odd orders in N
//   assoc-1..5     associator symmetry, N-translation invariance,
//                  inverse invariance, commuting with arguments,
//                  A <= Z(N) with A elementwise of exponent 2
//   assoc-conj     (x,y,zt) = (x,y,tz) = (x,y,z) (x,y,t)T_z
//                            = (x,y,z)T_t (x,y,t)
//   assoc-commutes [z,(x,y,t)]=1 iff [t,(x,y,z)]=1 iff products merge
//   assoc-nuc      a=(x,y,z) is central in <{x,y,z} u N>, whose
//                  associator subloop is {1,a}
//   assoc-index    |A : A n Z| avoids {2,4,8}; at index 16 the subset
//                  products q_S land in distinct cosets
//   center         nonassociative implies |Z n A| >= 2
//   assoc-512      an associator outside Z forces |A| >= 32, |Q:N| >= 16
//   mlt-1..6       inner right/left multiplications are automorphisms,
//                  R(x,y) commute, the four two-sided inner maps agree,
//                  R(x,y)^2 = 1, RMlt_1 = LMlt_1 boolean, and
//                  zR(x,y) = z(x,y,z)
//   t-1..5         T_x automorphism iff x in N; T_x|N in Aut(N);
//                  x -> T_x|N a homomorphism; T_x(A) = A with group
//                  quotient Q/A; T_x^2 identity on A
//   a-star         {g in RMlt : xg in Ax} = RMlt_1 x R(A), boolean,
//                  normal in RMlt
//   odd-presylow-1 odd-order elements of RMlt are nuclear translations
//   odd-presylow-4 S -> R(S) bijects odd-order subloops with odd-order
//                  subgroups of RMlt
//   right-assoc    right-associated products of pairwise-commuting
//                  tuples are permutation invariant (lengths 2..5)
//   extension-loop the loop rebuilds as B |x_tau^psi N (abelian N) and
//                  the builder's closed division forms hold
//   assocpsi       associators of the rebuilt extension depend only on
//                  the B-components and vanish when one is 0
//   inherit        a Moufang non-extra B still gives a Moufang B |x G
//   issemi         abelian-nucleus loops split as B |x O^2(N)
//   p-loop         |Q| is a p-power iff all element orders are
//   sylow          Sylow family laws for every p | |Q| (count 1 mod p,
//                  nuclear T_x transitivity, extension of p-subloops)
//   sylowb         group-level Sylow conjugacy inside O^p for N and Q/A
//   burnside       two-prime orders are solvable
//   hall           Hall pi-families exist and are T_x-conjugate for
//                  every pi (solvable loops)
//
// Laws whose hypotheses a given loop does not meet (e.g. Hall theory on
// a nonsolvable loop) or whose stated enumeration bounds are exceeded
// report skipped=true with the reason in detail; a skip never hides a
// failed verification.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "extraloop/loop.hpp"

namespace extraloop {

struct SuiteOptions {
  std::uint64_t seed = 0;
  // Sampling floor for constant-cost per-tuple laws when a domain is too
  // large to sweep.
  std::uint64_t sample_tuples = 100000;
  // Elementary-operation budget per law; decides exhaustive vs sampled.
  std::uint64_t work_budget = 400000000;
  // Permutation-group enumeration cap (multiplication-group laws).
  std::uint64_t cap = enumeration_cap();
};

struct LawCheck {
  std::string tag;
  bool pass = false;
  bool skipped = false;     // hypothesis unmet or stated bound exceeded
  bool exhaustive = false;  // full sweep (possibly through a verified
                            // coset reduction); false means sampled
  std::uint64_t tuples = 0; // tuples/instances examined
  std::string detail;
};

struct SuiteReport {
  std::string loop_name;
  int order = 0;
  std::vector<LawCheck> checks;
  bool all_pass() const;  // every law passed or was skipped-with-reason
  const LawCheck* find(const std::string& tag) const;
};

SuiteReport property_suite(const FiniteLoop& l, const SuiteOptions& opts = {});

// One "law ..." line per check, prefixed by a "suite ..." header line.
void write_suite_report(std::ostream& out, const SuiteReport& r);

// The loops the acceptance run sweeps: census representatives at order
// 16 (both the nonassociative and the group classes) and order 48, the
// named landmark loops, and three group controls.
struct CatalogEntry {
  std::string name;
  FiniteLoop loop;
};
std::vector<CatalogEntry> acceptance_catalog(int jobs = 0);

}  // namespace extraloop

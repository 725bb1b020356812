// Sylow p-subloops, Hall pi-subloops, and solvability for extra loops,
// plus the group-level Sylow/Hall machinery they reduce to.
//
// Reductions: for odd p every p-subloop sits inside the group N(Q), so
// Sylow families come from N; for p = 2 they are pullbacks of the Sylow
// 2-subgroups of the group Q/A through the quotient map (every Sylow
// 2-subloop contains A).  Hall families work the same way with N
// replaced by Q/A when 2 is in pi.  Each family is re-verified against
// a direct enumeration of p- (resp. pi-) subloops whenever the parent
// loop is small enough for that to be exhaustive.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extraloop/loop.hpp"
#include "extraloop/structure.hpp"

namespace extraloop {

// ---- arithmetic helpers ----
bool is_prime(int p);
std::uint64_t p_part(std::uint64_t n, int p);          // largest p-power dividing n
std::uint64_t pi_part(std::uint64_t n, const std::vector<int>& pi);

// ---- group-level machinery (index tables verified associative) ----

// All Sylow p-subgroups: one found by normalizer growth from p-elements,
// the rest as its conjugation orbit.  Members are sorted element lists.
std::vector<ElemSet> group_sylow_subgroups(const FiniteLoop& g, int p);
// All Hall pi-subgroups of a solvable group, by bounded closure over
// pi-elements.  CheckError if none exists (P. Hall's theorem).
std::vector<ElemSet> group_hall_subgroups(const FiniteLoop& g,
                                          const std::vector<int>& pi);
// A conjugator x with x^-1 P1 x = P2 lying in O^p(g) (the subgroup
// generated by elements of order coprime to p), or nullopt.
std::optional<int> group_sylow_conjugator_in_op(const FiniteLoop& g,
                                                const ElemSet& p1,
                                                const ElemSet& p2, int p);
// The subgroup generated by all elements of order coprime to p.
ElemSet group_o_p(const FiniteLoop& g, int p);

// ---- loop-level families ----

struct SubloopFamily {
  std::string label;            // "Syl_p" or "Hall_{...}"
  std::vector<int> primes;      // {p}, or pi sorted
  std::vector<ElemSet> members;  // sorted element lists, deterministic order
  std::uint64_t member_order = 0;
  // Sylow verification summary.  count mod p == 1 is enforced; the
  // divisibility of the count into r = p'-part of |N| is enforced for
  // odd p and only flagged for p = 2 (divides_r stays reportable).
  std::uint64_t r = 0;
  bool divides_r = true;
  bool divides_r_flagged = false;  // true when p = 2 and divides_r failed
};

// Sylow p-subloops of an extra loop.  Verifies: member order is the full
// p-part of |Q|; count == 1 mod p; count | r (see above); the middle
// inner maps T_x, x in N, act transitively on the family; and (when the
// loop is small enough, or the family is the whole loop) every p-subloop
// lies inside a member.  Violated theorems raise CheckError.
SubloopFamily sylow_subloops(const FiniteLoop& l, int p);

// Hall pi-subloops of a solvable extra loop (InputError when the loop is
// not solvable).  Primes in pi that do not divide |Q| are ignored.
// Verifies existence, T_x transitivity with x ranging over Q, and the
// embedding of every pi-subloop when exhaustive enumeration is feasible.
SubloopFamily hall_subloops(const FiniteLoop& l, std::vector<int> pi);

// Largest parent order at which the families are cross-checked against
// exhaustive subloop enumeration.
inline constexpr int kExhaustiveSubloopLimit = 240;

// All p-subloops (resp. pi-subloops) of the loop, by breadth-first
// growth: add one element of p-power (pi-) order at a time and close.
std::vector<ElemSet> enumerate_p_subloops(const FiniteLoop& l, int p);
std::vector<ElemSet> enumerate_pi_subloops(const FiniteLoop& l,
                                           const std::vector<int>& pi);

// ---- solvability ----

struct SolvabilityReport {
  bool solvable = false;
  // Derived series Q = series[0] > series[1] > ...; reaches {0} exactly
  // when solvable, otherwise ends at the stable nontrivial term.
  std::vector<ElemSet> series;
};

// Iterated derived series: each step is the smallest normal subloop
// whose quotient is an abelian group (the normal closure of all
// associator and commutator values).  For extra loops the result is
// cross-checked against solvability of the group N(Q).
SolvabilityReport is_solvable(const FiniteLoop& l);

// ---- correspondence with the right multiplication group ----

struct SylowRmltReport {
  int p = 0;
  std::uint64_t loop_count = 0;   // |Syl_p(Q)|
  std::uint64_t group_count = 0;  // |Syl_p(RMlt(Q))|
  std::uint64_t loop_member_order = 0;
  std::uint64_t group_member_order = 0;
  bool bijective = false;
};

// Verifies the bijection Syl_p(Q) -> Syl_p(RMlt(Q)): P -> R(P) for odd
// p, P -> RMlt_1 * R(P) for p = 2.  Checks images are Sylow subgroups,
// injectivity, and surjectivity against the conjugation orbit.
SylowRmltReport sylow_rmlt_correspondence(const FiniteLoop& l, int p,
                                          std::uint64_t cap = enumeration_cap());

// CLI format: one line per member (sorted element list), then summary
// lines "count=...", "mod_p=...", "divides_r=...".
void write_family(std::ostream& out, const SubloopFamily& fam);

}  // namespace extraloop

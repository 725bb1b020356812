// Isomorphism-classification pipelines: the order-16 central-extension
// census, the order-16p semidirect census, and equivalence of characters
// under the automorphism group of the base loop.
#pragma once

#include <string>
#include <vector>

#include "extraloop/loop.hpp"
#include "extraloop/structure.hpp"

namespace extraloop {

// One isomorphism class of a classified family: the lexicographically
// least member table as representative, the shared relabeling-invariant
// fingerprint, and how many enumerated candidates fell into the class.
// Any two members of a class are isomorphic and representatives of
// distinct classes are certified non-isomorphic, both by the
// backtracking isomorphism search.
struct IsoClass {
  FiniteLoop representative;
  std::string fingerprint;
  int members = 0;
};

// Classify a family of equal-order loops up to isomorphism.  Candidates
// are bucketed by fingerprint (a relabeling invariant, so no class
// straddles buckets), buckets are processed in parallel (jobs <= 0 picks
// the hardware concurrency), and isomorphism searches run only inside a
// bucket.  Classes come back ordered by fingerprint, then by
// representative table bytes, so the output is deterministic regardless
// of thread scheduling.
std::vector<IsoClass> classify_loops(const std::vector<FiniteLoop>& family,
                                     int jobs = 0);

struct Census16 {
  std::vector<IsoClass> nonassociative;  // exactly five extra-loop classes
  std::vector<IsoClass> associative;     // group classes (zero-defect twists)
  int candidates = 0;        // loops enumerated across both cocycle cosets
  int cocycle_kernel_dim = 0;  // GF(2) dimension of the zero-defect space
};

// Enumerate every central extension of Z_2 by Z_2^3 whose associativity
// defect is one of the symmetric alternating trilinear forms on Z_2^3.
// There is exactly one nonzero such form (asserted by enumeration); one
// cocycle realizing it comes from build_psi, the zero-defect cocycles
// form the kernel of a GF(2) linear system over the 49 free cells, and
// the loops of both cosets (defect zero and defect nonzero) are
// classified together.  Certifies (CheckError): kernel dimension 10, so
// 1024 loops per coset; every nonzero-defect loop nonassociative and
// every zero-defect loop a group; exactly 5 nonassociative classes, each
// of them extra; exactly one nonassociative class isomorphic to
// cayley_loop() and exactly one isomorphic to canonical16().
Census16 census_order16(int jobs = 0);

// For each of the five nonassociative order-16 classes B and every
// character chi: B -> {+1,-1}, build the semidirect product B x| Z_p and
// classify.  Certifies (CheckError): exactly 16 classes; every built
// member has nucleus isomorphic to Z_2 x Z_p (= Z_2p) and decomposes
// under issemi_decompose.  Throws InputError unless p is an odd prime,
// ResourceError when p exceeds cap.
std::vector<IsoClass> census_16p(int p, int jobs = 0, int cap = 13);

// Kernels of the characters B -> {+1,-1}: B itself first (the trivial
// character), then the index-2 normal subloops containing every square
// and every associator, in a deterministic order.  Requires B extra.
std::vector<ElemSet> character_kernels(const FiniteLoop& b);

// The 0/1 character vector with the given kernel.  Throws InputError
// when the kernel is not the kernel of a homomorphism to {+1,-1}.
std::vector<char> character_from_kernel(const FiniteLoop& b,
                                        const ElemSet& kernel);

// Whether the characters with kernels ker_tau and ker_sigma are related
// by an automorphism of B.  Requires B an extra loop of 2-power order;
// characters are validated like character_from_kernel.  Also builds
// B x| Z_3 for both characters and asserts (CheckError) that the loops
// are isomorphic exactly when the characters are equivalent.
bool tau_equivalence(const FiniteLoop& b, const ElemSet& ker_tau,
                     const ElemSet& ker_sigma);

// Number of orbits of Aut(B) on the characters of B.  Summed over the
// five order-16 classes this recounts the order-16p census by orbit
// counting instead of loop isomorphism.
int count_character_orbits(const FiniteLoop& b);

// Write a census to disk: dir/stem_manifest.txt lists one line per class
// ("class <id> members=<k> rep=<stem>_<id>.tbl fp=<fingerprint>") and
// each representative table goes to dir/<stem>_<id>.tbl in the Cayley
// text format.  Creates dir if needed.
void write_census_files(const std::string& dir, const std::string& stem,
                        const std::vector<IsoClass>& classes);

}  // namespace extraloop

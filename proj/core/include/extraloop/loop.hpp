// Finite loops presented by Cayley tables.
//
// Elements are 0..n-1 and 0 is always the identity.  The table is stored
// flat, row-major: table[x*n+y] = x*y, so row x lists the images of the
// left translation L_x and column y the images of the right translation
// R_y.  Left and right division tables are precomputed, making ldiv and
// rdiv O(1).
//
// Permutations act on the right (postfix): the image of x under g is
// g[x], and compose(g, h) applies g first, matching x(gh) = (xg)h.
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extraloop/common.hpp"

namespace extraloop {

using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& g, const Perm& h);  // apply g, then h
Perm perm_inverse(const Perm& g);
bool perm_is_identity(const Perm& g);
int perm_order(const Perm& g);  // lcm of cycle lengths

class FiniteLoop {
 public:
  // Validates that the table is a Latin square on 0..n-1 with two-sided
  // identity 0; throws InputError otherwise.
  FiniteLoop(int n, std::vector<int> table, std::string name = "");

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int mul(int x, int y) const { return table_[x * n_ + y]; }
  // Unique z with x*z = y.
  int ldiv(int x, int y) const { return ldiv_[x * n_ + y]; }
  // Unique z with z*x = y.
  int rdiv(int y, int x) const { return rdiv_[x * n_ + y]; }
  // Unique z with x*z = 0.
  int inv(int x) const { return ldiv_[x * n_]; }

  const std::vector<int>& table() const { return table_; }
  const int* row(int x) const { return table_.data() + x * n_; }

  bool operator==(const FiniteLoop& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  int n_;
  std::vector<int> table_;
  std::vector<int> ldiv_;
  std::vector<int> rdiv_;
  std::string name_;
};

// Translations and the standard inner mappings, as permutations of the
// element set.  T(x) = R(x) L(x)^-1 conjugates in the group case; the
// two-argument maps R(x,y) = R_x R_y R_{xy}^-1 and L(x,y) = L_x L_y
// L_{yx}^-1 fix the identity and generate the inner mapping group
// together with the T(x).
Perm right_translation(const FiniteLoop& L, int y);
Perm left_translation(const FiniteLoop& L, int x);
Perm middle_map(const FiniteLoop& L, int x);           // T_x
Perm right_inner_map(const FiniteLoop& L, int x, int y);  // R(x,y)
Perm left_inner_map(const FiniteLoop& L, int x, int y);   // L(x,y)
Perm middle_inner_map(const FiniteLoop& L, int x);        // T_x: z -> x\(zx)

// Order of x as the least k >= 1 with the right-associated power
// x^k = x*(x^(k-1)) equal to the identity, accepted only after checking
// that {x^0..x^(k-1)} multiplies as the cyclic group of order k.
// Returns nullopt when powers of x do not associate.
std::optional<int> element_order(const FiniteLoop& L, int x);

// Multiset of element orders, as order -> count.  Throws CheckError if
// some element is not power-associative (callers that merely want a
// fingerprint should use order_profile_or_flag).
std::map<int, int> order_profile(const FiniteLoop& L);

// Same, but elements without a well-defined order are counted under -1.
std::map<int, int> order_profile_or_flag(const FiniteLoop& L);

struct IdentityReport {
  bool extra1 = false;       // (x*yz)*y == xy*zy
  bool extra2 = false;       // yz*yx == y*(zy*x)
  bool extra3 = false;       // (xy*z)*x == x*(y*zx)
  bool moufang = false;      // ((zx)y)x == z(x(yx))
  bool conj_closed = false;  // left/right translations closed under conjugation
  bool flexible = false;     // (xy)x == x(yx)
  bool associative = false;
  bool commutative = false;
  bool boolean_group = false;     // abelian group of exponent <= 2
  bool power_associative = false;  // every element has a well-defined order

  bool extra() const { return moufang && conj_closed; }
};

IdentityReport check_identities(const FiniteLoop& L);

// Cheap subset of check_identities for guards: Moufang + conjugacy
// closure, i.e. the extra-loop test alone.
bool is_extra(const FiniteLoop& L);

// Throws InputError mentioning who required it when L is not extra.
void require_extra(const FiniteLoop& L, const char* who);

// ---- Cayley table text format ----------------------------------------
//
// Line 1: n.  Lines 2..n+1: n whitespace-separated integers in 0..n-1,
// line x+1 giving row x of the table.  '#' starts a comment that runs to
// end of line.  The stored loop always has identity 0; when the input
// table's identity is some other element e, the loader relabels by
// swapping 0 and e and records the permutation applied.

struct LoadedLoop {
  FiniteLoop loop;
  // relabel[old_index] = new_index; identity when no renumbering happened.
  std::vector<int> relabel;
};

LoadedLoop parse_table(std::istream& in, const std::string& origin = "<stream>");
LoadedLoop load_table(const std::string& path);
void write_table(std::ostream& out, const FiniteLoop& L,
                 const std::vector<std::string>& comments = {});
void save_table(const std::string& path, const FiniteLoop& L,
                const std::vector<std::string>& comments = {});

}  // namespace extraloop

#include "extraloop/loop.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace extraloop {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& g, const Perm& h) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = h[g[x]];
  return r;
}

Perm perm_inverse(const Perm& g) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[g[x]] = static_cast<int>(x);
  return r;
}

bool perm_is_identity(const Perm& g) {
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g[x] != static_cast<int>(x)) return false;
  return true;
}

int perm_order(const Perm& g) {
  const int n = static_cast<int>(g.size());
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = g[y]) {
      seen[y] = 1;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

FiniteLoop::FiniteLoop(int n, std::vector<int> table, std::string name)
    : n_(n), table_(std::move(table)), name_(std::move(name)) {
  if (n_ < 1) throw InputError("loop order must be at least 1");
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw InputError("table size does not match declared order " +
                     std::to_string(n_));
  for (int v : table_)
    if (v < 0 || v >= n_)
      throw InputError("table entry " + std::to_string(v) +
                       " out of range 0.." + std::to_string(n_ - 1));
  std::vector<char> seen(n_);
  for (int x = 0; x < n_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n_; ++y) {
      int v = table_[x * n_ + y];
      if (seen[v])
        throw InputError("row " + std::to_string(x) +
                         " is not a permutation (repeats " +
                         std::to_string(v) + ")");
      seen[v] = 1;
    }
  }
  for (int y = 0; y < n_; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n_; ++x) {
      int v = table_[x * n_ + y];
      if (seen[v])
        throw InputError("column " + std::to_string(y) +
                         " is not a permutation (repeats " +
                         std::to_string(v) + ")");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n_; ++x) {
    if (table_[x] != x)
      throw InputError("element 0 is not a left identity at " +
                       std::to_string(x));
    if (table_[x * n_] != x)
      throw InputError("element 0 is not a right identity at " +
                       std::to_string(x));
  }
  ldiv_.assign(static_cast<std::size_t>(n_) * n_, -1);
  rdiv_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int x = 0; x < n_; ++x)
    for (int z = 0; z < n_; ++z) ldiv_[x * n_ + table_[x * n_ + z]] = z;
  for (int z = 0; z < n_; ++z)
    for (int x = 0; x < n_; ++x) rdiv_[x * n_ + table_[z * n_ + x]] = z;
}

Perm right_translation(const FiniteLoop& L, int y) {
  const int n = L.size();
  Perm p(n);
  for (int x = 0; x < n; ++x) p[x] = L.mul(x, y);
  return p;
}

Perm left_translation(const FiniteLoop& L, int x) {
  const int n = L.size();
  Perm p(n);
  for (int y = 0; y < n; ++y) p[y] = L.mul(x, y);
  return p;
}

Perm middle_map(const FiniteLoop& L, int x) {
  const int n = L.size();
  Perm p(n);
  for (int z = 0; z < n; ++z) p[z] = L.ldiv(x, L.mul(z, x));
  return p;
}

Perm right_inner_map(const FiniteLoop& L, int x, int y) {
  const int n = L.size();
  const int xy = L.mul(x, y);
  Perm p(n);
  for (int z = 0; z < n; ++z) p[z] = L.rdiv(L.mul(L.mul(z, x), y), xy);
  return p;
}

Perm left_inner_map(const FiniteLoop& L, int x, int y) {
  const int n = L.size();
  const int yx = L.mul(y, x);
  Perm p(n);
  for (int z = 0; z < n; ++z) p[z] = L.ldiv(yx, L.mul(y, L.mul(x, z)));
  return p;
}

Perm middle_inner_map(const FiniteLoop& L, int x) {
  const int n = L.size();
  Perm p(n);
  for (int z = 0; z < n; ++z) p[z] = L.ldiv(x, L.mul(z, x));
  return p;
}

std::optional<int> element_order(const FiniteLoop& L, int x) {
  const int n = L.size();
  // Right-associated powers x^k = x*(x^(k-1)) are the L_x orbit of the
  // identity, so they return to 0 after the orbit length.
  std::vector<int> pow;
  pow.reserve(8);
  pow.push_back(0);
  int r = x;
  while (r != 0) {
    pow.push_back(r);
    r = L.mul(x, r);
    if (static_cast<int>(pow.size()) > n) return std::nullopt;  // unreachable
  }
  const int k = static_cast<int>(pow.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (L.mul(pow[i], pow[j]) != pow[(i + j) % k]) return std::nullopt;
  return k;
}

std::map<int, int> order_profile(const FiniteLoop& L) {
  std::map<int, int> prof;
  for (int x = 0; x < L.size(); ++x) {
    auto o = element_order(L, x);
    if (!o)
      throw CheckError("element " + std::to_string(x) +
                       " has no well-defined order (powers do not associate)");
    ++prof[*o];
  }
  return prof;
}

std::map<int, int> order_profile_or_flag(const FiniteLoop& L) {
  std::map<int, int> prof;
  for (int x = 0; x < L.size(); ++x) {
    auto o = element_order(L, x);
    ++prof[o ? *o : -1];
  }
  return prof;
}

namespace {

bool holds_extra1(const int* t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = t[x * n + y];
      const int* rowy = t + y * n;
      for (int z = 0; z < n; ++z)
        if (t[t[x * n + rowy[z]] * n + y] != t[xy * n + t[z * n + y]])
          return false;
    }
  return true;
}

bool holds_extra2(const int* t, int n) {
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      const int yz = t[y * n + z];
      const int zy = t[z * n + y];
      for (int x = 0; x < n; ++x)
        if (t[yz * n + t[y * n + x]] != t[y * n + t[zy * n + x]])
          return false;
    }
  return true;
}

bool holds_extra3(const int* t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = t[x * n + y];
      for (int z = 0; z < n; ++z)
        if (t[t[xy * n + z] * n + x] != t[x * n + t[y * n + t[z * n + x]]])
          return false;
    }
  return true;
}

bool holds_moufang(const int* t, int n) {
  // Right Moufang identity ((zx)y)x = z(x(yx)); in a loop any one
  // Moufang identity implies the rest.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int yx = t[y * n + x];
      const int x_yx = t[x * n + yx];
      for (int z = 0; z < n; ++z)
        if (t[t[t[z * n + x] * n + y] * n + x] != t[z * n + x_yx])
          return false;
    }
  return true;
}

bool holds_conj_closed(const FiniteLoop& L) {
  const int n = L.size();
  // L_x^-1 L_y L_x must be some L_z; evaluating at 0 forces z, then the
  // remaining points are checked.  Same on the right.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int z = L.mul(x, L.mul(y, L.inv(x)));
      for (int v = 0; v < n; ++v)
        if (L.mul(x, L.mul(y, L.ldiv(x, v))) != L.mul(z, v)) return false;
      const int w = L.mul(L.mul(L.rdiv(0, x), y), x);
      for (int v = 0; v < n; ++v)
        if (L.mul(L.mul(L.rdiv(v, x), y), x) != L.mul(v, w)) return false;
    }
  return true;
}

bool holds_flexible(const int* t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t[t[x * n + y] * n + x] != t[x * n + t[y * n + x]]) return false;
  return true;
}

bool holds_associative(const int* t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = t[x * n + y];
      const int* rowy = t + y * n;
      for (int z = 0; z < n; ++z)
        if (t[xy * n + z] != t[x * n + rowy[z]]) return false;
    }
  return true;
}

bool holds_commutative(const int* t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (t[x * n + y] != t[y * n + x]) return false;
  return true;
}

}  // namespace

IdentityReport check_identities(const FiniteLoop& L) {
  const int n = L.size();
  const int* t = L.table().data();
  IdentityReport r;
  r.extra1 = holds_extra1(t, n);
  r.extra2 = holds_extra2(t, n);
  r.extra3 = holds_extra3(t, n);
  r.moufang = holds_moufang(t, n);
  r.conj_closed = holds_conj_closed(L);
  r.flexible = holds_flexible(t, n);
  r.associative = holds_associative(t, n);
  r.commutative = holds_commutative(t, n);
  bool exp2 = true;
  for (int x = 0; x < n && exp2; ++x) exp2 = L.mul(x, x) == 0;
  r.boolean_group = r.associative && r.commutative && exp2;
  r.power_associative = true;
  for (int x = 0; x < n && r.power_associative; ++x)
    r.power_associative = element_order(L, x).has_value();
  return r;
}

bool is_extra(const FiniteLoop& L) {
  const int n = L.size();
  return holds_moufang(L.table().data(), n) && holds_conj_closed(L);
}

void require_extra(const FiniteLoop& L, const char* who) {
  if (!is_extra(L))
    throw InputError(std::string(who) +
                     " requires an extra loop (Moufang and conjugacy closed)");
}

// ---- text format -------------------------------------------------------

LoadedLoop parse_table(std::istream& in, const std::string& origin) {
  std::vector<int> nums;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long v;
    while (ls >> v) nums.push_back(static_cast<int>(v));
    if (!ls.eof()) {
      ls.clear();
      std::string junk;
      ls >> junk;
      if (!junk.empty())
        throw InputError(origin + ": unexpected token '" + junk + "'");
    }
  }
  if (nums.empty()) throw InputError(origin + ": empty table file");
  const int n = nums[0];
  if (n < 1 || n > 65536)
    throw InputError(origin + ": implausible order " + std::to_string(n));
  if (nums.size() != static_cast<std::size_t>(n) * n + 1)
    throw InputError(origin + ": expected " + std::to_string(n * n) +
                     " entries after the order, got " +
                     std::to_string(nums.size() - 1));
  std::vector<int> t(nums.begin() + 1, nums.end());
  for (int v : t)
    if (v < 0 || v >= n)
      throw InputError(origin + ": entry " + std::to_string(v) +
                       " out of range 0.." + std::to_string(n - 1));

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t[c * n + x] == x && t[x * n + c] == x;
    if (ok) e = c;
  }
  if (e < 0) throw InputError(origin + ": table has no two-sided identity");

  std::vector<int> relabel(n);
  for (int x = 0; x < n; ++x) relabel[x] = x;
  if (e != 0) {
    std::swap(relabel[0], relabel[e]);
    std::vector<int> t2(t.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        t2[relabel[x] * n + relabel[y]] = relabel[t[x * n + y]];
    t = std::move(t2);
  }
  return LoadedLoop{FiniteLoop(n, std::move(t), origin), std::move(relabel)};
}

LoadedLoop load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open table file " + path);
  return parse_table(f, path);
}

void write_table(std::ostream& out, const FiniteLoop& L,
                 const std::vector<std::string>& comments) {
  for (const auto& c : comments)
    out << (c.rfind('#', 0) == 0 ? "" : "# ") << c << "\n";
  const int n = L.size();
  out << n << "\n";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) out << (y ? " " : "") << L.mul(x, y);
    out << "\n";
  }
}

void save_table(const std::string& path, const FiniteLoop& L,
                const std::vector<std::string>& comments) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot open " + path + " for writing");
  write_table(f, L, comments);
  if (!f.good()) throw InputError("write failed for " + path);
}

}  // namespace extraloop

#include "extraloop/structure.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace extraloop {

bool contains(const ElemSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

ElemSet generate_subloop(const FiniteLoop& L, const std::vector<int>& gens) {
  const int n = L.size();
  std::vector<char> in(n, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (int g : gens) {
    if (g < 0 || g >= n) throw InputError("generator out of range");
    add(g);
  }
  // Products alone close a finite subset into a subloop: the closure is
  // stable under every L_x and R_x with x inside, and those restrict to
  // bijections, so divisions and the identity land inside too.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(L.mul(elems[i], elems[j]));
      add(L.mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::optional<ElemSet> generate_subloop_bounded(const FiniteLoop& L,
                                                const std::vector<int>& gens,
                                                std::size_t bound) {
  const int n = L.size();
  std::vector<char> in(n, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (int g : gens) {
    if (g < 0 || g >= n) throw InputError("generator out of range");
    add(g);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems.size() > bound) return std::nullopt;
    for (std::size_t j = 0; j <= i; ++j) {
      add(L.mul(elems[i], elems[j]));
      add(L.mul(elems[j], elems[i]));
    }
  }
  if (elems.size() > bound) return std::nullopt;
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_subloop(const FiniteLoop& L, const ElemSet& s) {
  if (s.empty() || s[0] != 0) return false;
  for (int x : s)
    for (int y : s)
      if (!contains(s, L.mul(x, y))) return false;
  return true;
}

int associator(const FiniteLoop& L, int x, int y, int z) {
  return L.ldiv(L.mul(x, L.mul(y, z)), L.mul(L.mul(x, y), z));
}

int commutator(const FiniteLoop& L, int x, int y) {
  return L.ldiv(L.mul(y, x), L.mul(x, y));
}

ElemSet nucleus(const FiniteLoop& L) {
  const int n = L.size();
  const int* t = L.table().data();
  ElemSet nuc;
  for (int a = 0; a < n; ++a) {
    const int* rowa = t + a * n;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      const int* rowx = t + x * n;
      const int* rowax = t + rowa[x] * n;  // (a x) _
      for (int y = 0; y < n; ++y)
        if (rowa[rowx[y]] != rowax[y]) {
          ok = false;
          break;
        }
    }
    for (int x = 0; x < n && ok; ++x) {
      const int* rowx = t + x * n;
      const int* rowxa = t + rowx[a] * n;  // (x a) _
      for (int y = 0; y < n; ++y)
        if (rowx[rowa[y]] != rowxa[y]) {
          ok = false;
          break;
        }
    }
    for (int x = 0; x < n && ok; ++x) {
      const int* rowx = t + x * n;
      for (int y = 0; y < n; ++y)
        if (rowx[t[y * n + a]] != t[rowx[y] * n + a]) {
          ok = false;
          break;
        }
    }
    if (ok) nuc.push_back(a);
  }
  return nuc;
}

ElemSet center(const FiniteLoop& L) {
  const int n = L.size();
  ElemSet z;
  for (int a : nucleus(L)) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = L.mul(a, x) == L.mul(x, a);
    if (ok) z.push_back(a);
  }
  return z;
}

ElemSet associator_values(const FiniteLoop& L) {
  const int n = L.size();
  const int* t = L.table().data();
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    const int* rowx = t + x * n;
    for (int y = 0; y < n; ++y) {
      const int* rowy = t + y * n;
      const int* rowxy = t + rowx[y] * n;
      for (int z = 0; z < n; ++z)
        hit[L.ldiv(rowx[rowy[z]], rowxy[z])] = 1;
    }
  }
  ElemSet vals;
  for (int v = 0; v < n; ++v)
    if (hit[v]) vals.push_back(v);
  return vals;
}

ElemSet associator_subloop(const FiniteLoop& L) {
  return generate_subloop(L, associator_values(L));
}

namespace {

// Left-coset partition plus well-definedness of coset multiplication.
// Succeeding is equivalent to normality; used as the cross-check route.
struct CosetStructure {
  std::vector<int> coset_of;
  std::vector<int> rep_of;  // index -> least representative
  std::vector<int> table;   // coset multiplication, m x m
};

std::optional<CosetStructure> try_cosets(const FiniteLoop& L,
                                         const ElemSet& s) {
  const int n = L.size();
  CosetStructure cs;
  cs.coset_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (cs.coset_of[x] != -1) continue;
    const int id = static_cast<int>(cs.rep_of.size());
    for (int e : s) {
      int v = L.mul(x, e);
      if (cs.coset_of[v] != -1) return std::nullopt;  // cosets overlap
      cs.coset_of[v] = id;
    }
    if (cs.coset_of[x] != id) return std::nullopt;  // x not in xS: no identity
    cs.rep_of.push_back(x);
  }
  const int m = static_cast<int>(cs.rep_of.size());
  cs.table.assign(static_cast<std::size_t>(m) * m, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int& cell = cs.table[cs.coset_of[x] * m + cs.coset_of[y]];
      int v = cs.coset_of[L.mul(x, y)];
      if (cell == -1)
        cell = v;
      else if (cell != v)
        return std::nullopt;  // product depends on representatives
    }
  return cs;
}

bool normal_by_inner_maps(const FiniteLoop& L, const ElemSet& s,
                          const std::vector<char>& in) {
  const int n = L.size();
  const int* t = L.table().data();
  for (int e : s) {
    const int* rowe = t + e * n;
    for (int x = 0; x < n; ++x)
      if (!in[L.ldiv(x, rowe[x])]) return false;  // T_x
    for (int x = 0; x < n; ++x) {
      const int ex = rowe[x];
      const int* rowex = t + ex * n;
      const int* rowx = t + x * n;
      for (int y = 0; y < n; ++y)
        if (!in[L.rdiv(rowex[y], rowx[y])]) return false;  // R(x,y)
    }
    for (int x = 0; x < n; ++x) {
      const int xe = t[x * n + e];
      for (int y = 0; y < n; ++y) {
        const int* rowy = t + y * n;
        if (!in[L.ldiv(rowy[x], rowy[xe])]) return false;  // L(x,y)
      }
    }
  }
  return true;
}

}  // namespace

bool is_normal(const FiniteLoop& L, const ElemSet& s) {
  if (!is_subloop(L, s)) throw InputError("is_normal needs a subloop");
  std::vector<char> in(L.size(), 0);
  for (int e : s) in[e] = 1;
  const bool by_maps = normal_by_inner_maps(L, s, in);
  const bool by_cosets = try_cosets(L, s).has_value();
  if (by_maps != by_cosets)
    throw CheckError(
        "inner-mapping closure and coset well-definedness disagree on "
        "normality");
  return by_maps;
}

ElemSet normal_closure(const FiniteLoop& L, const std::vector<int>& gens) {
  const int n = L.size();
  const int* t = L.table().data();
  ElemSet s = generate_subloop(L, gens);
  std::vector<char> in(n, 0);
  for (int e : s) in[e] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> extra;
    for (int e : s) {
      const int* rowe = t + e * n;
      for (int x = 0; x < n; ++x) {
        int v = L.ldiv(x, rowe[x]);
        if (!in[v]) {
          in[v] = 1;
          extra.push_back(v);
        }
      }
      for (int x = 0; x < n; ++x) {
        const int ex = rowe[x];
        const int* rowex = t + ex * n;
        const int* rowx = t + x * n;
        for (int y = 0; y < n; ++y) {
          int v = L.rdiv(rowex[y], rowx[y]);
          if (!in[v]) {
            in[v] = 1;
            extra.push_back(v);
          }
        }
      }
      for (int x = 0; x < n; ++x) {
        const int xe = t[x * n + e];
        for (int y = 0; y < n; ++y) {
          const int* rowy = t + y * n;
          int v = L.ldiv(rowy[x], rowy[xe]);
          if (!in[v]) {
            in[v] = 1;
            extra.push_back(v);
          }
        }
      }
    }
    if (!extra.empty()) {
      grew = true;
      std::vector<int> gens2(s.begin(), s.end());
      gens2.insert(gens2.end(), extra.begin(), extra.end());
      s = generate_subloop(L, gens2);
      std::fill(in.begin(), in.end(), 0);
      for (int e : s) in[e] = 1;
    }
  }
  return s;
}

Quotient quotient(const FiniteLoop& L, const ElemSet& s) {
  if (!is_normal(L, s))
    throw InputError("quotient requires a normal subloop");
  auto cs = try_cosets(L, s);
  // is_normal already cross-checked the routes, so this cannot miss.
  if (!cs) throw CheckError("coset structure vanished after normality check");
  const int m = static_cast<int>(cs->rep_of.size());
  std::string qname = L.name().empty() ? "Q" : L.name();
  Quotient q{FiniteLoop(m, std::move(cs->table), qname + "/|" +
                                                     std::to_string(s.size()) +
                                                     "|"),
             std::move(cs->coset_of), std::move(cs->rep_of)};
  return q;
}

FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b) {
  const int na = a.size(), nb = b.size();
  const int n = na * nb;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int x2 = 0; x2 < nb; ++x2)
      for (int y1 = 0; y1 < na; ++y1)
        for (int y2 = 0; y2 < nb; ++y2)
          t[(x1 * nb + x2) * n + (y1 * nb + y2)] =
              a.mul(x1, y1) * nb + b.mul(x2, y2);
  return FiniteLoop(n, std::move(t), a.name() + "x" + b.name());
}

SubloopView subloop_as_loop(const FiniteLoop& L, const ElemSet& s) {
  if (!is_subloop(L, s)) throw InputError("element set is not a subloop");
  const int k = static_cast<int>(s.size());
  std::vector<int> local(L.size(), -1);
  for (int i = 0; i < k; ++i) local[s[i]] = i;
  std::vector<int> t(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i * k + j] = local[L.mul(s[i], s[j])];
  std::string nm = L.name().empty() ? "Q" : L.name();
  return SubloopView{
      FiniteLoop(k, std::move(t), nm + "[" + std::to_string(k) + "]"),
      ElemSet(s)};
}

namespace {

struct ElemInvariant {
  int order;      // -1 when powers do not associate
  int commutant;  // |{y : xy = yx}|
  char nuclear;
  char central;
  auto tie() const { return std::tie(order, commutant, nuclear, central); }
  bool operator==(const ElemInvariant& o) const { return tie() == o.tie(); }
  bool operator<(const ElemInvariant& o) const { return tie() < o.tie(); }
};

std::vector<ElemInvariant> element_invariants(const FiniteLoop& L) {
  const int n = L.size();
  ElemSet nuc = nucleus(L);
  ElemSet cen = center(L);
  std::vector<ElemInvariant> inv(n);
  for (int x = 0; x < n; ++x) {
    auto o = element_order(L, x);
    int com = 0;
    for (int y = 0; y < n; ++y)
      if (L.mul(x, y) == L.mul(y, x)) ++com;
    inv[x] = ElemInvariant{o ? *o : -1, com, contains(nuc, x) ? char(1) : char(0),
                           contains(cen, x) ? char(1) : char(0)};
  }
  return inv;
}

// Backtracking search for multiplicative bijections a -> b, extending
// generator images by product closure.  Candidates must match on cheap
// per-element invariants.  on_found returns true to stop the search.
struct IsoSearch {
  const FiniteLoop& a;
  const FiniteLoop& b;
  std::vector<ElemInvariant> inva, invb;
  std::vector<int> gens;
  std::vector<int> img, pre, mapped;

  IsoSearch(const FiniteLoop& a_, const FiniteLoop& b_) : a(a_), b(b_) {}

  bool invariants_match() {
    inva = element_invariants(a);
    invb = element_invariants(b);
    auto sa = inva;
    auto sb = invb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  void pick_generators() {
    const int n = a.size();
    ElemSet cur{0};
    std::vector<int> g;
    while (static_cast<int>(cur.size()) < n) {
      int next = -1;
      for (int x = 0; x < n; ++x)
        if (!contains(cur, x)) {
          next = x;
          break;
        }
      g.push_back(next);
      cur = generate_subloop(a, g);
    }
    gens = std::move(g);
  }

  bool push(int p, int q) {
    if (img[p] != -1) return img[p] == q;
    if (pre[q] != -1) return false;
    img[p] = q;
    pre[q] = p;
    mapped.push_back(p);
    return true;
  }

  void rollback(std::size_t mark) {
    while (mapped.size() > mark) {
      int x = mapped.back();
      mapped.pop_back();
      pre[img[x]] = -1;
      img[x] = -1;
    }
  }

  bool assign(int x, int y) {
    const std::size_t mark = mapped.size();
    if (inva[x] == invb[y] && push(x, y)) {
      for (std::size_t i = mark; i < mapped.size(); ++i) {
        int u = mapped[i];
        for (std::size_t j = 0; j < mapped.size(); ++j) {
          int v = mapped[j];
          if (!push(a.mul(u, v), b.mul(img[u], img[v])) ||
              !push(a.mul(v, u), b.mul(img[v], img[u]))) {
            rollback(mark);
            return false;
          }
        }
      }
      return true;
    }
    rollback(mark);
    return false;
  }

  template <typename Found>
  bool search(std::size_t gi, Found&& on_found) {
    if (gi == gens.size()) return on_found(img);
    int g = gens[gi];
    if (img[g] != -1) return search(gi + 1, on_found);
    const int n = b.size();
    for (int y = 0; y < n; ++y) {
      if (pre[y] != -1 || !(invb[y] == inva[g])) continue;
      const std::size_t mark = mapped.size();
      if (assign(g, y)) {
        if (search(gi + 1, on_found)) return true;
      }
      rollback(mark);
    }
    return false;
  }

  template <typename Found>
  void run(Found&& on_found) {
    const int n = a.size();
    img.assign(n, -1);
    pre.assign(n, -1);
    mapped.clear();
    pick_generators();
    if (!assign(0, 0)) return;
    search(0, on_found);
  }
};

}  // namespace

bool is_isomorphism(const FiniteLoop& a, const FiniteLoop& b,
                    const std::vector<int>& f) {
  const int n = a.size();
  if (b.size() != n || static_cast<int>(f.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int x : f) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
  return true;
}

std::string fingerprint(const FiniteLoop& L) {
  std::ostringstream os;
  os << "n" << L.size();
  auto r = check_identities(L);
  os << ":f" << r.extra1 << r.extra2 << r.extra3 << r.moufang << r.conj_closed
     << r.flexible << r.associative << r.commutative << r.boolean_group
     << r.power_associative;
  os << ":N" << nucleus(L).size() << ":Z" << center(L).size() << ":A"
     << associator_subloop(L).size();
  auto inv = element_invariants(L);
  std::sort(inv.begin(), inv.end());
  os << ":e";
  for (std::size_t i = 0; i < inv.size();) {
    std::size_t j = i;
    while (j < inv.size() && inv[j] == inv[i]) ++j;
    os << "(" << inv[i].order << "," << inv[i].commutant << ","
       << int(inv[i].nuclear) << "," << int(inv[i].central) << ")x" << (j - i);
    i = j;
  }
  return os.str();
}

std::optional<std::vector<int>> find_isomorphism(const FiniteLoop& a,
                                                 const FiniteLoop& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s(a, b);
  if (!s.invariants_match()) return std::nullopt;
  std::optional<std::vector<int>> found;
  s.run([&](const std::vector<int>& f) {
    found = f;
    return true;
  });
  if (found && !is_isomorphism(a, b, *found))
    throw CheckError("isomorphism search returned a non-isomorphism");
  return found;
}

std::vector<Perm> automorphism_group(const FiniteLoop& L) {
  if (L.size() > 64)
    throw ResourceError(
        "automorphism enumeration is limited to loops of order <= 64");
  IsoSearch s(L, L);
  if (!s.invariants_match())
    throw CheckError("a loop failed to match its own invariants");
  std::vector<Perm> auts;
  s.run([&](const std::vector<int>& f) {
    auts.push_back(f);
    return false;  // keep enumerating
  });
  for (const auto& f : auts)
    if (!is_isomorphism(L, L, f))
      throw CheckError("automorphism search returned a non-automorphism");
  return auts;
}

}  // namespace extraloop

#include "extraloop/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "extraloop/common.hpp"
#include "extraloop/extension.hpp"
#include "extraloop/fixtures.hpp"

namespace extraloop {
namespace {

template <class F>
void parallel_for(int n, int jobs, F&& fn) {
  int t = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  if (t > n) t = n;
  if (t <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  for (std::thread& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// ---- order-16 enumeration ---------------------------------------------
//
// Candidates are central extensions of Z_2 by Z_2^3, i.e. cocycles
// psi: Z_2^3 x Z_2^3 -> Z_2 with psi(0,.) = psi(.,0) = 0.  The 49 cells
// with both arguments nonzero are packed into a uint64_t bit mask.

constexpr int kCells = 49;

int cell_bit(int a, int c) { return (a - 1) * 7 + (c - 1); }

// The associativity defect of the extension built from psi is
//   d(a,b,c) = psi(a,b) + psi(a^b,c) + psi(b,c) + psi(a,b^c),
// linear in psi over GF(2).  Returns a basis of {psi : d = 0}.
std::vector<std::uint64_t> zero_defect_kernel() {
  std::vector<std::uint64_t> rows;
  for (int a = 1; a < 8; ++a)
    for (int b = 1; b < 8; ++b)
      for (int c = 1; c < 8; ++c) {
        std::uint64_t row = 0;
        auto put = [&row](int x, int y) {
          if (x != 0 && y != 0) row ^= std::uint64_t{1} << cell_bit(x, y);
        };
        put(a, b);
        put(a ^ b, c);
        put(b, c);
        put(a, b ^ c);
        if (row) rows.push_back(row);
      }

  // Gaussian elimination to reduced row echelon form.
  std::vector<std::uint64_t> rref;
  std::vector<int> pivot_col;
  for (std::uint64_t row : rows) {
    for (std::size_t i = 0; i < rref.size(); ++i)
      if (row >> pivot_col[i] & 1) row ^= rref[i];
    if (!row) continue;
    int pc = 0;
    while (!(row >> pc & 1)) ++pc;
    for (std::size_t i = 0; i < rref.size(); ++i)
      if (rref[i] >> pc & 1) rref[i] ^= row;
    rref.push_back(row);
    pivot_col.push_back(pc);
  }

  std::vector<bool> is_pivot(kCells, false);
  for (int pc : pivot_col) is_pivot[pc] = true;
  std::vector<std::uint64_t> kernel;
  for (int f = 0; f < kCells; ++f) {
    if (is_pivot[f]) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t i = 0; i < rref.size(); ++i)
      if (rref[i] >> f & 1) v ^= std::uint64_t{1} << pivot_col[i];
    kernel.push_back(v);
  }
  return kernel;
}

CocycleTable mask_to_psi(std::uint64_t m) {
  CocycleTable psi = CocycleTable::zero(8);
  for (int a = 1; a < 8; ++a)
    for (int c = 1; c < 8; ++c) psi.at(a, c) = m >> cell_bit(a, c) & 1;
  return psi;
}

// Exactly one nonzero symmetric alternating trilinear form exists on
// Z_2^3.  A symmetric form is an assignment to the 10 index multisets;
// it is alternating iff every multiset with a repeated index gets 0.
void assert_unique_nonzero_form() {
  std::vector<std::array<int, 3>> multisets;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = j; k < 3; ++k) multisets.push_back({i, j, k});
  int nonzero_alternating = 0;
  for (std::uint32_t v = 0; v < (1u << multisets.size()); ++v) {
    bool alternating = true, nonzero = false;
    for (std::size_t t = 0; t < multisets.size(); ++t) {
      if (!(v >> t & 1)) continue;
      nonzero = true;
      if (multisets[t][0] == multisets[t][1] ||
          multisets[t][1] == multisets[t][2])
        alternating = false;
    }
    if (alternating && nonzero) ++nonzero_alternating;
  }
  if (nonzero_alternating != 1)
    throw CheckError(
        "census_order16: expected exactly one nonzero symmetric "
        "alternating trilinear form on Z_2^3");
}

int count_isomorphic(const std::vector<IsoClass>& classes,
                     const FiniteLoop& target) {
  int hits = 0;
  for (const IsoClass& c : classes)
    if (find_isomorphism(c.representative, target)) ++hits;
  return hits;
}

}  // namespace

std::vector<IsoClass> classify_loops(const std::vector<FiniteLoop>& family,
                                     int jobs) {
  const int n = static_cast<int>(family.size());
  std::vector<std::string> fps(n);
  parallel_for(n, jobs, [&](int i) { fps[i] = fingerprint(family[i]); });

  std::map<std::string, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) buckets[fps[i]].push_back(i);
  std::vector<const std::pair<const std::string, std::vector<int>>*> work;
  work.reserve(buckets.size());
  for (const auto& kv : buckets) work.push_back(&kv);

  struct RawClass {
    const std::string* fp;
    std::vector<int> members;
  };
  std::vector<RawClass> raw;
  std::mutex raw_mu;
  parallel_for(static_cast<int>(work.size()), jobs, [&](int bi) {
    const std::vector<int>& bucket = work[bi]->second;
    std::vector<std::vector<int>> groups;
    for (int idx : bucket) {
      bool placed = false;
      for (std::vector<int>& g : groups)
        if (find_isomorphism(family[idx], family[g.front()])) {
          g.push_back(idx);
          placed = true;
          break;
        }
      if (!placed) groups.push_back({idx});
    }
    std::lock_guard<std::mutex> lock(raw_mu);
    for (std::vector<int>& g : groups)
      raw.push_back({&work[bi]->first, std::move(g)});
  });

  std::vector<IsoClass> out;
  out.reserve(raw.size());
  for (const RawClass& c : raw) {
    const FiniteLoop* best = &family[c.members.front()];
    for (int idx : c.members)
      if (family[idx].table() < best->table()) best = &family[idx];
    out.push_back(
        {*best, *c.fp, static_cast<int>(c.members.size())});
  }
  std::sort(out.begin(), out.end(), [](const IsoClass& x, const IsoClass& y) {
    if (x.fingerprint != y.fingerprint) return x.fingerprint < y.fingerprint;
    return x.representative.table() < y.representative.table();
  });
  return out;
}

Census16 census_order16(int jobs) {
  assert_unique_nonzero_form();

  const BooleanGroupSpec b3{3};
  const CoefficientGroup g = CoefficientGroup::boolean_rank(1);
  ActionSpec tau;
  tau.tau.assign(3, gaut_identity(g));
  AssociatorSeed seed = AssociatorSeed::zero(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (i != j && j != k && i != k) seed.at(i, j, k) = 1;
  const CocycleTable psi0 = build_psi(b3, g, tau, seed);
  std::uint64_t base_mask = 0;
  for (int a = 1; a < 8; ++a)
    for (int c = 1; c < 8; ++c)
      if (psi0.at(a, c)) base_mask |= std::uint64_t{1} << cell_bit(a, c);

  const std::vector<std::uint64_t> kernel = zero_defect_kernel();
  if (kernel.size() != 10)
    throw CheckError(
        "census_order16: zero-defect cocycle space has unexpected "
        "dimension " +
        std::to_string(kernel.size()));

  Census16 result;
  result.cocycle_kernel_dim = static_cast<int>(kernel.size());
  for (int defect = 0; defect < 2; ++defect) {
    std::vector<FiniteLoop> family;
    family.reserve(std::size_t{1} << kernel.size());
    for (std::uint32_t pick = 0; pick < (1u << kernel.size()); ++pick) {
      std::uint64_t m = defect ? base_mask : 0;
      for (std::size_t j = 0; j < kernel.size(); ++j)
        if (pick >> j & 1) m ^= kernel[j];
      family.push_back(
          extension_loop(b3, g, tau, mask_to_psi(m), "census16"));
    }
    result.candidates += static_cast<int>(family.size());
    std::vector<IsoClass> classes = classify_loops(family, jobs);
    for (const IsoClass& c : classes) {
      const IdentityReport r = check_identities(c.representative);
      if (defect == 0) {
        if (!r.associative)
          throw CheckError(
              "census_order16: zero-defect extension is not a group");
      } else {
        if (r.associative)
          throw CheckError(
              "census_order16: nonzero-defect extension is associative");
        if (!r.extra())
          throw CheckError(
              "census_order16: nonassociative census class is not extra");
      }
    }
    (defect ? result.nonassociative : result.associative) =
        std::move(classes);
  }

  if (result.nonassociative.size() != 5)
    throw CheckError("census_order16: expected 5 nonassociative classes, got " +
                     std::to_string(result.nonassociative.size()));
  if (count_isomorphic(result.nonassociative, cayley_loop()) != 1)
    throw CheckError(
        "census_order16: expected exactly one class isomorphic to the "
        "Cayley loop");
  if (count_isomorphic(result.nonassociative, canonical16()) != 1)
    throw CheckError(
        "census_order16: expected exactly one class isomorphic to the "
        "commuting-involution-generator loop");
  return result;
}

std::vector<ElemSet> character_kernels(const FiniteLoop& b) {
  require_extra(b, "character_kernels");
  std::vector<int> gens;
  for (int x = 0; x < b.size(); ++x) gens.push_back(b.mul(x, x));
  for (int a : associator_values(b)) gens.push_back(a);
  const ElemSet s = normal_closure(b, gens);
  const Quotient q = quotient(b, s);
  if (!check_identities(q.loop).boolean_group)
    throw CheckError(
        "character_kernels: quotient by squares and associators is not "
        "a boolean group");

  // Greedy basis of the boolean quotient: scanning elements in index
  // order, each element outside the current span doubles it, and the
  // position of an element in the span enumeration is its coordinate
  // mask over the basis.
  const int qn = q.loop.size();
  std::vector<int> elem_at(1, 0);     // coordinate mask -> element
  std::vector<int> coord_of(qn, -1);  // element -> coordinate mask
  coord_of[0] = 0;
  for (int e = 1; e < qn; ++e) {
    if (coord_of[e] >= 0) continue;
    const int k = static_cast<int>(elem_at.size());
    for (int m = 0; m < k; ++m) {
      const int x = q.loop.mul(elem_at[m], e);
      elem_at.push_back(x);
      coord_of[x] = k + m;
    }
  }
  if (static_cast<int>(elem_at.size()) != qn)
    throw CheckError("character_kernels: quotient order is not a power of 2");
  const int rank = [](int sz) {
    int r = 0;
    while ((1 << r) < sz) ++r;
    return r;
  }(qn);

  std::vector<ElemSet> kernels;
  kernels.reserve(std::size_t{1} << rank);
  for (int chi = 0; chi < (1 << rank); ++chi) {
    ElemSet kernel;
    for (int x = 0; x < b.size(); ++x) {
      const int c = coord_of[q.coset_of[x]];
      if ((std::popcount(static_cast<unsigned>(c & chi)) & 1) == 0)
        kernel.push_back(x);
    }
    kernels.push_back(std::move(kernel));
  }
  return kernels;
}

std::vector<char> character_from_kernel(const FiniteLoop& b,
                                        const ElemSet& kernel) {
  std::vector<char> chi(b.size(), 1);
  for (int x : kernel) {
    if (x < 0 || x >= b.size())
      throw InputError("character_from_kernel: kernel element out of range");
    chi[x] = 0;
  }
  if (kernel.size() != static_cast<std::size_t>(b.size()) &&
      kernel.size() * 2 != static_cast<std::size_t>(b.size()))
    throw InputError("character_from_kernel: kernel index exceeds 2");
  if (!kernel.empty() && chi[0] != 0)
    throw InputError("character_from_kernel: kernel misses the identity");
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      if (chi[b.mul(x, y)] != (chi[x] ^ chi[y]))
        throw InputError(
            "character_from_kernel: set is not the kernel of a "
            "homomorphism to {+1,-1}");
  return chi;
}

bool tau_equivalence(const FiniteLoop& b, const ElemSet& ker_tau,
                     const ElemSet& ker_sigma) {
  require_extra(b, "tau_equivalence");
  if (b.size() & (b.size() - 1))
    throw InputError("tau_equivalence: loop order is not a power of 2");
  const std::vector<char> chi_tau = character_from_kernel(b, ker_tau);
  const std::vector<char> chi_sigma = character_from_kernel(b, ker_sigma);

  bool related = false;
  if (ker_tau.size() == ker_sigma.size()) {
    for (const Perm& f : automorphism_group(b)) {
      bool carries = true;
      for (int x : ker_sigma)
        if (!contains(ker_tau, f[x])) {
          carries = false;
          break;
        }
      if (carries) {
        related = true;
        break;
      }
    }
  }

  const FiniteLoop qt = semidirect_by_character(b, 3, chi_tau, "qtau");
  const FiniteLoop qs = semidirect_by_character(b, 3, chi_sigma, "qsigma");
  const bool iso = find_isomorphism(qt, qs).has_value();
  if (iso != related)
    throw CheckError(
        "tau_equivalence: character equivalence disagrees with semidirect "
        "product isomorphism");
  return related;
}

int count_character_orbits(const FiniteLoop& b) {
  const std::vector<ElemSet> kernels = character_kernels(b);
  const std::vector<Perm> auts = automorphism_group(b);
  std::map<ElemSet, int> index_of;
  for (std::size_t i = 0; i < kernels.size(); ++i)
    index_of[kernels[i]] = static_cast<int>(i);

  std::vector<bool> seen(kernels.size(), false);
  int orbits = 0;
  for (std::size_t i = 0; i < kernels.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    std::vector<int> frontier{static_cast<int>(i)};
    seen[i] = true;
    while (!frontier.empty()) {
      const int cur = frontier.back();
      frontier.pop_back();
      for (const Perm& f : auts) {
        ElemSet image;
        image.reserve(kernels[cur].size());
        for (int x : kernels[cur]) image.push_back(f[x]);
        std::sort(image.begin(), image.end());
        const auto it = index_of.find(image);
        if (it == index_of.end())
          throw CheckError(
              "count_character_orbits: automorphism image of a kernel is "
              "not a kernel");
        if (!seen[it->second]) {
          seen[it->second] = true;
          frontier.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

std::vector<IsoClass> census_16p(int p, int jobs, int cap) {
  if (!is_odd_prime(p))
    throw InputError("census_16p: p must be an odd prime");
  if (p > cap)
    throw ResourceError("census_16p: p exceeds the cap of " +
                        std::to_string(cap));

  const Census16 base = census_order16(jobs);
  std::vector<FiniteLoop> family;
  for (const IsoClass& cls : base.nonassociative)
    for (const ElemSet& kernel : character_kernels(cls.representative))
      family.push_back(semidirect_by_character(
          cls.representative, p,
          character_from_kernel(cls.representative, kernel), "c16p"));

  // Every member must have nucleus Z_2 x Z_p and split as B x| G.
  const FiniteLoop z2p = cyclic_group(2 * p);
  parallel_for(static_cast<int>(family.size()), jobs, [&](int i) {
    const FiniteLoop& q = family[i];
    const ElemSet n = nucleus(q);
    if (static_cast<int>(n.size()) != 2 * p)
      throw CheckError("census_16p: member nucleus has order " +
                       std::to_string(n.size()));
    if (!find_isomorphism(subloop_as_loop(q, n).loop, z2p))
      throw CheckError(
          "census_16p: member nucleus is not cyclic of order 2p");
    if (!issemi_decompose(q))
      throw CheckError(
          "census_16p: member does not decompose as a semidirect product");
  });

  std::vector<IsoClass> classes = classify_loops(family, jobs);
  if (classes.size() != 16)
    throw CheckError("census_16p: expected 16 classes at p=" +
                     std::to_string(p) + ", got " +
                     std::to_string(classes.size()));
  return classes;
}

void write_census_files(const std::string& dir, const std::string& stem,
                        const std::vector<IsoClass>& classes) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw InputError("write_census_files: cannot create directory " + dir);
  const std::string manifest_path = dir + "/" + stem + "_manifest.txt";
  std::ofstream manifest(manifest_path);
  if (!manifest)
    throw InputError("write_census_files: cannot write " + manifest_path);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string table_name = stem + "_" + std::to_string(i) + ".tbl";
    manifest << "class " << i << " members=" << classes[i].members
             << " rep=" << table_name << " fp=" << classes[i].fingerprint
             << "\n";
    save_table(dir + "/" + table_name, classes[i].representative,
               {"census class " + std::to_string(i), classes[i].fingerprint});
  }
}

}  // namespace extraloop

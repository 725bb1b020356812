#include "extraloop/fixtures.hpp"

#include <algorithm>
#include <array>

namespace extraloop {

FiniteLoop cyclic_group(int m) {
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[x * m + y] = (x + y) % m;
  return FiniteLoop(m, std::move(t), "Z" + std::to_string(m));
}

FiniteLoop boolean_group(int rank) {
  const int n = 1 << rank;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = x ^ y;
  return FiniteLoop(n, std::move(t), "Z2^" + std::to_string(rank));
}

FiniteLoop symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line order; the product
  // applies the left factor first.
  constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<int> t(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[j][perms[i][x]];
      t[i * 6 + j] = index_of(c);
    }
  return FiniteLoop(6, std::move(t), "S3");
}

FiniteLoop alternating_group_5() {
  // Even permutations of {0..4} in lexicographic one-line order (the
  // identity is lex-first); the product applies the left factor first.
  std::vector<std::array<int, 5>> perms;
  std::array<int, 5> p{0, 1, 2, 3, 4};
  do {
    int inversions = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::array<int, 5>& q) {
    auto it = std::lower_bound(perms.begin(), perms.end(), q);
    return static_cast<int>(it - perms.begin());
  };
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 5> c{};
      for (int x = 0; x < 5; ++x) c[x] = perms[j][perms[i][x]];
      t[i * n + j] = index_of(c);
    }
  return FiniteLoop(n, std::move(t), "A5");
}

FiniteLoop chein_double(const FiniteLoop& g) {
  const int m = g.size();
  const int n = 2 * m;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      t[a * n + b] = g.mul(a, b);
      t[a * n + (m + b)] = m + g.mul(b, a);
      t[(m + a) * n + b] = m + g.mul(a, g.ldiv(b, 0));
      t[(m + a) * n + (m + b)] = g.mul(g.ldiv(b, 0), a);
    }
  return FiniteLoop(n, std::move(t), "M(" + g.name() + ",2)");
}

FiniteLoop cc6_loop() {
  std::vector<int> t{
      0, 1, 2, 3, 4, 5,  //
      1, 2, 0, 4, 5, 3,  //
      2, 0, 1, 5, 3, 4,  //
      3, 5, 4, 1, 0, 2,  //
      4, 3, 5, 2, 1, 0,  //
      5, 4, 3, 0, 2, 1,
  };
  return FiniteLoop(6, std::move(t), "CC6");
}

}  // namespace extraloop

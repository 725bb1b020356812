// Multiplication groups: closure enumeration, inner mapping groups via
// two independent routes, O_p, and the A* kernel on groups.
#include <sstream>

#include "doctest.h"
#include "extraloop/fixtures.hpp"
#include "extraloop/multgroups.hpp"
#include "extraloop/structure.hpp"

using namespace extraloop;

namespace {

// Stabilizer-route Mlt1: close over both translation families, filter.
PermGroup full_mlt(const FiniteLoop& l) {
  std::vector<Perm> gens;
  for (int x = 0; x < l.size(); ++x) {
    gens.push_back(right_translation(l, x));
    gens.push_back(left_translation(l, x));
  }
  return PermGroup::closure(l.size(), std::move(gens));
}

bool is_automorphism(const FiniteLoop& l, const Perm& g) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (g[l.mul(a, b)] != l.mul(g[a], g[b])) return false;
  return true;
}

}  // namespace

TEST_CASE("closure enumerates the regular representation of a group") {
  for (const FiniteLoop& g :
       {symmetric_group_3(), cyclic_group(6), boolean_group(3)}) {
    PermGroup r = rmlt(g);
    CHECK(r.order() == static_cast<std::uint64_t>(g.size()));
    // Each element IS a translation: x -> x*y for a fixed y.
    for (const Perm& e : r.elements())
      CHECK(e == right_translation(g, e[0]));
    CHECK(inner_mapping_group(g, Side::right).order() == 1);
    CHECK(inner_mapping_group(g, Side::left).order() == 1);
  }
}

TEST_CASE("closure is deterministic and indexable") {
  PermGroup r = rmlt(cc6_loop());
  CHECK(r.order() == 18);
  CHECK(r.elements()[0] == perm_identity(6));
  for (int i = 0; i < static_cast<int>(r.order()); ++i) {
    CHECK(r.index_of(r.elements()[i]) == i);
    CHECK(r.mul(i, r.inv(i)) == 0);
  }
  // Rebuilding gives the same element order.
  PermGroup again = rmlt(cc6_loop());
  CHECK(again.elements() == r.elements());
}

TEST_CASE("enumeration cap raises a resource error with a lower bound") {
  CHECK_THROWS_AS(rmlt(chein_double(symmetric_group_3()), 100),
                  ResourceError);
  try {
    rmlt(chein_double(symmetric_group_3()), 100);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("at least") != std::string::npos);
  }
}

TEST_CASE("multiplication groups of the order-6 conjugacy-closed loop") {
  FiniteLoop q = cc6_loop();
  CHECK(rmlt(q).order() == 18);
  CHECK(lmlt(q).order() == 18);
  PermGroup r1 = inner_mapping_group(q, Side::right);
  PermGroup l1 = inner_mapping_group(q, Side::left);
  CHECK(r1.order() == 3);
  CHECK(l1.order() == 3);
  for (const Perm& e : r1.elements()) CHECK(l1.contains(e));
  // Conjugacy closure makes the right inner maps automorphisms, and the
  // two-argument maps commute pairwise.
  for (const Perm& e : r1.elements()) CHECK(is_automorphism(q, e));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) {
          Perm a = right_inner_map(q, x, y);
          Perm b = right_inner_map(q, u, v);
          CHECK(perm_compose(a, b) == perm_compose(b, a));
        }
}

TEST_CASE("multiplication groups of the order-12 Moufang double") {
  FiniteLoop q = chein_double(symmetric_group_3());
  CHECK(rmlt(q).order() == 648);
  CHECK(inner_mapping_group(q, Side::right).order() == 54);
  CHECK(full_mlt(q).order() == 2592);
}

TEST_CASE("middle inner maps generate the full inner mapping group") {
  for (const FiniteLoop& q : {symmetric_group_3(), cc6_loop(),
                              chein_double(symmetric_group_3())}) {
    std::vector<Perm> tg;
    for (int x = 0; x < q.size(); ++x) tg.push_back(middle_inner_map(q, x));
    PermGroup t = PermGroup::closure(q.size(), std::move(tg));
    PermGroup m = full_mlt(q);
    std::uint64_t stab = 0;
    for (const Perm& e : m.elements())
      if (e[0] == 0) {
        ++stab;
        CHECK(t.contains(e));
      }
    CHECK(t.order() == stab);
  }
}

TEST_CASE("o_p strips the p-part generated by coprime-order elements") {
  PermGroup r6 = rmlt(cyclic_group(6));
  CHECK(o_p_subgroup(r6, 2).order() == 3);
  CHECK(o_p_subgroup(r6, 3).order() == 2);
  CHECK(o_p_subgroup(r6, 5).order() == 6);
  CHECK(o_p_subgroup(rmlt(boolean_group(3)), 2).order() == 1);
  // S3's regular representation: coprime-to-3 elements (the involutions)
  // already generate everything.
  CHECK(o_p_subgroup(rmlt(symmetric_group_3()), 3).order() == 6);
  CHECK(o_p_subgroup(rmlt(symmetric_group_3()), 2).order() == 3);
}

TEST_CASE("a_star of an associative extra loop is trivial") {
  for (const FiniteLoop& g : {boolean_group(3), symmetric_group_3()}) {
    AStar s = a_star(g);
    CHECK(s.group.order() == 1);
    CHECK(s.rmlt1.order() == 1);
    CHECK(s.assoc == std::vector<int>{0});
  }
}

TEST_CASE("a_star refuses non-extra input") {
  CHECK_THROWS_AS(a_star(cc6_loop()), InputError);
  CHECK_THROWS_AS(a_star(chein_double(symmetric_group_3())), InputError);
}

TEST_CASE("inner maps cache matches the direct constructions") {
  FiniteLoop q = cc6_loop();
  InnerMaps maps(q);
  REQUIRE(maps.t.size() == 6);
  for (int x = 0; x < 6; ++x) {
    CHECK(maps.t[x] == middle_inner_map(q, x));
    CHECK(maps.t[x][0] == 0);
    for (int y = 0; y < 6; ++y) {
      CHECK(maps.r(x, y) == right_inner_map(q, x, y));
      CHECK(maps.l(x, y) == left_inner_map(q, x, y));
    }
  }
}

TEST_CASE("permutation serialization is one-line image arrays") {
  std::ostringstream os;
  write_perm(os, Perm{2, 0, 1});
  CHECK(os.str() == "2 0 1\n");
  std::ostringstream gs;
  write_permgroup(gs, rmlt(cyclic_group(3)), "rmlt");
  std::string text = gs.str();
  CHECK(text.find("# rmlt\n") == 0);
  CHECK(text.find("degree 3\n") != std::string::npos);
  CHECK(text.find("order 3\n") != std::string::npos);
}

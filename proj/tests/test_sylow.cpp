// Sylow and Hall families, solvability, and the RMlt correspondence,
// exercised on groups where every count has a classical value.
#include <sstream>

#include "doctest.h"
#include "extraloop/fixtures.hpp"
#include "extraloop/structure.hpp"
#include "extraloop/sylow.hpp"

using namespace extraloop;

TEST_CASE("arithmetic helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(!is_prime(1));
  CHECK(!is_prime(15));
  CHECK(p_part(48, 2) == 16);
  CHECK(p_part(48, 3) == 3);
  CHECK(p_part(48, 5) == 1);
  CHECK(pi_part(240, {2, 3}) == 48);
  CHECK(pi_part(240, {5}) == 5);
  CHECK(pi_part(240, {7}) == 1);
}

TEST_CASE("group sylow subgroups of Z4 x S3") {
  FiniteLoop g = direct_product(cyclic_group(4), symmetric_group_3());
  auto s2 = group_sylow_subgroups(g, 2);
  auto s3 = group_sylow_subgroups(g, 3);
  REQUIRE(s2.size() == 3);
  REQUIRE(s3.size() == 1);
  for (const auto& s : s2) {
    CHECK(s.size() == 8);
    CHECK(is_subloop(g, s));
  }
  CHECK(s3[0].size() == 3);
  // Conjugators between Sylow 2-subgroups exist inside O^2.
  CHECK(group_o_p(g, 2).size() == 3);
  CHECK(group_o_p(g, 3).size() == 24);
  for (const auto& a : s2)
    for (const auto& b : s2)
      CHECK(group_sylow_conjugator_in_op(g, a, b, 2).has_value());
}

TEST_CASE("group hall subgroups of Z4 x S3") {
  FiniteLoop g = direct_product(cyclic_group(4), symmetric_group_3());
  auto whole = group_hall_subgroups(g, {2, 3});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].size() == 24);
  auto h2 = group_hall_subgroups(g, {2});
  CHECK(h2.size() == 3);
  CHECK(h2[0].size() == 8);
  auto h3 = group_hall_subgroups(g, {3});
  REQUIRE(h3.size() == 1);
  CHECK(h3[0].size() == 3);
}

TEST_CASE("hall subgroups can be absent in a nonsolvable group") {
  CHECK(group_hall_subgroups(alternating_group_5(), {2, 5}).empty());
}

TEST_CASE("group machinery rejects non-groups and non-primes") {
  CHECK_THROWS_AS(group_sylow_subgroups(cc6_loop(), 2), InputError);
  CHECK_THROWS_AS(group_sylow_subgroups(cyclic_group(6), 4), InputError);
  CHECK_THROWS_AS(group_hall_subgroups(cc6_loop(), {2}), InputError);
}

TEST_CASE("loop-level sylow families on groups") {
  auto fam = sylow_subloops(boolean_group(4), 2);
  REQUIRE(fam.members.size() == 1);
  CHECK(fam.member_order == 16);
  CHECK(fam.members[0].size() == 16);

  FiniteLoop g = direct_product(cyclic_group(4), symmetric_group_3());
  auto f2 = sylow_subloops(g, 2);
  auto f3 = sylow_subloops(g, 3);
  CHECK(f2.members.size() == 3);
  CHECK(f2.member_order == 8);
  CHECK(f2.r == 3);
  CHECK(f2.divides_r);
  CHECK(!f2.divides_r_flagged);
  CHECK(f3.members.size() == 1);
  CHECK(f3.member_order == 3);

  // p coprime to the order: the family is the trivial subloop.
  auto f7 = sylow_subloops(g, 7);
  REQUIRE(f7.members.size() == 1);
  CHECK(f7.members[0] == ElemSet{0});
}

TEST_CASE("sylow families of the alternating group of degree 5") {
  FiniteLoop a5 = alternating_group_5();
  CHECK(sylow_subloops(a5, 2).members.size() == 5);
  CHECK(sylow_subloops(a5, 3).members.size() == 10);
  CHECK(sylow_subloops(a5, 5).members.size() == 6);
  CHECK(enumerate_p_subloops(a5, 2).size() == 21);  // 1 + 15 + 5
  CHECK(enumerate_p_subloops(a5, 5).size() == 7);   // 1 + 6
}

TEST_CASE("sylow requires an extra loop and a prime") {
  CHECK_THROWS_AS(sylow_subloops(cc6_loop(), 2), InputError);
  CHECK_THROWS_AS(sylow_subloops(chein_double(symmetric_group_3()), 2),
                  InputError);
  CHECK_THROWS_AS(sylow_subloops(boolean_group(3), 6), InputError);
}

TEST_CASE("loop-level hall families") {
  FiniteLoop g = direct_product(cyclic_group(4), symmetric_group_3());
  auto whole = hall_subloops(g, {2, 3, 7});  // 7 is ignored
  REQUIRE(whole.members.size() == 1);
  CHECK(whole.member_order == 24);
  CHECK(whole.label == "Hall_{2,3,7}");
  auto h3 = hall_subloops(g, {3});
  REQUIRE(h3.members.size() == 1);
  CHECK(h3.member_order == 3);
  auto h2 = hall_subloops(g, {2});
  CHECK(h2.members.size() == 3);
  CHECK(h2.member_order == 8);
  auto trivial = hall_subloops(g, std::vector<int>{});
  REQUIRE(trivial.members.size() == 1);
  CHECK(trivial.members[0] == ElemSet{0});
}

TEST_CASE("hall precondition: solvable extra loop") {
  CHECK_THROWS_AS(hall_subloops(alternating_group_5(), {2, 5}), InputError);
  CHECK_THROWS_AS(hall_subloops(cc6_loop(), {2}), InputError);
}

TEST_CASE("solvability via the derived series") {
  auto rb = is_solvable(boolean_group(3));
  CHECK(rb.solvable);
  CHECK(rb.series.size() == 2);  // whole, then {0}

  FiniteLoop g = direct_product(cyclic_group(4), symmetric_group_3());
  auto rg = is_solvable(g);
  CHECK(rg.solvable);
  CHECK(rg.series.size() == 3);
  CHECK(rg.series.back() == ElemSet{0});

  // The derived series of the order-6 conjugacy-closed loop descends
  // through its order-3 normal subloop.
  auto rc = is_solvable(cc6_loop());
  CHECK(rc.solvable);
  REQUIRE(rc.series.size() == 3);
  CHECK(rc.series[1].size() == 3);

  CHECK(is_solvable(chein_double(symmetric_group_3())).solvable);

  auto ra = is_solvable(alternating_group_5());
  CHECK(!ra.solvable);
  CHECK(ra.series.size() == 1);  // already perfect
}

TEST_CASE("sylow correspondence with the right multiplication group") {
  FiniteLoop g = direct_product(cyclic_group(4), symmetric_group_3());
  for (int p : {2, 3}) {
    auto rep = sylow_rmlt_correspondence(g, p);
    CHECK(rep.bijective);
    CHECK(rep.loop_count == rep.group_count);
    CHECK(rep.loop_count == sylow_subloops(g, p).members.size());
  }
  auto rep5 = sylow_rmlt_correspondence(alternating_group_5(), 2);
  CHECK(rep5.bijective);
  CHECK(rep5.loop_count == 5);
  CHECK(rep5.group_member_order == 4);
}

TEST_CASE("family report format") {
  auto fam = sylow_subloops(direct_product(cyclic_group(4),
                                           symmetric_group_3()),
                            3);
  std::ostringstream os;
  write_family(os, fam);
  std::string text = os.str();
  CHECK(text.find("# Syl_3\n") == 0);
  CHECK(text.find("count=1\n") != std::string::npos);
  CHECK(text.find("mod_p=1\n") != std::string::npos);
  CHECK(text.find("divides_r=true") != std::string::npos);
}

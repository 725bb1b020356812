// Classification pipelines: the order-16 central-extension census, the
// order-16p semidirect census, character kernels and their equivalence
// under automorphisms, and the census manifest files.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "extraloop/census.hpp"
#include "extraloop/extension.hpp"
#include "extraloop/fixtures.hpp"
#include "extraloop/structure.hpp"

using namespace extraloop;

namespace {

std::vector<int> sorted_members(const std::vector<IsoClass>& classes) {
  std::vector<int> m;
  for (const IsoClass& c : classes) m.push_back(c.members);
  std::sort(m.begin(), m.end());
  return m;
}

int count_order4(const FiniteLoop& l) {
  int k = 0;
  for (int x = 0; x < l.size(); ++x)
    if (element_order(l, x) == 4) ++k;
  return k;
}

int classes_isomorphic_to(const std::vector<IsoClass>& classes,
                          const FiniteLoop& target) {
  int k = 0;
  for (const IsoClass& c : classes)
    if (find_isomorphism(c.representative, target)) ++k;
  return k;
}

FiniteLoop quaternion_group() {
  FiniteLoop c = cayley_loop();
  SubloopView v = subloop_as_loop(c, generate_subloop(c, {1, 2}));
  REQUIRE(v.loop.size() == 8);
  return v.loop;
}

}  // namespace

TEST_CASE("classify_loops groups isomorphic candidates deterministically") {
  CHECK(classify_loops({}, 1).empty());

  std::vector<FiniteLoop> family{cayley_loop(), canonical16(),
                                 boolean_group(4), cayley_loop()};
  std::vector<IsoClass> classes = classify_loops(family, 2);
  REQUIRE(classes.size() == 3);
  int doubled = 0;
  for (const IsoClass& c : classes) {
    if (c.members == 2) {
      ++doubled;
      CHECK(find_isomorphism(c.representative, cayley_loop()).has_value());
    }
    CHECK(c.fingerprint == fingerprint(c.representative));
  }
  CHECK(doubled == 1);
}

TEST_CASE("order 16 census finds five nonassociative and five group "
          "classes") {
  Census16 c = census_order16();
  CHECK(c.candidates == 2048);
  CHECK(c.cocycle_kernel_dim == 10);
  REQUIRE(c.nonassociative.size() == 5);
  REQUIRE(c.associative.size() == 5);

  CHECK(sorted_members(c.nonassociative) ==
        std::vector<int>{16, 112, 112, 336, 448});
  CHECK(sorted_members(c.associative) ==
        std::vector<int>{16, 112, 112, 336, 448});

  for (const IsoClass& cl : c.nonassociative) {
    auto r = check_identities(cl.representative);
    CHECK(r.extra());
    CHECK(!r.associative);
    CHECK(nucleus(cl.representative).size() == 2);
    CHECK(center(cl.representative).size() == 2);
  }
  for (const IsoClass& cl : c.associative)
    CHECK(check_identities(cl.representative).associative);

  // distinct classes are pairwise non-isomorphic
  for (std::size_t i = 0; i < c.nonassociative.size(); ++i)
    for (std::size_t j = i + 1; j < c.nonassociative.size(); ++j)
      CHECK(!find_isomorphism(c.nonassociative[i].representative,
                              c.nonassociative[j].representative));
}

TEST_CASE("order 16 census contains the two landmark loops at opposite "
          "extremes") {
  Census16 c = census_order16();

  // exactly one class is the Cayley loop; it is the unique class where
  // every non-nuclear element has order 4, and its cocycle orbit is the
  // smallest
  int cayley_hits = 0, all_order4 = 0;
  for (const IsoClass& cl : c.nonassociative) {
    if (find_isomorphism(cl.representative, cayley_loop())) {
      ++cayley_hits;
      CHECK(cl.members == 16);
    }
    if (count_order4(cl.representative) == 14) ++all_order4;
  }
  CHECK(cayley_hits == 1);
  CHECK(all_order4 == 1);

  // exactly one class is the loop generated by commuting involutions;
  // it has the fewest order-4 elements any nonassociative class attains
  int k16_hits = 0, minimal_order4 = 0;
  for (const IsoClass& cl : c.nonassociative) {
    if (find_isomorphism(cl.representative, canonical16())) {
      ++k16_hits;
      CHECK(cl.members == 112);
      CHECK(count_order4(cl.representative) == 2);
    }
    if (count_order4(cl.representative) == 2) ++minimal_order4;
    CHECK(count_order4(cl.representative) >= 2);
  }
  CHECK(k16_hits == 1);
  CHECK(minimal_order4 == 1);
}

TEST_CASE("order 16 census group classes are the known order 16 groups "
          "with elementary abelian central quotient") {
  Census16 c = census_order16();
  CHECK(classes_isomorphic_to(c.associative, boolean_group(4)) == 1);
  CHECK(classes_isomorphic_to(
            c.associative,
            direct_product(cyclic_group(4), boolean_group(2))) == 1);
  FiniteLoop d8 = chein_double(cyclic_group(4));
  REQUIRE(check_identities(d8).associative);
  REQUIRE(!check_identities(d8).commutative);
  CHECK(classes_isomorphic_to(c.associative,
                              direct_product(d8, cyclic_group(2))) == 1);
  CHECK(classes_isomorphic_to(
            c.associative,
            direct_product(quaternion_group(), cyclic_group(2))) == 1);
  // the remaining class is the central product: nonabelian with cyclic
  // center of order 4
  int central_product = 0;
  for (const IsoClass& cl : c.associative) {
    const ElemSet z = center(cl.representative);
    if (!check_identities(cl.representative).commutative && z.size() == 4 &&
        find_isomorphism(subloop_as_loop(cl.representative, z).loop,
                         cyclic_group(4)))
      ++central_product;
  }
  CHECK(central_product == 1);
}

TEST_CASE("order 16 census fingerprints separate classes cheaply") {
  Census16 c = census_order16();
  std::vector<IsoClass> all = c.nonassociative;
  all.insert(all.end(), c.associative.begin(), c.associative.end());
  long long total = 0, separated = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const long long pairs =
          1ll * all[i].members * all[j].members;
      total += pairs;
      if (all[i].fingerprint != all[j].fingerprint) separated += pairs;
    }
  CHECK(separated * 10 >= total * 9);
}

TEST_CASE("order 16 census output does not depend on the thread count") {
  Census16 a = census_order16(1);
  Census16 b = census_order16(0);
  REQUIRE(a.nonassociative.size() == b.nonassociative.size());
  for (std::size_t i = 0; i < a.nonassociative.size(); ++i) {
    CHECK(a.nonassociative[i].representative.table() ==
          b.nonassociative[i].representative.table());
    CHECK(a.nonassociative[i].fingerprint == b.nonassociative[i].fingerprint);
    CHECK(a.nonassociative[i].members == b.nonassociative[i].members);
  }
}

TEST_CASE("semidirect census counts sixteen classes independent of the "
          "prime") {
  auto c3 = census_16p(3);
  REQUIRE(c3.size() == 16);
  int total = 0;
  for (const IsoClass& cl : c3) total += cl.members;
  CHECK(total == 40);  // 5 base classes x 8 characters

  // five of the classes are the direct products
  Census16 base = census_order16();
  int direct = 0;
  for (const IsoClass& cl : c3)
    for (const IsoClass& b : base.nonassociative)
      if (find_isomorphism(
              cl.representative,
              direct_product(b.representative, cyclic_group(3))))
        ++direct;
  CHECK(direct == 5);

  for (const IsoClass& cl : c3) {
    CHECK(cl.representative.size() == 48);
    CHECK(check_identities(cl.representative).extra());
    CHECK(!check_identities(cl.representative).associative);
  }

  CHECK(census_16p(5).size() == 16);
  CHECK(census_16p(7).size() == 16);
  CHECK(census_16p(11).size() == 16);
  CHECK(census_16p(13).size() == 16);
}

TEST_CASE("semidirect census output does not depend on the thread count") {
  auto a = census_16p(3, 1);
  auto b = census_16p(3, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].representative.table() == b[i].representative.table());
    CHECK(a[i].members == b[i].members);
  }
}

TEST_CASE("semidirect census validates the prime and honors the cap") {
  CHECK_THROWS_AS(census_16p(2), InputError);
  CHECK_THROWS_AS(census_16p(9), InputError);
  CHECK_THROWS_AS(census_16p(15), InputError);
  CHECK_THROWS_AS(census_16p(-3), InputError);
  CHECK_THROWS_AS(census_16p(17), ResourceError);
  CHECK_THROWS_AS(census_16p(7, 0, 5), ResourceError);
}

TEST_CASE("character kernels enumerate the homomorphisms to the sign "
          "group") {
  FiniteLoop c = cayley_loop();
  auto kernels = character_kernels(c);
  REQUIRE(kernels.size() == 8);
  CHECK(kernels[0].size() == 16);  // trivial character first
  for (std::size_t i = 1; i < kernels.size(); ++i) {
    CHECK(kernels[i].size() == 8);
    CHECK(is_subloop(c, kernels[i]));
    CHECK(is_normal(c, kernels[i]));
    auto chi = character_from_kernel(c, kernels[i]);
    CHECK(chi[0] == 0);
    CHECK(chi[8] == 0);  // squares lie in every kernel
  }
  // kernels are pairwise distinct
  for (std::size_t i = 0; i < kernels.size(); ++i)
    for (std::size_t j = i + 1; j < kernels.size(); ++j)
      CHECK(kernels[i] != kernels[j]);

  CHECK(character_kernels(canonical16()).size() == 8);
  CHECK_THROWS_AS(character_kernels(cc6_loop()), InputError);
}

TEST_CASE("character from kernel validates the homomorphism property") {
  FiniteLoop c = cayley_loop();
  CHECK_THROWS_AS(character_from_kernel(c, ElemSet{0, 1, 2, 3}), InputError);
  CHECK_THROWS_AS(character_from_kernel(c, ElemSet{1, 2, 3, 4, 5, 6, 7, 8}),
                  InputError);
  // an 8-element subset that is not a subloop
  CHECK_THROWS_AS(character_from_kernel(c, ElemSet{0, 1, 2, 4, 5, 6, 7, 8}),
                  InputError);
  CHECK_THROWS_AS(character_from_kernel(c, ElemSet{0, 1, 2, 3, 4, 5, 6, 99}),
                  InputError);
}

TEST_CASE("character equivalence matches semidirect product isomorphism") {
  FiniteLoop c = cayley_loop();
  auto kernels = character_kernels(c);
  CHECK(tau_equivalence(c, kernels[0], kernels[0]));
  CHECK(tau_equivalence(c, kernels[1], kernels[1]));
  CHECK(!tau_equivalence(c, kernels[0], kernels[1]));
  CHECK(!tau_equivalence(c, kernels[1], kernels[0]));
  // the automorphism group is transitive on the nontrivial characters
  for (std::size_t i = 2; i < kernels.size(); ++i)
    CHECK(tau_equivalence(c, kernels[1], kernels[i]));

  CHECK_THROWS_AS(
      tau_equivalence(symmetric_group_3(), ElemSet{0}, ElemSet{0}),
      InputError);
  CHECK_THROWS_AS(tau_equivalence(cc6_loop(), ElemSet{0}, ElemSet{0}),
                  InputError);
}

TEST_CASE("character orbit counting recounts the semidirect census") {
  Census16 base = census_order16();
  std::vector<int> orbit_counts;
  int sum = 0;
  for (const IsoClass& cl : base.nonassociative) {
    const int orbits = count_character_orbits(cl.representative);
    orbit_counts.push_back(orbits);
    sum += orbits;
  }
  std::sort(orbit_counts.begin(), orbit_counts.end());
  CHECK(orbit_counts == std::vector<int>{2, 3, 3, 4, 4});
  CHECK(sum == 16);
  CHECK(sum == static_cast<int>(census_16p(3).size()));

  CHECK(count_character_orbits(cayley_loop()) == 2);
  CHECK(count_character_orbits(canonical16()) == 3);
}

TEST_CASE("census files round-trip through the manifest directory") {
  namespace fs = std::filesystem;
  const std::string dir =
      (fs::temp_directory_path() / "extraloop_census_test").string();
  fs::remove_all(dir);
  Census16 c = census_order16();
  write_census_files(dir, "n16", c.nonassociative);

  std::ifstream manifest(dir + "/n16_manifest.txt");
  REQUIRE(manifest.good());
  int lines = 0;
  std::string line;
  while (std::getline(manifest, line)) {
    CHECK(line.rfind("class ", 0) == 0);
    CHECK(line.find("members=") != std::string::npos);
    CHECK(line.find("rep=n16_") != std::string::npos);
    CHECK(line.find("fp=n16:") != std::string::npos);
    ++lines;
  }
  CHECK(lines == 5);

  for (int i = 0; i < 5; ++i) {
    LoadedLoop back = load_table(dir + "/n16_" + std::to_string(i) + ".tbl");
    CHECK(back.loop.size() == 16);
    CHECK(find_isomorphism(back.loop,
                           c.nonassociative[i].representative)
              .has_value());
  }
  fs::remove_all(dir);

  CHECK_THROWS_AS(write_census_files("/dev/null/x", "n16", c.nonassociative),
                  InputError);
}

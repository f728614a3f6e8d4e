#include "qslab/census.hpp"

#include "qslab/verify.hpp"

#include <doctest.h>

#include <map>
#include <vector>

using namespace qslab;

TEST_CASE("census rows for small n") {
  auto t0 = census(0);
  CHECK(t0.tally == std::map<BigInt, BigInt>{{1, 1}});

  auto t1 = census(1);
  CHECK(t1.tally == std::map<BigInt, BigInt>{{1, 1}});

  auto t3 = census(3);
  CHECK(t3.tally == std::map<BigInt, BigInt>{{0, 4}, {1, 1}, {5, 1}});

  auto t4 = census(4);
  CHECK(t4.tally == std::map<BigInt, BigInt>{{0, 18}, {1, 2}, {2, 2}, {4, 1}, {14, 1}});

  CHECK(t4.at(0) == 18);
  CHECK(t4.at(3) == 0);
  CHECK(t4.total() == 24);
  CHECK(t4.weighted_total() == 24);
}

TEST_CASE("census totals match the factorial for n up to 7") {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto t = census(n);
    CHECK(t.total() == factorial(n));
    CHECK(t.weighted_total() == factorial(n));
    for (const auto& [k, c] : t.tally) CHECK(c > 0);
  }
}

TEST_CASE("census respects its cutoff") {
  CHECK_THROWS_AS(census(3, 2), std::length_error);
  CHECK_THROWS_AS(census(11), std::length_error);
}

TEST_CASE("classification by preimage count") {
  auto one = classify(4, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].str() == "3 1 2 4");
  CHECK(one[1].str() == "3 2 1 4");

  auto two = classify(4, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].str() == "1 3 2 4");
  CHECK(two[1].str() == "2 3 1 4");

  auto zero = classify(3, 0);
  REQUIRE(zero.size() == 4);
  CHECK(zero[0].str() == "1 3 2");
  CHECK(zero[1].str() == "2 3 1");
  CHECK(zero[2].str() == "3 1 2");
  CHECK(zero[3].str() == "3 2 1");

  CHECK(classify(3, 5) == std::vector<Permutation>{Permutation::identity(3)});
  CHECK(classify(4, 3).empty());
  CHECK_THROWS_AS(classify(12, 1), std::length_error);
}

TEST_CASE("profile construction hits the requested run lengths") {
  CHECK(profile_perm({2, 2}, {1}).str() == "2 3 1 4 5");
  CHECK(profile_perm({2, 0}, {1}).str() == "2 3 1");
  CHECK(profile_perm({1}, {}).str() == "1");
  CHECK(profile_perm({1, 1, 2}, {2, 1}).str() == "3 2 1 5 4 6 7");

  auto p = profile_perm({3, 1, 2}, {2, 3});
  auto d = ltr_decomposition(p);
  REQUIRE(d.block_count() == 3);
  CHECK(d.run_len(1) == 3);
  CHECK(d.rest_len(1) == 2);
  CHECK(d.run_len(2) == 1);
  CHECK(d.rest_len(2) == 3);
  CHECK(d.run_len(3) == 2);

  CHECK_THROWS_AS(profile_perm({2, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(profile_perm({2, 0, 2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(profile_perm({2, 2}, {0}), std::invalid_argument);
}

TEST_CASE("canonical run-gap-run witnesses") {
  CHECK(canonical_mpm_perm(2, 1, 2).str() == "2 3 1 4 5");
  CHECK(canonical_mpm_perm(1, 1, 1).str() == "2 1 3");
  auto d = ltr_decomposition(canonical_mpm_perm(3, 2, 4));
  REQUIRE(d.block_count() == 2);
  CHECK(d.run_len(1) == 3);
  CHECK(d.rest_len(1) == 2);
  CHECK(d.run_len(2) == 4);
  CHECK_THROWS_AS(canonical_mpm_perm(0, 1, 1), std::invalid_argument);
}

TEST_CASE("the family that would need three preimages") {
  CHECK(not3_family(0).str() == "2 3 1 4");
  CHECK(not3_family(2).str() == "2 1 4 5 3 6");
  CHECK(not3_family(3).str() == "3 2 1 5 6 4 7");
  CHECK_THROWS_AS(not3_family(1), std::invalid_argument);
}

TEST_CASE("permutation packing round-trips") {
  std::vector<int> v = {3, 1, 4, 2, 16, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  CHECK(detail::decode_perm(detail::encode_perm(v), v.size()) == v);
  std::vector<int> empty;
  CHECK(detail::decode_perm(detail::encode_perm(empty), 0) == empty);
}

TEST_CASE("verification suites are registered and runnable") {
  auto names = suite_names();
  CHECK(names.size() >= 14);
  VerifyOptions o;
  o.max_n = 4;
  for (const auto& name : {"sortable-321", "census-formulas", "equivalence"}) {
    auto rep = verify_suite(name, o);
    CHECK(rep.suite == name);
    CHECK(rep.passed());
    CHECK(rep.cases > 0);
  }
  CHECK_THROWS_AS(verify_suite("bogus", {}), std::invalid_argument);
}

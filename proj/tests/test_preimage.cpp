#include "qslab/preimage.hpp"

#include "qslab/census.hpp"
#include "qslab/queuesort.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

using namespace qslab;

namespace {

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = int(i) + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("321-avoider generation is Catalan-counted, sorted and exact") {
  for (std::size_t n = 0; n <= 8; ++n) {
    auto gen = gen_av321(n);
    CHECK(BigInt(gen.size()) == catalan(n));
    CHECK(std::is_sorted(gen.begin(), gen.end()));
    CHECK(std::adjacent_find(gen.begin(), gen.end()) == gen.end());
    for (const auto& p : gen) CHECK(avoids_321(p));
    std::size_t streamed = 0;
    for_each_av321(n, [&](const Permutation& p) {
      CHECK(p == gen[streamed]);
      ++streamed;
    });
    CHECK(streamed == gen.size());
  }
}

TEST_CASE("words have preimages exactly when they end with their maximum") {
  CHECK(has_preimage(InjectiveWord()));
  CHECK(has_preimage(parse_word("2134")));
  CHECK_FALSE(has_preimage(parse_word("132")));
  for (const auto& p : all_perms(6)) CHECK(has_preimage(p) == (p[5] == 6));
}

TEST_CASE("known preimage sets") {
  auto s = preimages(parse_word("2134"));
  REQUIRE(s.size() == 4);
  CHECK(s.members[0] == parse_word("3214"));
  CHECK(s.members[1] == parse_word("3241"));
  CHECK(s.members[2] == parse_word("3421"));
  CHECK(s.members[3] == parse_word("4213"));

  CHECK(preimages(parse_word("132")).size() == 0);
  CHECK(preimages(parse_word("2 3 1")).size() == 0);

  auto e = preimages(InjectiveWord());
  REQUIRE(e.size() == 1);
  CHECK(e.members[0].empty());

  CHECK(preimages(parse_word("1")).members == std::vector<InjectiveWord>{parse_word("1")});
}

TEST_CASE("preimages of the identity are the 321-avoiders") {
  for (std::size_t n = 0; n <= 8; ++n) {
    auto s = preimages(Permutation::identity(n));
    auto gen = gen_av321(n);
    REQUIRE(s.size() == gen.size());
    for (std::size_t i = 0; i < gen.size(); ++i) CHECK(s.members[i] == gen[i].word());
  }
}

TEST_CASE("recursive enumeration matches the exhaustive oracle") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : all_perms(n)) {
      auto rec = preimages(p);
      auto ora = preimages_oracle(p);
      CHECK(rec.members == ora.members);
    }
  // non-contiguous values too
  auto w = parse_word("2 7 3 9");
  CHECK(preimages(w).members == preimages_oracle(w).members);
}

TEST_CASE("every reported preimage maps back to the target") {
  for (const auto& p : all_perms(6))
    for (const auto& m : preimages(p).members) CHECK(run_moves(m) == p.word());
  for (const auto& m : preimages(parse_word("2 7 3 9")).members) CHECK(run_moves(m) == parse_word("2 7 3 9"));
}

TEST_CASE("preimage sets partition S_n") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    std::map<InjectiveWord, int> seen;
    for (const auto& p : all_perms(n)) {
      auto s = preimages(p);
      total += s.size();
      for (const auto& m : s.members) seen[m] += 1;
    }
    CHECK(BigInt(total) == factorial(n));
    for (const auto& [m, c] : seen) CHECK(c == 1);
    CHECK(BigInt(seen.size()) == factorial(n));
  }
}

TEST_CASE("the two recursion branches are disjoint and cover everything") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& p : all_perms(n)) {
      if (p[n - 1] != int(n) || p.word().is_increasing()) continue;
      auto [ext, ins] = detail::preimage_cases(p.values());
      for (const auto& m : ext) CHECK(ins.count(m) == 0);
      CHECK(ext.size() + ins.size() == preimages(p).size());
      auto d = ltr_decomposition(p);
      if (d.max_runs.back().size() < 2) CHECK(ins.empty());
    }
  CHECK_THROWS_AS(detail::preimage_cases({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(detail::preimage_cases({2, 3, 1}), std::invalid_argument);
}

TEST_CASE("preimage counting is invariant under order isomorphism") {
  auto w = parse_word("5 2 8 11");  // standardizes to 2134
  CHECK(standardize(w).str() == "2 1 3 4");
  CHECK(count_preimages(w) == 4);
  CHECK(count_preimages(standardize(w)) == 4);
  CHECK(preimages(w).size() == 4);
  for (const auto& m : preimages(w).members)
    CHECK(std::is_permutation(m.values().begin(), m.values().end(), w.values().begin()));
}

TEST_CASE("counting methods agree") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : all_perms(n)) {
      BigInt a = count_preimages(p, CountMethod::Auto);
      CHECK(a == count_preimages(p, CountMethod::Recursive));
      CHECK(a == count_preimages(p, CountMethod::Oracle));
    }
}

TEST_CASE("closed formula dispatch") {
  CHECK(count_preimages(Permutation::identity(5), CountMethod::Formula) == catalan(5));
  CHECK(count_preimages(parse_word("2134"), CountMethod::Formula) == 4);
  CHECK(count_preimages(canonical_mpm_perm(2, 1, 2), CountMethod::Formula) == 9);
  // three runs of maxima: no closed form is wired up
  CHECK_THROWS_AS(count_preimages(parse_word("2 3 1 5 4 6"), CountMethod::Formula), std::invalid_argument);
  CHECK(count_preimages(parse_word("2 3 1 5 4 6"), CountMethod::Auto) ==
        count_preimages(parse_word("2 3 1 5 4 6"), CountMethod::Oracle));
}

TEST_CASE("oracle refuses oversized inputs") {
  std::vector<int> v(10);
  for (std::size_t i = 0; i < 10; ++i) v[i] = int(i) + 1;
  CHECK_THROWS_AS(preimages_oracle(InjectiveWord(v)), std::length_error);
  CHECK_THROWS_AS(count_preimages(InjectiveWord(v), CountMethod::Oracle), std::length_error);
  CHECK_NOTHROW(preimages_oracle(InjectiveWord(v), 10));
}

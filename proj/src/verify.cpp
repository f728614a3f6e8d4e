#include "qslab/verify.hpp"

#include "qslab/census.hpp"
#include "qslab/counting.hpp"
#include "qslab/perm.hpp"
#include "qslab/preimage.hpp"
#include "qslab/queuesort.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qslab {

namespace {

template <class T>
std::string str_of(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Ctx {
  VerificationReport rep;
  int max_n;
  int samples;
  std::uint64_t seed;
  std::size_t oracle_cutoff;

  void check(bool ok, const std::string& input, const std::string& expected, const std::string& actual) {
    ++rep.cases;
    if (!ok) rep.failures.push_back({input, expected, actual});
  }
  template <class A, class B>
  void check_eq(const std::string& input, const A& expected, const B& actual) {
    check(expected == actual, input, str_of(expected), str_of(actual));
  }
};

void for_each_perm(std::size_t n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<int> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> dist(0, i - 1);
    std::swap(perm[i - 1], perm[dist(rng)]);
  }
  return perm;
}

std::uint64_t ltr_mask(const std::vector<int>& v) {
  std::uint64_t mask = 0;
  for (std::size_t p : detail::ltr_positions0(v)) mask |= std::uint64_t(1) << p;
  return mask;
}

std::string mask_str(std::uint64_t mask, std::size_t n) {
  std::string out = "{";
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) {
      if (out.size() > 1) out += ',';
      out += std::to_string(i + 1);
    }
  return out + "}";
}

bool has_adjacent_ltr_pair_after(const std::vector<std::size_t>& pos, std::size_t from) {
  for (std::size_t j = 0; j + 1 < pos.size(); ++j)
    if (pos[j] >= from && pos[j + 1] == pos[j] + 1) return true;
  return false;
}

// ---------------------------------------------------------------- suites --

void suite_equivalence(Ctx& c) {
  auto check_one = [&](const std::vector<int>& v) {
    InjectiveWord w(v);
    auto qr = run_queue(w);
    auto mv = run_moves(w);
    bool ok = qr.output == mv && qr.trace.well_formed(w.size()) && qr.trace.replay(w) == qr.output;
    c.check(ok, w.str(), mv.str() + " with a well-formed trace", qr.output.str() + " trace=" + qr.trace.ops);
  };
  for (int n = 0; n <= c.max_n; ++n) for_each_perm(n, check_one);
  std::mt19937_64 rng(c.seed);
  for (int n = c.max_n + 1; n <= 12; ++n)
    for (int s = 0; s < c.samples; ++s) check_one(random_perm(n, rng));
}

void suite_sortable_321(Ctx& c) {
  const Permutation pat({3, 2, 1});
  for (int n = 0; n <= c.max_n; ++n)
    for_each_perm(n, [&](const std::vector<int>& v) {
      Permutation p(v);
      bool s = is_sortable(p);
      bool a = avoids_321(p);
      bool g = !contains_pattern(p, pat);
      c.check(s == a && a == g, p.str(), "one-pass sortable == 321-avoiding == no 321 subsequence",
              "sortable=" + str_of(s) + " scan=" + str_of(a) + " generic=" + str_of(g));
    });
}

bool in_one_preimage_class(const std::vector<int>& v) {
  if (v.back() != static_cast<int>(v.size())) return false;
  auto pos = detail::ltr_positions0(v);
  return !has_adjacent_ltr_pair_after(pos, 0);
}

bool in_two_preimage_class(const std::vector<int>& v) {
  if (v.size() < 2 || v.back() != static_cast<int>(v.size())) return false;
  auto pos = detail::ltr_positions0(v);
  if (pos.size() < 2 || pos[1] != 1) return false;  // first two entries must both be maxima
  return !has_adjacent_ltr_pair_after(pos, 1);
}

void suite_census_formulas(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    auto table = census(n);
    std::string tag = "n=" + std::to_string(n);
    c.check_eq(tag + " tally[0]", count_q0(n), table.at(0));
    c.check_eq(tag + " tally[1]", count_q1(n), table.at(1));
    c.check_eq(tag + " tally[2]", count_q2(n), table.at(2));
    c.check_eq(tag + " total", factorial(n), table.total());
    c.check_eq(tag + " weighted total", factorial(n), table.weighted_total());
    bool no_zero = std::all_of(table.tally.begin(), table.tally.end(), [](const auto& kv) { return kv.second > 0; });
    c.check(no_zero, tag + " zero entries", "none stored", no_zero ? "none stored" : "zero entry present");
    c.check(table.at(catalan(n)) >= 1, tag + " tally[catalan]", ">= 1", table.at(catalan(n)).str());

    auto expect_class = [&](const BigInt& k, bool (*pred)(const std::vector<int>&)) {
      std::vector<Permutation> want;
      for_each_perm(n, [&](const std::vector<int>& v) {
        if (pred(v)) want.push_back(Permutation(v));
      });
      auto got = classify(n, k);
      c.check(want == got, tag + " class k=" + k.str(), std::to_string(want.size()) + " members by shape",
              std::to_string(got.size()) + " members by count");
    };
    expect_class(1, in_one_preimage_class);
    expect_class(2, in_two_preimage_class);
  }
}

void suite_no_three(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    auto table = census(n);
    c.check(!table.tally.contains(3), "n=" + std::to_string(n), "no class of exactly three preimages",
            table.at(3).str() + " permutations with three preimages");
  }
  c.rep.parameters["largest_n_verified"] = std::to_string(c.max_n);
}

void suite_mpm(Ctx& c) {
  for (std::size_t m1 = 1; m1 + 2 <= 12; ++m1)
    for (std::size_t p1 = 1; m1 + p1 + 1 <= 12; ++p1)
      for (std::size_t m2 = 1; m1 + p1 + m2 <= 12; ++m2)
        c.check_eq("full vs collapsed (" + std::to_string(m1) + "," + std::to_string(p1) + "," + std::to_string(m2) + ")",
                   mpm_full(m1, p1, m2), mpm_simple(m1, p1, m2));

  for (std::size_t m1 = 1; m1 + 2 <= 10; ++m1)
    for (std::size_t p1 = 1; m1 + p1 + 1 <= 10; ++p1)
      for (std::size_t m2 = 1; m1 + p1 + m2 <= 10; ++m2) {
        auto w = canonical_mpm_perm(m1, p1, m2);
        c.check_eq("recursive count of " + w.str(), mpm_simple(m1, p1, m2),
                   count_preimages(w, CountMethod::Recursive));
      }

  std::size_t oracle_bound = std::min<std::size_t>(c.max_n, c.oracle_cutoff);
  for (std::size_t m1 = 1; m1 + 2 <= oracle_bound; ++m1)
    for (std::size_t p1 = 1; m1 + p1 + 1 <= oracle_bound; ++p1)
      for (std::size_t m2 = 1; m1 + p1 + m2 <= oracle_bound; ++m2) {
        auto w = canonical_mpm_perm(m1, p1, m2);
        c.check_eq("oracle count of " + w.str(), mpm_simple(m1, p1, m2),
                   BigInt(preimages_oracle(w, c.oracle_cutoff).size()));
      }

  for (std::size_t m1 = 1; m1 <= 7; ++m1)
    for (std::size_t p1 = 1; p1 <= 5; ++p1) {
      std::string tag = "(" + std::to_string(m1) + "," + std::to_string(p1);
      c.check_eq(tag + ",1) closed form", catalan(m1), mpm_simple(m1, p1, 1));
      c.check_eq(tag + ",2) closed form", catalan(m1 + 1) + (p1 + 1) * catalan(m1), mpm_simple(m1, p1, 2));
      BigInt w30 = BigInt(p1 + 1) * (p1 + 4) / 2;
      c.check_eq(tag + ",3) closed form", catalan(m1 + 2) + (p1 + 1) * catalan(m1 + 1) + w30 * catalan(m1),
                 mpm_simple(m1, p1, 3));
    }
}

void suite_g_closed_form(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    std::vector<BigInt> direct(n + 2, 0);
    for_each_av321(n, [&](const Permutation& p) {
      auto pos = detail::ltr_positions0(p.values());
      std::size_t first_non_ltr = n + 1;  // identity convention
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (pos[i] != i) {
          first_non_ltr = i + 1;
          break;
        }
      if (first_non_ltr == static_cast<std::size_t>(n) + 1 && pos.size() != static_cast<std::size_t>(n))
        first_non_ltr = pos.size() + 1;
      ++direct[first_non_ltr];
    });
    for (int i = 2; i <= n + 1; ++i)
      c.check_eq("g(" + std::to_string(n) + "," + std::to_string(i) + ") vs direct count", direct[i],
                 ballot_g(n, i));
  }
  for (int n = 2; n <= 30; ++n) {
    std::string tag = "n=" + std::to_string(n);
    c.check_eq(tag + " g(n,2)", catalan(n - 1), ballot_g(n, 2));
    c.check_eq(tag + " g(n,n)", BigInt(n - 1), ballot_g(n, n));
    c.check_eq(tag + " g(n,n+1)", BigInt(1), ballot_g(n, n + 1));
    for (int i = 3; i <= n - 1; ++i)
      c.check_eq(tag + " two-term recurrence at i=" + std::to_string(i), ballot_g(n - 1, i - 1) + ballot_g(n, i + 1),
                 ballot_g(n, i));
  }
}

void suite_ballot_identities(Ctx& c) {
  for (int n = 1; n <= 30; ++n) {
    std::string tag = "n=" + std::to_string(n);
    for (int i = 1; i <= n + 1; ++i) {
      BigInt row_sum = 0;
      for (int j = 1; j <= std::min(i, n); ++j) row_sum += ballot_b(n, j);
      c.check_eq(tag + " row recurrence i=" + std::to_string(i), row_sum, ballot_b(n + 1, i));
    }
    for (int i = 1; i < n; ++i) {
      BigInt side = ballot_b(n, i) + (i + 1 <= n - 1 ? ballot_b(n - 1, i + 1) : BigInt(0));
      c.check_eq(tag + " two-term identity i=" + std::to_string(i), side, ballot_b(n, i + 1));
    }
    for (int i = 1; i < n; ++i) {
      BigInt col = 0;
      for (int m = i + 1; m <= n; ++m) col += ballot_b(m, i);
      c.check_eq(tag + " column identity i=" + std::to_string(i), col, ballot_b(n, i + 1));
    }
    for (int i = 2; i <= n; ++i)
      c.check_eq(tag + " binomial rewrite i=" + std::to_string(i), ballot_b(n, i), ballot_collapse(n, i));
    for (int i = 2; i <= n + 1; ++i)
      c.check_eq(tag + " g mirror i=" + std::to_string(i), ballot_b(n, n + 2 - i), ballot_g(n, i));
  }
  for (std::size_t m1 = 1; m1 <= 10; ++m1)
    for (std::size_t j = 0; j <= 10; ++j)
      c.check_eq("catalan expansion (" + std::to_string(m1) + "," + std::to_string(j) + ")",
                 ballot_b(m1 + j + 1, m1), ballot_to_catalan(m1, j));

  for (int n = 1; n <= c.max_n; ++n) {
    std::vector<BigInt> max_at(n + 1, 0), last_is(n + 1, 0);
    for_each_av321(n, [&](const Permutation& p) {
      for (int i = 0; i < n; ++i)
        if (p[i] == n) ++max_at[i + 1];
      ++last_is[p[n - 1]];
    });
    for (int i = 1; i <= n; ++i) {
      std::string tag = "(" + std::to_string(n) + "," + std::to_string(i) + ")";
      c.check_eq("b" + tag + " vs direct count", max_at[i], ballot_b(n, i));
      c.check_eq("inverse symmetry " + tag, max_at[i], last_is[i]);
    }
  }
}

void suite_k_largest_ltr(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n)
    for (int k = 0; n + k <= c.max_n; ++k) {
      BigInt direct = 0;
      for_each_av321(n + k, [&](const Permutation& p) {
        // all k values above n must sit at maxima positions
        int ltr_large = 0;
        for (std::size_t i : detail::ltr_positions0(p.values()))
          if (p[i] > n) ++ltr_large;
        if (ltr_large == k) direct += 1;
      });
      c.check_eq("(" + std::to_string(n) + "," + std::to_string(k) + ")", direct, count_k_largest_ltr(n, k));
    }
}

void suite_ltr_invariance(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    auto counts = detail::forward_image_counts(n);
    std::map<std::uint64_t, std::pair<std::uint64_t, std::string>> classes;
    for_each_perm(n, [&](const std::vector<int>& v) {
      auto it = counts.find(detail::encode_perm(v));
      std::uint64_t k = it == counts.end() ? 0 : it->second;
      std::uint64_t mask = ltr_mask(v);
      auto [slot, fresh] = classes.try_emplace(mask, k, InjectiveWord(v).str());
      if (!fresh)
        c.check(slot->second.first == k,
                "n=" + std::to_string(n) + " positions " + mask_str(mask, n) + " perm " + InjectiveWord(v).str(),
                std::to_string(slot->second.first) + " preimages (as for " + slot->second.second + ")",
                std::to_string(k) + " preimages");
      else
        ++c.rep.cases;
    });
  }
}

void suite_ltr_monotonicity(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    auto counts = detail::forward_image_counts(n);
    std::map<std::uint64_t, std::uint64_t> class_count;
    for_each_perm(n, [&](const std::vector<int>& v) {
      auto it = counts.find(detail::encode_perm(v));
      class_count.try_emplace(ltr_mask(v), it == counts.end() ? 0 : it->second);
    });
    for (const auto& [a, ca] : class_count)
      for (const auto& [b, cb] : class_count) {
        if (a == b || (a & ~b) != 0) continue;  // keep proper subsets only
        c.check(ca <= cb, "n=" + std::to_string(n) + " " + mask_str(a, n) + " within " + mask_str(b, n),
                "count " + std::to_string(ca) + " <= " + std::to_string(cb),
                std::to_string(ca) + " > " + std::to_string(cb));
      }
  }
}

void suite_foata_q1(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    std::vector<Permutation> image;
    for (const auto& p : classify(n, 1)) image.push_back(foata(p));
    std::sort(image.begin(), image.end());
    std::vector<Permutation> want;
    for_each_perm(n, [&](const std::vector<int>& v) {
      Permutation p(v);
      auto fp = fixed_points(p);
      if (fp.size() == 1 && fp[0] == static_cast<std::size_t>(n)) want.push_back(p);
    });
    c.check(image == want, "n=" + std::to_string(n),
            std::to_string(want.size()) + " permutations whose only fixed point is the last",
            std::to_string(image.size()) + " rewritten one-preimage permutations");
  }
}

void suite_catalan_decomposition(Ctx& c) {
  for (std::size_t m2 = 1; m2 <= static_cast<std::size_t>(c.max_n); ++m2)
    for (std::size_t p1 = 1; p1 <= 5; ++p1) {
      std::string tag = "m2=" + std::to_string(m2) + " p1=" + std::to_string(p1);
      std::vector<BigInt> coeffs;
      try {
        coeffs = catalan_decomposition(m2, p1);
      } catch (const std::exception& e) {
        c.check(false, tag, "solvable integral decomposition", e.what());
        continue;
      }
      for (std::size_t m1 = 1; m1 <= m2 + 3; ++m1) {
        BigInt rhs = 0;
        for (std::size_t t = 0; t < coeffs.size(); ++t) rhs += coeffs[t] * catalan(m1 + t);
        c.check_eq(tag + " reconstruction m1=" + std::to_string(m1), mpm_simple(m1, p1, m2), rhs);
      }
    }

  for (std::size_t m2 = 1; m2 <= static_cast<std::size_t>(c.max_n); ++m2)
    for (std::size_t t = 0; t < m2; ++t) {
      std::string tag = "omega(" + std::to_string(m2) + "," + std::to_string(t) + ")";
      try {
        auto poly = omega_poly(m2, t);
        c.check_eq(tag + " degree", static_cast<int>(m2 - t) - 1, poly.degree());
      } catch (const std::exception& e) {
        c.check(false, tag, "consistent interpolation", e.what());
      }
    }

  auto expect_poly = [&](std::size_t m2, std::size_t t, std::vector<Rational> coeffs) {
    c.check_eq("omega(" + std::to_string(m2) + "," + std::to_string(t) + ")",
               RationalPolynomial(std::move(coeffs)).str(), omega_poly(m2, t).str());
  };
  expect_poly(1, 0, {1});
  expect_poly(2, 0, {1, 1});
  expect_poly(2, 1, {1});
  expect_poly(3, 0, {2, Rational(5, 2), Rational(1, 2)});
  expect_poly(3, 1, {1, 1});
  expect_poly(3, 2, {1});
}

void suite_omega_shift(Ctx& c) {
  for (std::size_t m2 = 1; m2 <= static_cast<std::size_t>(c.max_n); ++m2)
    for (std::size_t t = 0; t < m2; ++t)
      c.check_eq("omega(" + std::to_string(m2) + "," + std::to_string(t) + ") vs omega(" + std::to_string(m2 + 1) +
                     "," + std::to_string(t + 1) + ")",
                 omega_poly(m2, t).str(), omega_poly(m2 + 1, t + 1).str());
}

void suite_not3_family(Ctx& c) {
  c.check_eq("n=0 witness", std::string("2 3 1 4"), not3_family(0).str());
  c.check_eq("n=0 preimage count", BigInt(2), count_preimages(not3_family(0), CountMethod::Recursive));
  for (std::size_t n = 2; n <= static_cast<std::size_t>(c.max_n); ++n)
    c.check_eq("n=" + std::to_string(n) + " witness " + not3_family(n).str(), BigInt(n + 2),
               count_preimages(not3_family(n), CountMethod::Recursive));
  c.check_eq("length-5 exception 13425", BigInt(5),
             count_preimages(parse_word("13425"), CountMethod::Recursive));
  bool rejected = false;
  try {
    not3_family(1);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  c.check(rejected, "n=1", "rejected with the length-5 exception", rejected ? "rejected" : "accepted");
}

void suite_isolated_ltr(Ctx& c) {
  for (int n = 2; n <= c.max_n; ++n) {
    auto counts = detail::forward_image_counts(n);
    auto count_of = [&](const std::vector<int>& v) {
      auto it = counts.find(detail::encode_perm(v));
      return it == counts.end() ? std::uint64_t(0) : it->second;
    };
    for_each_perm(n, [&](const std::vector<int>& v) {
      auto d = ltr_decomposition(InjectiveWord(v));
      std::size_t k = d.block_count();
      for (std::size_t i = 2; i + 1 <= k; ++i) {
        if (d.run_len(i) != 1) continue;
        std::vector<std::size_t> runs, gaps;
        for (std::size_t j = 1; j <= k; ++j)
          if (j != i) runs.push_back(d.run_len(j));
        for (std::size_t j = 1; j < k; ++j) {
          if (j == i - 1)
            gaps.push_back(d.rest_len(i - 1) + 1 + d.rest_len(i));
          else if (j != i)
            gaps.push_back(d.rest_len(j));
        }
        auto rho = profile_perm(runs, gaps);
        c.check_eq("absorb run " + std::to_string(i) + " of " + InjectiveWord(v).str() + " giving " + rho.str(),
                   count_of(v), count_of(rho.values()));
      }
    });
  }
}

struct SuiteDef {
  int default_max_n;
  int default_samples;
  bool exploratory;
  void (*run)(Ctx&);
};

const std::vector<std::pair<std::string, SuiteDef>>& registry() {
  static const std::vector<std::pair<std::string, SuiteDef>> defs = {
      {"equivalence", {8, 2500, false, suite_equivalence}},
      {"sortable-321", {8, 0, false, suite_sortable_321}},
      {"census-formulas", {8, 0, false, suite_census_formulas}},
      {"no-three", {8, 0, false, suite_no_three}},
      {"mpm", {9, 0, false, suite_mpm}},
      {"g-closed-form", {10, 0, false, suite_g_closed_form}},
      {"ballot-identities", {10, 0, false, suite_ballot_identities}},
      {"k-largest-ltr", {10, 0, false, suite_k_largest_ltr}},
      {"ltr-invariance", {7, 0, false, suite_ltr_invariance}},
      {"ltr-monotonicity", {6, 0, false, suite_ltr_monotonicity}},
      {"foata-q1", {7, 0, false, suite_foata_q1}},
      {"catalan-decomposition", {5, 0, false, suite_catalan_decomposition}},
      {"omega-shift", {4, 0, true, suite_omega_shift}},
      {"not3-family", {8, 0, false, suite_not3_family}},
      {"isolated-ltr", {7, 0, false, suite_isolated_ltr}},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, def] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport verify_suite(const std::string& name, const VerifyOptions& opts) {
  const SuiteDef* def = nullptr;
  for (const auto& [n, d] : registry())
    if (n == name) def = &d;
  if (!def) throw std::invalid_argument("unknown suite '" + name + "'");

  Ctx ctx{{}, opts.max_n.value_or(def->default_max_n), opts.samples.value_or(def->default_samples), opts.seed,
          opts.oracle_cutoff.value_or(kDefaultOracleCutoff)};
  ctx.rep.suite = name;
  ctx.rep.exploratory = def->exploratory;
  ctx.rep.parameters["max_n"] = std::to_string(ctx.max_n);
  ctx.rep.parameters["seed"] = std::to_string(ctx.seed);
  if (ctx.samples > 0) ctx.rep.parameters["samples"] = std::to_string(ctx.samples);

  def->run(ctx);

  std::sort(ctx.rep.failures.begin(), ctx.rep.failures.end(),
            [](const VerifyFailure& a, const VerifyFailure& b) { return a.input < b.input; });
  return ctx.rep;
}

}  // namespace qslab

#include "qslab/preimage.hpp"

#include "qslab/queuesort.hpp"

#include <algorithm>
#include <stdexcept>

namespace qslab {

namespace {

struct Av321Gen {
  std::size_t n;
  const std::function<void(const Permutation&)>& visit;
  std::vector<int> prefix;
  std::vector<bool> used;

  void run() {
    prefix.reserve(n);
    used.assign(n + 1, false);
    extend(0, 0);
  }

  int min_unused(int skip) const {
    for (int v = 1; v <= static_cast<int>(n); ++v)
      if (!used[v] && v != skip) return v;
    return 0;
  }

  // best_mid: largest placed value with a larger element before it, 0 if none
  void extend(int max_so_far, int best_mid) {
    if (prefix.size() == n) {
      visit(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= static_cast<int>(n); ++v) {
      if (used[v]) continue;
      // v below the middle closes a descending triple
      if (v < best_mid) continue;
      int new_mid = (v < max_so_far) ? v : best_mid;
      // every unused value appears later; one below the middle is fatal
      int mu = min_unused(v);
      if (mu != 0 && mu < new_mid) continue;
      used[v] = true;
      prefix.push_back(v);
      extend(std::max(max_so_far, v), new_mid);
      prefix.pop_back();
      used[v] = false;
    }
  }
};

}  // namespace

void for_each_av321(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  Av321Gen gen{n, visit, {}, {}};
  gen.run();
}

std::vector<Permutation> gen_av321(std::size_t n) {
  std::vector<Permutation> out;
  for_each_av321(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

bool has_preimage(const InjectiveWord& w) noexcept {
  return w.empty() || w.values().back() == w.max_value();
}

namespace {

std::set<std::vector<int>> preimage_values(const std::vector<int>& w);

// Members reached by appending the tail "last run opener, gap, trailing run
// minus its maximum" to each preimage of the prefix target.
std::set<std::vector<int>> case_extend(const std::vector<int>& w) {
  auto runs = detail::ltr_runs(w);
  const std::size_t split = runs[runs.size() - 2].end;  // end of the second-to-last run
  int maxv = w.back();

  std::vector<int> target(w.begin(), w.begin() + (split - 1));
  target.push_back(maxv);
  const std::vector<int> tail(w.begin() + (split - 1), w.end() - 1);

  std::set<std::vector<int>> out;
  for (const auto& tau : preimage_values(target)) {
    std::vector<int> member = tau;
    member.insert(member.end(), tail.begin(), tail.end());
    out.insert(std::move(member));
  }
  return out;
}

// Members reached by inserting the maximum into a preimage of w minus its
// maximum, anywhere strictly right of that preimage's second-to-last run.
std::set<std::vector<int>> case_insert(const std::vector<int>& w) {
  int maxv = w.back();
  std::vector<int> shorter(w.begin(), w.end() - 1);
  int shorter_max = *std::max_element(shorter.begin(), shorter.end());

  std::set<std::vector<int>> out;
  for (const auto& sp : preimage_values(shorter)) {
    auto runs = detail::ltr_runs(sp);
    // a preimage here is never increasing, so it has a second-to-last run
    // (the trailing run is empty when sp does not end with its maximum)
    std::size_t from = (sp.back() == shorter_max) ? runs[runs.size() - 2].end : runs.back().end;
    for (std::size_t pos = from; pos <= sp.size(); ++pos) {
      std::vector<int> member = sp;
      member.insert(member.begin() + pos, maxv);
      out.insert(std::move(member));
    }
  }
  return out;
}

std::set<std::vector<int>> preimage_values(const std::vector<int>& w) {
  if (detail::is_increasing(w)) {
    std::set<std::vector<int>> out;
    for_each_av321(w.size(), [&](const Permutation& p) {
      std::vector<int> member(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) member[i] = w[p[i] - 1];
      out.insert(std::move(member));
    });
    return out;
  }
  if (w.back() != *std::max_element(w.begin(), w.end())) return {};

  auto out = case_extend(w);
  auto runs = detail::ltr_runs(w);
  if (runs.back().size() >= 2) out.merge(case_insert(w));
  return out;
}

PreimageSet to_set(const InjectiveWord& target, std::set<std::vector<int>> values) {
  PreimageSet ps;
  ps.target = target;
  ps.members.reserve(values.size());
  for (auto it = values.begin(); it != values.end();) {
    auto node = values.extract(it++);
    ps.members.emplace_back(std::move(node.value()));
  }
  return ps;
}

}  // namespace

PreimageSet preimages(const InjectiveWord& w) { return to_set(w, preimage_values(w.values())); }

PreimageSet preimages_oracle(const InjectiveWord& w, std::size_t cutoff) {
  if (w.size() > cutoff)
    throw std::length_error("preimages_oracle: length " + std::to_string(w.size()) + " exceeds cutoff " +
                            std::to_string(cutoff));
  std::set<std::vector<int>> found;
  std::vector<int> cand = w.values();
  std::sort(cand.begin(), cand.end());
  std::vector<int> buf;
  do {
    buf = cand;
    detail::run_moves_inplace(buf);
    if (buf == w.values()) found.insert(cand);
  } while (std::next_permutation(cand.begin(), cand.end()));
  return to_set(w, std::move(found));
}

BigInt count_preimages(const InjectiveWord& w, CountMethod method, std::size_t oracle_cutoff) {
  switch (method) {
    case CountMethod::Oracle:
      return preimages_oracle(w, oracle_cutoff).size();
    case CountMethod::Recursive:
      return preimages(w).size();
    case CountMethod::Formula: {
      if (w.is_increasing()) return catalan(w.size());
      auto d = ltr_decomposition(w);
      if (d.block_count() == 2 && !d.max_runs[1].empty())
        return mpm_simple(d.run_len(1), d.rest_len(1), d.run_len(2));
      throw std::invalid_argument("formula method needs an increasing word or a run-gap-run shape");
    }
    case CountMethod::Auto: {
      if (w.is_increasing()) return catalan(w.size());
      if (!has_preimage(w)) return 0;
      auto d = ltr_decomposition(w);
      if (d.block_count() == 2 && !d.max_runs[1].empty())
        return mpm_simple(d.run_len(1), d.rest_len(1), d.run_len(2));
      return preimages(w).size();
    }
  }
  throw std::logic_error("unreachable");
}

namespace detail {

std::pair<std::set<std::vector<int>>, std::set<std::vector<int>>> preimage_cases(const std::vector<int>& w) {
  if (is_increasing(w) || w.back() != *std::max_element(w.begin(), w.end()))
    throw std::invalid_argument("preimage_cases needs a non-increasing word ending with its maximum");
  auto first = case_extend(w);
  auto runs = ltr_runs(w);
  auto second = runs.back().size() >= 2 ? case_insert(w) : std::set<std::vector<int>>{};
  return {std::move(first), std::move(second)};
}

}  // namespace detail

}  // namespace qslab

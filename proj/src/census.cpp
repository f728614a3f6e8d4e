#include "qslab/census.hpp"

#include "qslab/queuesort.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace qslab {

BigInt CensusTable::at(const BigInt& k) const {
  auto it = tally.find(k);
  return it == tally.end() ? BigInt(0) : it->second;
}

BigInt CensusTable::total() const {
  BigInt s = 0;
  for (const auto& [k, q] : tally) s += q;
  return s;
}

BigInt CensusTable::weighted_total() const {
  BigInt s = 0;
  for (const auto& [k, q] : tally) s += k * q;
  return s;
}

namespace {

void check_census_bounds(std::size_t n, std::size_t cutoff) {
  if (n > cutoff)
    throw std::length_error("census: n = " + std::to_string(n) + " exceeds cutoff " + std::to_string(cutoff));
  if (n > 16) throw std::length_error("census: n exceeds the packed-permutation limit of 16");
}

}  // namespace

CensusTable census(std::size_t n, std::size_t cutoff) {
  check_census_bounds(n, cutoff);
  auto counts = detail::forward_image_counts(n);

  std::map<std::uint64_t, BigInt> hist;
  for (const auto& [code, c] : counts) hist[c] += 1;

  CensusTable t;
  t.n = n;
  BigInt missed = factorial(n) - BigInt(counts.size());
  if (missed > 0) t.tally[0] = missed;
  for (const auto& [k, q] : hist) t.tally[BigInt(k)] = q;
  return t;
}

std::vector<Permutation> classify(std::size_t n, const BigInt& k, std::size_t cutoff) {
  check_census_bounds(n, cutoff);
  auto counts = detail::forward_image_counts(n);

  std::vector<Permutation> out;
  if (k == 0) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      if (!counts.contains(detail::encode_perm(perm))) out.push_back(Permutation(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;  // lexicographic already
  }
  for (const auto& [code, c] : counts)
    if (k == c) out.push_back(Permutation(detail::decode_perm(code, n)));
  std::sort(out.begin(), out.end());
  return out;
}

Permutation profile_perm(const std::vector<std::size_t>& max_lens, const std::vector<std::size_t>& rest_lens) {
  if (max_lens.size() != rest_lens.size() + 1)
    throw std::invalid_argument("profile_perm: need one more run than gaps");
  for (std::size_t i = 0; i + 1 < max_lens.size(); ++i)
    if (max_lens[i] == 0) throw std::invalid_argument("profile_perm: only the trailing run may be empty");
  for (std::size_t len : rest_lens)
    if (len == 0) throw std::invalid_argument("profile_perm: gaps must be nonempty");

  std::vector<int> out;
  int top = 0;
  for (std::size_t i = 0; i < max_lens.size(); ++i) {
    int gap = (i < rest_lens.size()) ? static_cast<int>(rest_lens[i]) : 0;
    for (std::size_t j = 1; j <= max_lens[i]; ++j) out.push_back(top + gap + static_cast<int>(j));
    for (int v = top + gap; v > top; --v) out.push_back(v);
    top += gap + static_cast<int>(max_lens[i]);
  }
  return Permutation(std::move(out));
}

Permutation canonical_mpm_perm(std::size_t m1, std::size_t p1, std::size_t m2) {
  if (m1 < 1 || p1 < 1 || m2 < 1) throw std::invalid_argument("canonical_mpm_perm needs m1, p1, m2 >= 1");
  return profile_perm({m1, m2}, {p1});
}

Permutation not3_family(std::size_t n) {
  if (n == 1)
    throw std::invalid_argument("not3_family: n = 1 is the exception, 13425 has 5 preimages instead of 3");
  if (n == 0) return Permutation({2, 3, 1, 4});
  std::vector<int> v;
  v.reserve(n + 4);
  for (std::size_t x = n; x >= 1; --x) v.push_back(static_cast<int>(x));
  v.push_back(static_cast<int>(n + 2));
  v.push_back(static_cast<int>(n + 3));
  v.push_back(static_cast<int>(n + 1));
  v.push_back(static_cast<int>(n + 4));
  return Permutation(std::move(v));
}

namespace detail {

std::uint64_t encode_perm(const std::vector<int>& v) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    code |= static_cast<std::uint64_t>(v[i] - 1) << (4 * i);
  return code;
}

std::vector<int> decode_perm(std::uint64_t code, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>((code >> (4 * i)) & 0xF) + 1;
  return v;
}

ImageCounts forward_image_counts(std::size_t n) {
  if (n == 0) return {{0, 1}};

  auto scan_block = [n](int first) {
    ImageCounts local;
    std::vector<int> perm;
    perm.reserve(n);
    perm.push_back(first);
    for (int u = 1; u <= static_cast<int>(n); ++u)
      if (u != first) perm.push_back(u);
    std::vector<int> buf;
    do {
      buf = perm;
      run_moves_inplace(buf);
      ++local[encode_perm(buf)];
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return local;
  };

  std::vector<std::future<ImageCounts>> futures;
  for (int first = 2; first <= static_cast<int>(n); ++first)
    futures.push_back(std::async(std::launch::async, scan_block, first));

  ImageCounts merged = scan_block(1);
  for (auto& f : futures)
    for (const auto& [code, c] : f.get()) merged[code] += c;
  return merged;
}

}  // namespace detail

}  // namespace qslab

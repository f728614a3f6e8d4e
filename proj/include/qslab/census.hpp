#pragma once

// Forward-map census over S_n: tally how many permutations share each
// preimage count, classify permutations by that count, and build the
// canonical witness permutations used by the verification suites.

#include "qslab/counting.hpp"
#include "qslab/perm.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace qslab {

inline constexpr std::size_t kDefaultCensusCutoff = 10;

/// Row of the census: tally[k] is the number of permutations of length n
/// with exactly k preimages. Zero-valued entries are never stored.
struct CensusTable {
  std::size_t n = 0;
  std::map<BigInt, BigInt> tally;

  BigInt at(const BigInt& k) const;  // 0 when absent
  BigInt total() const;              // sum of tallies, equals n!
  BigInt weighted_total() const;     // sum of k * tally[k], equals n!
};

/// Applies Queuesort to all of S_n (chunked across threads) and tallies the
/// image multiplicities. Throws std::length_error beyond the cutoff.
CensusTable census(std::size_t n, std::size_t cutoff = kDefaultCensusCutoff);

/// Permutations of length n with exactly k preimages, sorted.
std::vector<Permutation> classify(std::size_t n, const BigInt& k, std::size_t cutoff = kDefaultCensusCutoff);

/// Canonical word with the given run/gap length profile: runs of maxima of
/// lengths max_lens (the last may be 0) separated by gaps of lengths
/// rest_lens, each gap filled with fresh smaller values in decreasing order.
Permutation profile_perm(const std::vector<std::size_t>& max_lens, const std::vector<std::size_t>& rest_lens);

/// <p1+1 .. p1+m1> <1 .. p1> <p1+m1+1 .. p1+m1+m2>: the canonical
/// permutation whose decomposition is a run, one gap, and a final run.
Permutation canonical_mpm_perm(std::size_t m1, std::size_t p1, std::size_t m2);

/// The length-(n+4) permutation <n, n-1, ..., 1, n+2, n+3, n+1, n+4> with
/// exactly n+2 preimages; n = 0 is read as <2 3 1 4>. Rejects n = 1, where
/// the pattern breaks: 13425 has 5 preimages, not 3.
Permutation not3_family(std::size_t n);

namespace detail {

using ImageCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

std::uint64_t encode_perm(const std::vector<int>& v);  // length <= 16
std::vector<int> decode_perm(std::uint64_t code, std::size_t n);

/// Image multiplicities of the Queuesort map on S_n; a permutation's
/// multiplicity as an image is its preimage count.
ImageCounts forward_image_counts(std::size_t n);

}  // namespace detail

}  // namespace qslab

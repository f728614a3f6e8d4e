#pragma once

// Preimages under the Queuesort map: a pruned generator for 321-avoiding
// permutations, the recursive enumeration of all preimages of a word, an
// exhaustive oracle, and count dispatch across the available methods.

#include "qslab/counting.hpp"
#include "qslab/perm.hpp"

#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace qslab {

inline constexpr std::size_t kDefaultOracleCutoff = 9;

/// Visits the 321-avoiding permutations of length n in lexicographic order.
/// Prefix extension with exact pruning: a prefix is extended only while the
/// unused values can still complete it without a descending triple.
void for_each_av321(std::size_t n, const std::function<void(const Permutation&)>& visit);

/// The same stream collected into a vector (Catalan(n) entries).
std::vector<Permutation> gen_av321(std::size_t n);

/// True iff the word ends with its maximum (vacuously true when empty);
/// exactly the words Queuesort can produce.
bool has_preimage(const InjectiveWord& w) noexcept;

struct PreimageSet {
  InjectiveWord target;
  std::vector<InjectiveWord> members;  // distinct, lexicographically sorted

  std::size_t size() const noexcept { return members.size(); }
};

/// All words mapped to w by Queuesort, by structural recursion on the block
/// decomposition of w. An increasing word is reached by exactly the
/// order-isomorphic copies of the 321-avoiding permutations; otherwise
/// members either extend a preimage of the shortened target that forgets
/// everything after the second-to-last run, or arise by inserting the
/// maximum into a preimage of w minus its maximum (only when the trailing
/// run has length at least 2).
PreimageSet preimages(const InjectiveWord& w);

/// Exhaustive scan over all rearrangements of the values of w.
/// Throws std::length_error beyond the cutoff.
PreimageSet preimages_oracle(const InjectiveWord& w, std::size_t cutoff = kDefaultOracleCutoff);

enum class CountMethod { Auto, Recursive, Formula, Oracle };

/// |preimages(w)| as an unbounded integer. Auto picks the closed formula
/// when the shape admits one (increasing word, or a single gap between two
/// runs of maxima) and falls back to the recursive enumeration. Formula on
/// an ineligible shape throws std::invalid_argument.
BigInt count_preimages(const InjectiveWord& w, CountMethod method = CountMethod::Auto,
                       std::size_t oracle_cutoff = kDefaultOracleCutoff);

namespace detail {

/// The two branches of the recursion, kept separate so their disjointness
/// is checkable. Requires a non-increasing word ending with its maximum.
std::pair<std::set<std::vector<int>>, std::set<std::vector<int>>> preimage_cases(const std::vector<int>& w);

}  // namespace detail

}  // namespace qslab

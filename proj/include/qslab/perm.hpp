#pragma once

// Permutations and injective words: parsing, standardization, left-to-right
// maxima and their run decomposition, pattern containment, and the Foata
// one-line-to-cycles rewriting.
//
// Positions in the public API are 1-based; raw vector indexing is 0-based.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qslab {

/// Sequence of pairwise distinct positive integers. Permutations, their
/// slices and subsequences are all carried by this one type, so recursive
/// constructions never need to rescale values.
class InjectiveWord {
 public:
  InjectiveWord() = default;
  /// Throws std::invalid_argument on a duplicate or non-positive value.
  explicit InjectiveWord(std::vector<int> values);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }  // 0-based
  const std::vector<int>& values() const noexcept { return values_; }

  int max_value() const;  // nonempty words only
  bool is_increasing() const noexcept;

  /// Canonical text form: "2 1 5 4 3".
  std::string str() const;

  auto operator<=>(const InjectiveWord&) const = default;

 private:
  std::vector<int> values_;
};

/// Injective word whose value set is exactly {1, ..., n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  explicit Permutation(InjectiveWord word);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  int operator[](std::size_t i) const { return word_[i]; }  // 0-based
  const std::vector<int>& values() const noexcept { return word_.values(); }
  const InjectiveWord& word() const noexcept { return word_; }
  operator const InjectiveWord&() const noexcept { return word_; }

  std::string str() const { return word_.str(); }

  auto operator<=>(const Permutation&) const = default;

 private:
  InjectiveWord word_;
};

/// Block structure of a word: alternating maximal runs of left-to-right
/// maxima (max_runs) and the gaps between them (rests). Every run except
/// possibly the trailing one is nonempty; all gaps are nonempty. Blocks are
/// 0-based half-open index ranges into the source word.
struct Decomposition {
  struct Block {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const noexcept { return end - begin; }
    bool empty() const noexcept { return begin == end; }
  };

  std::vector<Block> max_runs;             // M_1 .. M_k
  std::vector<Block> rests;                // P_1 .. P_{k-1}
  std::vector<int> last_of_run;            // last value of each run; 0 if empty
  std::vector<std::size_t> ltr_positions;  // 1-based, ascending

  std::size_t block_count() const noexcept { return max_runs.size(); }  // k
  std::size_t run_len(std::size_t i) const { return max_runs[i - 1].size(); }
  std::size_t rest_len(std::size_t i) const { return rests[i - 1].size(); }
  /// Last value of the i-th run (1-based); the run must be nonempty.
  int mu(std::size_t i) const;
};

/// Accepts whitespace/comma-separated positive integers, or a single
/// multi-digit token read one digit per element (values 1..9 only).
/// Throws std::invalid_argument on bad tokens or duplicate values.
InjectiveWord parse_word(std::string_view text);

/// Order-isomorphic permutation: each value replaced by its rank.
Permutation standardize(const InjectiveWord& w);

/// 1-based positions i with w_i larger than every element to its left.
std::vector<std::size_t> ltr_maxima(const InjectiveWord& w);

/// Splits a nonempty word into maximal runs of left-to-right maxima and the
/// gaps separating them. Throws std::invalid_argument on the empty word.
Decomposition ltr_decomposition(const InjectiveWord& w);

/// True iff some subsequence of w is order-isomorphic to the pattern.
bool contains_pattern(const InjectiveWord& w, const Permutation& pattern);

/// Single linear scan; equivalent to !contains_pattern(w, 321).
bool avoids_321(const InjectiveWord& w) noexcept;

/// One-line-to-cycle rewriting: a cycle opens at every left-to-right maximum
/// and closes before the next one; returns the permutation those cycles
/// define, in one-line notation. Bijective on S_n.
Permutation foata(const Permutation& p);

/// 1-based positions i with p_i = i.
std::vector<std::size_t> fixed_points(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const InjectiveWord& w);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

namespace detail {

/// 0-based positions of left-to-right maxima.
std::vector<std::size_t> ltr_positions0(const std::vector<int>& v);

/// Maximal runs of contiguous left-to-right maxima, nonempty ones only.
std::vector<Decomposition::Block> ltr_runs(const std::vector<int>& v);

bool is_increasing(const std::vector<int>& v) noexcept;
bool avoids_321(const std::vector<int>& v) noexcept;

}  // namespace detail

}  // namespace qslab

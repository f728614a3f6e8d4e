#pragma once

// The Queuesort map in both formulations: a single pass through a queue with
// bypass, and the equivalent sweep that moves each left-to-right maximum
// rightward until it is blocked by a larger element.

#include "qslab/perm.hpp"

#include <string>

namespace qslab {

/// Record of one queue pass over the letters 'Q' (enqueue), 'B' (bypass
/// directly to output) and 'O' (output the queue front).
struct OpTrace {
  std::string ops;

  std::size_t count(char op) const noexcept;
  /// #Q + #B equals the input length, #O equals #Q, and no prefix outputs
  /// more than it has enqueued.
  bool well_formed(std::size_t input_len) const noexcept;
  /// Re-executes the recorded operations on an input of matching length.
  InjectiveWord replay(const InjectiveWord& input) const;
};

struct QueueRun {
  InjectiveWord output;
  OpTrace trace;
};

/// One pass through a queue with bypass: an element larger than the queue
/// back is enqueued; otherwise every smaller queue front is released first
/// and the element bypasses. The queue is drained at the end.
QueueRun run_queue(const InjectiveWord& w);

/// Moves each left-to-right maximum (rightmost first) to the right until a
/// larger element or the end of the word blocks it. Agrees with run_queue.
InjectiveWord run_moves(const InjectiveWord& w);

/// True iff one pass sorts p, i.e. run_moves(p) is the identity.
bool is_sortable(const Permutation& p);

namespace detail {

void run_moves_inplace(std::vector<int>& v);

}  // namespace detail

}  // namespace qslab

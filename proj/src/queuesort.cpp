#include "qslab/queuesort.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qslab {

std::size_t OpTrace::count(char op) const noexcept {
  return static_cast<std::size_t>(std::count(ops.begin(), ops.end(), op));
}

bool OpTrace::well_formed(std::size_t input_len) const noexcept {
  std::size_t q = 0, b = 0, o = 0;
  for (char c : ops) {
    switch (c) {
      case 'Q': ++q; break;
      case 'B': ++b; break;
      case 'O': ++o; break;
      default: return false;
    }
    if (o > q) return false;
  }
  return q + b == input_len && o == q;
}

InjectiveWord OpTrace::replay(const InjectiveWord& input) const {
  if (!well_formed(input.size())) throw std::invalid_argument("malformed trace for input of this length");
  std::deque<int> queue;
  std::vector<int> out;
  out.reserve(input.size());
  std::size_t next = 0;
  for (char c : ops) {
    if (c == 'Q')
      queue.push_back(input[next++]);
    else if (c == 'B')
      out.push_back(input[next++]);
    else {
      out.push_back(queue.front());
      queue.pop_front();
    }
  }
  return InjectiveWord(std::move(out));
}

QueueRun run_queue(const InjectiveWord& w) {
  std::deque<int> queue;
  std::vector<int> out;
  out.reserve(w.size());
  std::string ops;
  ops.reserve(2 * w.size());
  for (int x : w.values()) {
    if (queue.empty() || queue.back() < x) {
      queue.push_back(x);
      ops += 'Q';
    } else {
      // queue contents are increasing, so the back (> x) stops this loop
      while (queue.front() < x) {
        out.push_back(queue.front());
        queue.pop_front();
        ops += 'O';
      }
      out.push_back(x);
      ops += 'B';
    }
  }
  while (!queue.empty()) {
    out.push_back(queue.front());
    queue.pop_front();
    ops += 'O';
  }
  return {InjectiveWord(std::move(out)), OpTrace{std::move(ops)}};
}

InjectiveWord run_moves(const InjectiveWord& w) {
  std::vector<int> v = w.values();
  detail::run_moves_inplace(v);
  return InjectiveWord(std::move(v));
}

bool is_sortable(const Permutation& p) { return run_moves(p).is_increasing(); }

namespace detail {

void run_moves_inplace(std::vector<int>& v) {
  auto pos = ltr_positions0(v);
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    std::size_t i = *it;
    while (i + 1 < v.size() && v[i + 1] < v[i]) {
      std::swap(v[i], v[i + 1]);
      ++i;
    }
  }
}

}  // namespace detail

}  // namespace qslab

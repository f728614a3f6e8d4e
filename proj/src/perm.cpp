#include "qslab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qslab {

InjectiveWord::InjectiveWord(std::vector<int> values) : values_(std::move(values)) {
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1)
      throw std::invalid_argument("word values must be positive, got " + std::to_string(sorted[i]));
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("duplicate value " + std::to_string(sorted[i]) + " in word");
  }
}

int InjectiveWord::max_value() const {
  if (values_.empty()) throw std::logic_error("max_value of empty word");
  return *std::max_element(values_.begin(), values_.end());
}

bool InjectiveWord::is_increasing() const noexcept { return detail::is_increasing(values_); }

std::string InjectiveWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation::Permutation(InjectiveWord word) : word_(std::move(word)) {
  std::vector<int> sorted = word_.values();
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("permutation values must be exactly 1..n");
}

Permutation::Permutation(std::vector<int> values) : Permutation(InjectiveWord(std::move(values))) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Decomposition::mu(std::size_t i) const {
  int v = last_of_run.at(i - 1);
  if (v == 0) throw std::invalid_argument("mu of an empty run");
  return v;
}

namespace {

bool all_digits(std::string_view t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

int parse_int_token(std::string_view t) {
  if (!all_digits(t)) throw std::invalid_argument("invalid token '" + std::string(t) + "' in word");
  long long v = 0;
  for (char c : t) {
    v = v * 10 + (c - '0');
    if (v > std::numeric_limits<int>::max()) throw std::invalid_argument("value out of range: " + std::string(t));
  }
  return static_cast<int>(v);
}

}  // namespace

InjectiveWord parse_word(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].size() > 1 && all_digits(tokens[0])) {
    // compact digit-string form, one digit per element
    for (char c : tokens[0]) {
      if (c == '0') throw std::invalid_argument("digit-string form cannot contain 0");
      values.push_back(c - '0');
    }
  } else {
    values.reserve(tokens.size());
    for (const auto& t : tokens) values.push_back(parse_int_token(t));
  }
  return InjectiveWord(std::move(values));
}

Permutation standardize(const InjectiveWord& w) {
  const auto& v = w.values();
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<int> out(v.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(out));
}

std::vector<std::size_t> ltr_maxima(const InjectiveWord& w) {
  auto pos = detail::ltr_positions0(w.values());
  for (auto& p : pos) ++p;
  return pos;
}

Decomposition ltr_decomposition(const InjectiveWord& w) {
  if (w.empty()) throw std::invalid_argument("cannot decompose the empty word");
  const auto& v = w.values();
  Decomposition d;
  d.ltr_positions = ltr_maxima(w);

  auto runs = detail::ltr_runs(v);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    d.max_runs.push_back(runs[r]);
    d.last_of_run.push_back(v[runs[r].end - 1]);
    std::size_t gap_end = (r + 1 < runs.size()) ? runs[r + 1].begin : v.size();
    if (gap_end > runs[r].end) d.rests.push_back({runs[r].end, gap_end});
  }
  // a word ending in a gap carries a trailing empty run
  if (runs.back().end != v.size()) {
    d.max_runs.push_back({v.size(), v.size()});
    d.last_of_run.push_back(0);
  }
  return d;
}

bool contains_pattern(const InjectiveWord& w, const Permutation& pattern) {
  const std::size_t k = pattern.size();
  if (k == 0) return true;
  if (k > w.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(k);
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    const std::size_t t = chosen.size();
    if (t == k) return true;
    for (std::size_t i = start; i + (k - t) <= w.size(); ++i) {
      int x = w[i];
      bool ok = true;
      for (std::size_t j = 0; j < t && ok; ++j)
        if ((pattern[j] < pattern[t]) != (chosen[j] < x)) ok = false;
      if (!ok) continue;
      chosen.push_back(x);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

bool avoids_321(const InjectiveWord& w) noexcept { return detail::avoids_321(w.values()); }

Permutation foata(const Permutation& p) {
  const std::size_t n = p.size();
  if (n == 0) return p;
  auto starts = detail::ltr_positions0(p.values());
  std::vector<int> image(n + 1);
  for (std::size_t r = 0; r < starts.size(); ++r) {
    std::size_t a = starts[r];
    std::size_t b = (r + 1 < starts.size()) ? starts[r + 1] : n;
    for (std::size_t i = a; i + 1 < b; ++i) image[p[i]] = p[i + 1];
    image[p[b - 1]] = p[a];
  }
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = image[i + 1];
  return Permutation(std::move(out));
}

std::vector<std::size_t> fixed_points(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == static_cast<int>(i) + 1) out.push_back(i + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const InjectiveWord& w) { return os << w.str(); }
std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

namespace detail {

std::vector<std::size_t> ltr_positions0(const std::vector<int>& v) {
  std::vector<std::size_t> pos;
  int best = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > best) {
      best = v[i];
      pos.push_back(i);
    }
  return pos;
}

std::vector<Decomposition::Block> ltr_runs(const std::vector<int>& v) {
  std::vector<Decomposition::Block> runs;
  auto pos = ltr_positions0(v);
  for (std::size_t j = 0; j < pos.size(); ++j) {
    if (!runs.empty() && runs.back().end == pos[j])
      ++runs.back().end;
    else
      runs.push_back({pos[j], pos[j] + 1});
  }
  return runs;
}

bool is_increasing(const std::vector<int>& v) noexcept {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) return false;
  return true;
}

bool avoids_321(const std::vector<int>& v) noexcept {
  // largest value seen so far that has a larger element before it; any later
  // value below it completes a descending triple
  int max_so_far = 0;
  int best_mid = 0;
  for (int x : v) {
    if (x < best_mid) return false;
    if (x < max_so_far)
      best_mid = x;
    else
      max_so_far = x;
  }
  return true;
}

}  // namespace detail

}  // namespace qslab

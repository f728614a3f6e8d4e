#pragma once

// Named verification suites: each replays one family of enumerative claims
// against brute force or against an independent formulation, at bounds small
// enough for a desk run, and reports every mismatch.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qslab {

inline constexpr std::uint64_t kDefaultSeed = 271828;

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::string> parameters;
  std::size_t cases = 0;
  std::vector<VerifyFailure> failures;
  bool exploratory = false;  // findings are informative, not fatal

  bool passed() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
  std::optional<int> max_n;            // suite-specific default when unset
  std::optional<int> samples;          // per-length random draws past the exhaustive range
  std::uint64_t seed = kDefaultSeed;   // drives all random sampling
  std::optional<std::size_t> oracle_cutoff;
};

/// All suite names, in a stable order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
VerificationReport verify_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace qslab

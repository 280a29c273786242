#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace griess::scenarios {

/// Outcome of one exact check; pass iff computed == expected as strings.
struct CheckResult {
  std::string id;
  bool pass = false;
  std::string computed;
  std::string expected;
  std::string provenance;  // "stated", "derived" or "definition"
  std::string quote;       // short description of the claim being checked
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::string version;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;

  bool all_pass() const;
  std::vector<std::string> failing_ids() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  std::size_t closure_bound = 10000;  // group_closure limit
  std::filesystem::path cache_dir;  // empty: no persistence
  bool timings = false;             // record elapsed_ms; otherwise 0
};

/// Registered suite names, "all" last.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs the checks of one suite. Throws std::invalid_argument for unknown names.
VerificationReport run_suite(const std::string& name, const RunOptions& opts = {});

/// Extracts the 9x9 product table and Gram matrix of the lattice axes and
/// compares them with build_G9 under the identity index map; likewise for the
/// three axes e^{0,0}, e^{0,1}, e^{0,2} against build_3C.
VerificationReport cross_validate(const RunOptions& opts = {});

enum class Format { json, text };

/// Deterministic JSON {suite, version, seed, results:[...]} or a text table.
std::string emit_report(const VerificationReport& r, Format format);

}  // namespace griess::scenarios

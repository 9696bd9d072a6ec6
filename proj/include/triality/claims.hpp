#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace triality {

inline constexpr std::uint64_t kDefaultSeed = 20070815;

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  // shown in reports, ignored by the claim status
  bool informational = false;
};

struct ClaimOutcome {
  std::string actual;
  std::vector<Check> checks;
};

struct Claim {
  std::string id;
  std::string anchor;
  std::string expected;
  std::function<ClaimOutcome(const RunOptions&)> run;
};

enum class ClaimStatus { pass, fail, error, skipped };

std::string to_string(ClaimStatus s);
ClaimStatus parse_claim_status(std::string_view s);

struct ClaimReport {
  std::string id;
  std::string anchor;
  ClaimStatus status = ClaimStatus::skipped;
  std::string expected;
  std::string actual;
  long long runtime_ms = 0;
  std::vector<Check> checks;

  friend bool operator==(const ClaimReport& a, const ClaimReport& b) {
    return a.id == b.id && a.anchor == b.anchor && a.status == b.status && a.expected == b.expected &&
           a.actual == b.actual && a.runtime_ms == b.runtime_ms;
  }
};

const std::vector<Claim>& claim_registry();

// "all" matches everything; otherwise a shell-style glob over ids.
bool claim_matches(std::string_view pattern, std::string_view id);
std::vector<const Claim*> select_claims(std::string_view pattern);

ClaimReport run_claim(const Claim& c, const RunOptions& opts = {});
std::vector<ClaimReport> run_claims(const std::vector<const Claim*>& claims, const RunOptions& opts = {});

// {"claims": [...], "summary": {...}}; sub-checks are not serialized.
std::string reports_to_json(const std::vector<ClaimReport>& reports);
std::vector<ClaimReport> reports_from_json(std::string_view text);
std::string reports_to_markdown(const std::vector<ClaimReport>& reports);

// 1 if any report failed or errored, 0 otherwise.
int exit_code(const std::vector<ClaimReport>& reports);

} // namespace triality

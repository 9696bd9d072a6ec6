#include "triality/claims.hpp"

#include <iostream>

using namespace triality;

int main() {
  const auto reports = run_claims(select_claims("all"));
  int failed = 0, n = 0;
  for (const auto& r : reports) {
    ++n;
    const bool ok = r.status == ClaimStatus::pass;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << n << "] " << r.id << ": " << r.actual << "\n";
    if (!ok)
      for (const auto& c : r.checks)
        if (!c.pass && !c.informational) std::cout << "    failed: " << c.name << (c.detail.empty() ? "" : " -> " + c.detail) << "\n";
  }
  std::cout << n - failed << "/" << n << " criteria pass\n";
  return failed ? 1 : 0;
}

#include <doctest.h>

#include "triality/claims.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace triality;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const char* cli = std::getenv("TRIALITY_CLI");
  REQUIRE(cli != nullptr);
  const std::string cmd = std::string("\"") + cli + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("triality_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

} // namespace

TEST_CASE("list-claims shows every claim") {
  const auto r = run("list-claims");
  CHECK(r.code == 0);
  for (const auto& c : claim_registry()) CHECK(has(r.out, c.id));
}

TEST_CASE("verify with a glob and json output") {
  const auto r = run("verify 'obstruct.*' --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["claims"].size() == 1);
  CHECK(j["claims"][0]["id"] == "obstruct.divisibility");
  CHECK(j["claims"][0]["status"] == "pass");
}

TEST_CASE("verify markdown and failing claims") {
  auto r = run("verify stab.dimensions --format md");
  CHECK(r.code == 0);
  CHECK(has(r.out, "| stab.dimensions | pass |"));
  r = run("verify psu3.z22 --format json");
  CHECK(r.code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("verify no.such.claim").code == 2);
  CHECK(run("verify all --format xml").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("classify") {
  auto r = run("classify " + temp_file("l3.txt", "1 e123\n"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "L3_sp1sp2, orientation-preserving"));
  CHECK(has(r.out, "jacobi: holds"));
  r = run("classify " + temp_file("bad.txt", "3/5 e123 + 4/5 e145\n"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "NotSupersymmetric"));
  CHECK(has(r.out, "jacobi: fails at"));
  r = run("classify --format json " + temp_file("l3j.txt", "1 e123"));
  CHECK(nlohmann::json::parse(r.out)["kind"] == "L3_sp1sp2");
  r = run("classify " + temp_file("parse.txt", "1/2 e12 + e1x"));
  CHECK(r.code == 2);
  CHECK(has(r.out, "offset"));
  r = run("classify " + temp_file("grade.txt", "e12"));
  CHECK(r.code == 2);
  CHECK(run("classify /nonexistent/file").code == 2);
}

TEST_CASE("example reports") {
  auto r = run("example su3_biinvariant --check ricci,classify");
  CHECK(r.code == 0);
  CHECK(has(r.out, "ricci: diag(3/16"));
  CHECK(has(r.out, "classify: L1_psu3, orientation-reversing"));
  r = run("example gibbons_hawking --check ricci,harmonic");
  CHECK(r.code == 0);
  CHECK(has(r.out, "ricci: skipped (requires constant structure)"));
  CHECK(has(r.out, "harmonic: (true, true)"));
  r = run("example psu3_nilmanifold --check torsion");
  CHECK(has(r.out, "in ker d n ker d*: true"));
  CHECK(run("example nowhere").code == 2);
  CHECK(run("example su3_biinvariant --check colour").code == 2);
}

TEST_CASE("obstruct") {
  auto r = run("obstruct p1_squared_M=8640 p2_M=2160 euler_M=0 signature=144 p1_div_by_6=true "
               "w_classes_vanish_except_w4=true w4_squared_zero=true spin=true");
  CHECK(r.code == 0);
  CHECK(has(r.out, "A-hat: 9"));
  CHECK(has(r.out, "SU(3) lift: pass"));
  r = run("obstruct " + temp_file("data.txt", "# bad euler\neuler_M=2\n"));
  CHECK(has(r.out, "necessary conditions: fail"));
  CHECK(run("obstruct colour=blue").code == 2);
}

TEST_CASE("json round trip") {
  std::vector<ClaimReport> reports{{"a.b", "anchor", ClaimStatus::pass, "x", "x", 12, {}},
                                   {"c.d", "other", ClaimStatus::fail, "1", "2", 0, {}},
                                   {"e.f", "third", ClaimStatus::error, "1", "boom", 3, {}}};
  CHECK(reports_from_json(reports_to_json(reports)) == reports);
  CHECK(exit_code(reports) == 1);
  reports.resize(1);
  CHECK(exit_code(reports) == 0);
  CHECK(parse_claim_status("skipped") == ClaimStatus::skipped);
}

TEST_CASE("claim patterns") {
  CHECK(claim_matches("all", "orbit.det_rho1"));
  CHECK(claim_matches("orbit.*", "orbit.det_rho1"));
  CHECK_FALSE(claim_matches("orbit.*", "stab.dimensions"));
  CHECK(select_claims("all").size() == 13);
  CHECK(select_claims("zzz").empty());
}

#include "triality/claims.hpp"
#include "triality/frames.hpp"
#include "triality/obstructions.hpp"
#include "triality/orbits.hpp"
#include "triality/structures.hpp"
#include "triality/torsion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace triality;

namespace {

constexpr int kUsage = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string diag_text(const Matrix<Scalar>& m) {
  std::string s = "diag(";
  for (std::size_t i = 0; i < 8; ++i) s += (i ? ", " : "") + format_scalar(m(i, i));
  return s + ")";
}

bool is_diagonal(const Matrix<Scalar>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int cmd_verify(const std::string& pattern, const std::string& format, std::uint64_t seed) {
  const auto claims = select_claims(pattern);
  if (claims.empty()) {
    std::cerr << "error: no claim matches '" << pattern << "' (see list-claims)\n";
    return kUsage;
  }
  const auto reports = run_claims(claims, RunOptions{seed});
  std::cout << (format == "json" ? reports_to_json(reports) + "\n" : reports_to_markdown(reports));
  return exit_code(reports);
}

int cmd_list() {
  for (const auto& c : claim_registry()) std::cout << c.id << "\t" << c.anchor << "\n";
  return 0;
}

int cmd_classify(const std::string& path, const std::string& format) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return kUsage;
  }
  Form rho;
  try {
    rho = parse_real_form(*text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << path << ": parse error at offset " << e.offset() << ": " << e.what() << "\n";
    return kUsage;
  }
  if (rho.homogeneous_grade() != 3) {
    std::cerr << "error: " << path << ": expected a nonzero 3-form\n";
    return kUsage;
  }
  const auto c = orbit_classify(rho);
  std::string witness;
  if (c.witness)
    witness = "e" + std::to_string((*c.witness)[0]) + ", e" + std::to_string((*c.witness)[1]) + ", e" +
              std::to_string((*c.witness)[2]);
  if (format == "json") {
    nlohmann::json j{{"kind", to_string(c.kind)}, {"norm2", format_scalar(c.norm2)}, {"jacobi", c.jacobi}};
    j["orientation"] = c.orientation ? nlohmann::json(to_string(*c.orientation)) : nlohmann::json(nullptr);
    j["params"] = c.params ? nlohmann::json({format_scalar(c.params->first), format_scalar(c.params->second)})
                           : nlohmann::json(nullptr);
    j["jacobi_witness"] = c.witness ? nlohmann::json(witness) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(c.kind);
  if (c.orientation) std::cout << ", " << to_string(*c.orientation);
  std::cout << "\n";
  if (c.params)
    std::cout << "ideal norms: (" << format_scalar(c.params->first) << ", " << format_scalar(c.params->second) << ")\n";
  std::cout << "norm^2: " << format_scalar(c.norm2) << (c.norm2 == Scalar(1) ? " (unit)" : " (not unit)") << "\n";
  std::cout << "jacobi: " << (c.jacobi ? "holds" : "fails at (" + witness + ")") << "\n";
  return 0;
}

// The catalog only carries the invariant form for PSU(3) frames.
bool has_structure_form(const CatalogEntry& e) { return e.kind == GKind::psu3; }

void report_harmonic(const CatalogEntry& e) {
  if (!has_structure_form(e)) {
    std::cout << "harmonic: skipped (no invariant form for this frame)\n";
    return;
  }
  const auto h = harmonic_check(e.frame, e.kind);
  std::cout << "harmonic: (" << yes_no(h.closed) << ", " << yes_no(h.coclosed) << ")";
  if (e.expected.harmonic)
    std::cout << "  expected (" << yes_no(e.expected.harmonic->closed) << ", " << yes_no(e.expected.harmonic->coclosed)
              << ")";
  std::cout << "\n";
}

void report_ricci(const CatalogEntry& e) {
  if (!e.frame.constant_structure()) {
    std::cout << "ricci: skipped (requires constant structure)\n";
    return;
  }
  const auto ric = ricci(e.frame);
  std::cout << "ricci: ";
  if (is_diagonal(ric)) std::cout << diag_text(ric);
  else {
    for (std::size_t i = 0; i < 8; ++i) {
      std::cout << (i ? "; " : "[");
      for (std::size_t j = 0; j < 8; ++j) std::cout << (j ? ", " : "") << format_scalar(ric(i, j));
    }
    std::cout << "]";
  }
  if (e.expected.ricci_diag) {
    std::cout << "  expected diag(";
    for (std::size_t i = 0; i < 8; ++i) std::cout << (i ? ", " : "") << format_scalar((*e.expected.ricci_diag)[i]);
    std::cout << ")";
  }
  std::cout << "\n";
}

void report_torsion(const CatalogEntry& e) {
  if (!has_structure_form(e)) {
    if (e.expected.nabla_table) {
      const auto lc = levi_civita(e.frame);
      const auto& t = *e.expected.nabla_table;
      std::cout << "levi-civita table: " << (lc == t ? "matches" : lc == -t ? "matches up to global sign" : "differs")
                << "\n";
    }
    std::cout << "intrinsic torsion: skipped (no invariant form for this frame)\n";
    return;
  }
  const auto& gamma = structure_form(e.kind);
  const auto n = nabla_form(gamma, e.frame);
  std::cout << "nabla " << (e.kind == GKind::psu3 ? "rho" : "Omega") << ":";
  bool any = false;
  for (int i = 0; i < 8; ++i)
    if (!n[i].is_zero()) {
      std::cout << "\n  e" << i + 1 << " (x) " << format_form(n[i]);
      any = true;
    }
  std::cout << (any ? "\n" : " 0\n");
  if (e.expected.nabla_gamma)
    std::cout << "  matches expected: " << yes_no(n == *e.expected.nabla_gamma) << "\n";
  if (e.expected.nabla_table) {
    const auto lc = levi_civita(e.frame);
    const auto& t = *e.expected.nabla_table;
    std::cout << "levi-civita table: " << (lc == t ? "matches" : lc == -t ? "matches up to global sign" : "differs")
              << "\n";
  }
  try {
    const auto t = intrinsic_torsion(e.frame, e.kind);
    const auto& ka = kernel_analysis(e.kind);
    const auto coords = torsion_coords(t);
    std::cout << "intrinsic torsion:";
    bool nz = false;
    for (int i = 0; i < 8; ++i)
      if (!t.slots[i].is_zero()) {
        std::cout << "\n  e" << i + 1 << " (x) " << format_form(t.slots[i]);
        nz = true;
      }
    std::cout << (nz ? "\n" : " 0\n");
    if (e.kind == GKind::psu3)
      std::cout << "  in ker d n ker d*: " << yes_no(ka.ker_d_dstar->contains(coords)) << "\n";
    else
      std::cout << "  in ker d: " << yes_no(ka.ker_d.contains(coords)) << "\n";
    std::cout << "  d(T) = d gamma: " << yes_no(dhat(t) == coframe_d(gamma, e.frame)) << "\n";
  } catch (const std::domain_error& err) {
    std::cout << "intrinsic torsion: error (" << err.what() << ")\n";
  }
}

void report_classify(const CatalogEntry& e) {
  if (e.kind != GKind::psu3) {
    std::cout << "classify: skipped (structure form is not a 3-form)\n";
    return;
  }
  const auto c = orbit_classify(structure_form(e.kind));
  std::cout << "classify: " << to_string(c.kind);
  if (c.orientation) std::cout << ", " << to_string(*c.orientation);
  if (e.expected.orbit) std::cout << "  expected " << *e.expected.orbit;
  std::cout << "\n";
}

int cmd_example(const std::string& id, const std::string& checks, const std::string& x0) {
  const auto& ids = catalog_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    std::cerr << "error: unknown example '" << id << "'; known:";
    for (const auto& i : ids) std::cerr << " " << i;
    std::cerr << "\n";
    return kUsage;
  }
  const auto wanted = split(checks, ',');
  for (const auto& w : wanted)
    if (w != "harmonic" && w != "torsion" && w != "ricci" && w != "classify") {
      std::cerr << "error: unknown check '" << w << "' (harmonic, torsion, ricci, classify)\n";
      return kUsage;
    }
  std::optional<Scalar> x;
  try {
    if (!x0.empty()) x = parse_real_scalar(x0);
    const auto e = catalog(id, x);
    std::cout << "example: " << e.id << " (" << to_string(e.kind) << ")";
    if (!e.frame.point_note().empty()) std::cout << " at " << e.frame.point_note();
    std::cout << "\n";
    for (const auto& w : wanted) {
      if (w == "harmonic") report_harmonic(e);
      else if (w == "ricci") report_ricci(e);
      else if (w == "torsion") report_torsion(e);
      else report_classify(e);
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
  return 0;
}

void print_checklist(const char* title, const Checklist& c) {
  std::cout << title << ": " << (c.passed() ? "pass" : "fail") << "\n";
  for (const auto& i : c.items)
    std::cout << "  " << i.name << ": " << to_string(i.verdict) << (i.informational ? " (informational)" : "") << "  "
              << i.detail << "\n";
}

int cmd_obstruct(const std::vector<std::string>& args) {
  CharData d;
  try {
    if (args.size() == 1 && args[0].find('=') == std::string::npos) {
      const auto text = read_file(args[0]);
      if (!text) {
        std::cerr << "error: cannot read " << args[0] << "\n";
        return kUsage;
      }
      d = parse_char_data_text(*text);
    } else {
      d = parse_char_data(args);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cout << "data: " << format_char_data(d) << "\n";
  std::cout << "A-hat: " << format_rational(ahat_eval(d)) << "\n";
  const auto s = sgn_identity_check(d);
  std::cout << "signature identity: " << to_string(s.verdict) << "  " << s.detail << "\n";
  print_checklist("necessary conditions", necessary_psu3(d));
  print_checklist("SU(3) lift", su3_lift_check(d));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for PSU(3) and Sp(1)Sp(2) structures in dimension 8"};
  app.require_subcommand(1);

  std::string pattern = "all", format = "md";
  std::uint64_t seed = kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "Run registered claims");
  verify->add_option("pattern", pattern, "Claim id or glob; 'all' runs everything");
  verify->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--seed", seed, "Seed for sampling claims");

  app.add_subcommand("list-claims", "List claim ids");

  std::string path, cformat = "text";
  auto* classify = app.add_subcommand("classify", "Classify the 3-form stored in a file");
  classify->add_option("file", path)->required();
  classify->add_option("--format", cformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string id, checks = "harmonic,torsion,ricci,classify", x0;
  auto* example = app.add_subcommand("example", "Report on a catalog frame");
  example->add_option("id", id)->required();
  example->add_option("--check", checks, "Comma separated subset of harmonic,torsion,ricci,classify");
  example->add_option("--x0", x0, "Point for gibbons_hawking (default 1)");

  std::vector<std::string> data;
  auto* obstruct = app.add_subcommand("obstruct", "Evaluate characteristic number constraints");
  obstruct->add_option("data", data, "Data file or key=value pairs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(pattern, format, seed);
    if (app.got_subcommand("list-claims")) return cmd_list();
    if (*classify) return cmd_classify(path, cformat);
    if (*example) return cmd_example(id, checks, x0);
    if (*obstruct) return cmd_obstruct(data);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

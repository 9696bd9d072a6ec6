#include "triality/claims.hpp"

#include "triality/clifford.hpp"
#include "triality/exterior.hpp"
#include "triality/frames.hpp"
#include "triality/obstructions.hpp"
#include "triality/orbits.hpp"
#include "triality/structures.hpp"
#include "triality/torsion.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fnmatch.h>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace triality {

namespace {

using json = nlohmann::json;

Check check(std::string name, bool pass, std::string detail = {}) { return {std::move(name), pass, std::move(detail)}; }

Check info(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail), true};
}

bool all_pass(const std::vector<Check>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.informational || c.pass; });
}

// summary when everything passes, the failing checks otherwise
ClaimOutcome outcome(std::string summary, std::vector<Check> checks) {
  std::string failed;
  for (const auto& c : checks)
    if (!c.pass && !c.informational) failed += (failed.empty() ? "" : "; ") + c.name + " (" + c.detail + ")";
  return {failed.empty() ? summary : summary + "; failed: " + failed, std::move(checks)};
}

std::string fmt(const Scalar& s) { return format_scalar(s); }
std::string fmt(const CScalar& s) { return format_scalar(s); }
std::string fmt(const Form& f) { return format_form(f); }
std::string fmt(const CForm& f) { return format_form(f); }
std::string fmt(std::size_t n) { return std::to_string(n); }

std::string fmt_diag(const Matrix<Scalar>& m) {
  std::string s = "diag(";
  for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? ", " : "") + fmt(m(i, i));
  return s + ")";
}

std::string fmt_diag(const std::array<Scalar, 8>& d) {
  std::string s = "diag(";
  for (std::size_t i = 0; i < 8; ++i) s += (i ? ", " : "") + fmt(d[i]);
  return s + ")";
}

bool is_diag(const Matrix<Scalar>& m, const std::array<Scalar, 8>& d) {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (m(i, j) != (i == j ? d[i] : Scalar())) return false;
  return true;
}

// Matrix entries: [-](int | r3 | h | q | s) with h = 1/2, q = 1/4, s = sqrt3/4.
Scalar entry(std::string_view t) {
  bool neg = !t.empty() && t[0] == '-';
  if (neg) t.remove_prefix(1);
  Scalar v;
  if (t == "r3") v = Scalar::sqrt3();
  else if (t == "h") v = Scalar(make_rational(1, 2));
  else if (t == "q") v = Scalar(make_rational(1, 4));
  else if (t == "s") v = Scalar(0, make_rational(1, 4));
  else v = Scalar(std::stol(std::string(t)));
  return neg ? -v : v;
}

Matrix<Scalar> matrix_rows(std::initializer_list<const char*> rows) {
  Matrix<Scalar> m(rows.size(), rows.size());
  std::size_t i = 0;
  for (const char* r : rows) {
    std::istringstream in(r);
    std::string tok;
    std::size_t j = 0;
    while (in >> tok) m(i, j++) = entry(tok);
    ++i;
  }
  return m;
}

std::optional<Scalar> ratio(const std::vector<Scalar>& y, const std::vector<Scalar>& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) {
      Scalar z = y[i] / x[i];
      for (std::size_t k = 0; k < x.size(); ++k)
        if (y[k] != z * x[k]) return std::nullopt;
      return z;
    }
  return std::nullopt;
}

RTorsion torsion_table(GKind k, std::initializer_list<std::pair<int, const char*>> slots) {
  RTorsion t{k, {}};
  for (const auto& [i, f] : slots) t.slots[i - 1] = parse_real_form(f);
  return t;
}

std::size_t nullity(const Matrix<Scalar>& m) { return m.cols() - rank(m); }

// ---------------------------------------------------------------- random helpers

Matrix<Scalar> random_signed_permutation(std::mt19937_64& rng) {
  std::array<int, 8> p;
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::array<int, 8> s;
  for (auto& x : s) x = rng() % 2 ? -1 : 1;
  int parity = 1;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (p[i] > p[j]) parity = -parity;
  int det = parity;
  for (int x : s) det *= x;
  if (det < 0) s[0] = -s[0];
  Matrix<Scalar> m(8, 8);
  for (int i = 0; i < 8; ++i) m(p[i], i) = Scalar(s[i]);
  return m;
}

Matrix<Scalar> random_rotation(std::mt19937_64& rng) {
  static const std::array<std::array<long, 3>, 3> triples = {{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}}};
  Matrix<Scalar> g = random_signed_permutation(rng);
  for (int r = 0; r < 2; ++r) {
    const auto& t = triples[rng() % 3];
    int i = int(rng() % 8), j = int(rng() % 7);
    if (j >= i) ++j;
    Matrix<Scalar> giv = Matrix<Scalar>::identity(8);
    const Scalar c(make_rational(t[0], t[2])), s(make_rational(t[1], t[2]));
    giv(i, i) = c;
    giv(j, j) = c;
    giv(i, j) = -s;
    giv(j, i) = s;
    g = giv * g;
  }
  return g;
}

Blade random_blade3(std::mt19937_64& rng) {
  std::array<int, 8> p;
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return make_blade({p[0], p[1], p[2]});
}

Form random_sparse_unit_form(std::mt19937_64& rng) {
  auto sign = [&] { return rng() % 2 ? Scalar(-1) : Scalar(1); };
  auto distinct = [&](std::size_t n) {
    std::vector<Blade> out;
    while (out.size() < n) {
      Blade b = random_blade3(rng);
      if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    return out;
  };
  auto build = [&](const std::vector<Scalar>& coeffs) {
    auto bl = distinct(coeffs.size());
    Form f;
    for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(bl[i], sign() * coeffs[i]);
    return f;
  };
  const Scalar h(make_rational(1, 2)), third(make_rational(1, 3)), two3(make_rational(2, 3));
  switch (rng() % 6) {
  case 0: return build({Scalar(1)});
  case 1: return build({Scalar(make_rational(3, 5)), Scalar(make_rational(4, 5))});
  case 2: return build({Scalar(0, h.a()), h});
  case 3: return build({h, h, h, h});
  case 4: return build({third, two3, two3});
  default: return apply_linear(random_signed_permutation(rng), canonical_rho());
  }
}

// ---------------------------------------------------------------- claims

ClaimOutcome clifford_kappa(const RunOptions&) {
  // Each entry s a.b stands for s E_{a,b}; E_{a,b} has -1 at (a,b) and +1 at (b,a).
  static const std::array<const char*, 8> table = {
      "-1.9 -2.10 -3.11 -4.12 -5.13 -6.14 -7.15 -8.16",  "+1.10 -2.9 -3.12 +4.11 -5.14 +6.13 +7.16 -8.15",
      "+1.11 +2.12 -3.9 -4.10 -5.15 -6.16 +7.13 +8.14",  "+1.12 -2.11 +3.10 -4.9 -5.16 +6.15 -7.14 +8.13",
      "+1.13 +2.14 +3.15 +4.16 -5.9 -6.10 -7.11 -8.12",  "+1.14 -2.13 +3.16 -4.15 +5.10 -6.9 +7.12 -8.11",
      "+1.15 -2.16 -3.13 +4.14 +5.11 -6.12 -7.9 +8.10",  "+1.16 +2.15 -3.14 -4.13 +5.12 +6.11 -7.10 -8.9"};
  std::vector<Check> cs;
  int equal = 0;
  for (int i = 1; i <= 8; ++i) {
    Matrix<Scalar> m(16, 16);
    std::istringstream in(table[i - 1]);
    std::string tok;
    while (in >> tok) {
      const Scalar s(tok[0] == '-' ? -1 : 1);
      const auto dot = tok.find('.');
      const int a = std::stoi(tok.substr(1, dot - 1)) - 1, b = std::stoi(tok.substr(dot + 1)) - 1;
      m(a, b) -= s;
      m(b, a) += s;
    }
    const bool ok = kappa(i) == m;
    equal += ok;
    cs.push_back(check("kappa(e" + std::to_string(i) + ") equals the reference table", ok));
  }
  bool cliff = true;
  const auto id = Matrix<Scalar>::identity(16);
  for (int i = 1; i <= 8; ++i)
    for (int j = i; j <= 8; ++j) {
      auto anti = kappa(i) * kappa(j) + kappa(j) * kappa(i);
      cliff = cliff && anti == (i == j ? Scalar(-2) * id : Matrix<Scalar>(16, 16));
    }
  cs.push_back(check("Clifford relations e_i e_j + e_j e_i = -2 delta_ij", cliff));
  Matrix<Scalar> vol(16, 16);
  for (int i = 0; i < 16; ++i) vol(i, i) = Scalar(i < 8 ? 1 : -1);
  const bool vol_ok = kappa_form(Form::blade(kVolume)) == vol;
  cs.push_back(check("volume form acts as +Id on the plus half and -Id on the minus half", vol_ok));
  return outcome(std::to_string(equal) + "/8 matrices equal the reference table; Clifford relations " + (cliff ? "hold" : "fail") +
                     "; volume form " + (vol_ok ? "diag(+Id, -Id)" : "not diag(+Id, -Id)"),
                 cs);
}

ClaimOutcome orbit_det_rho1(const RunOptions&) {
  const auto reference = matrix_rows({"r3 0 0 3 -r3 0 0 1", "2 -r3 -1 0 2 -r3 -1 0", "0 3 -r3 0 0 -1 -r3 0",
                                    "-1 0 2 r3 1 0 -2 -r3", "-r3 0 0 1 r3 0 0 3", "-2 -r3 -1 0 -2 -r3 -1 0",
                                    "0 -1 -r3 0 0 3 -r3 0", "1 0 2 -r3 -1 0 -2 r3"});
  const auto a = form_to_map(canonical_rho()).matrix;
  const Scalar det = determinant(a);
  std::vector<Check> cs{check("det A = -1", det == Scalar(-1), fmt(det)),
                        check("A equals the reference matrix / 4", a == Scalar(make_rational(1, 4)) * reference)};
  return outcome(fmt(det), cs);
}

ClaimOutcome orbit_membership(const RunOptions& opts) {
  std::vector<Check> cs;
  const Form rho = canonical_rho();
  const Form l3 = Form::blade("e123");
  const Form l2 = Scalar(0, make_rational(1, 2)) * Form::blade("e123") + Scalar(make_rational(1, 2)) * Form::blade("e456");
  auto describe = [](const OrbitClass& c) {
    std::string s = to_string(c.kind);
    if (c.orientation) s += ", " + to_string(*c.orientation);
    if (c.params) s += ", (" + fmt(c.params->first) + ", " + fmt(c.params->second) + ")";
    return s;
  };
  const auto c1 = orbit_classify(rho), c3 = orbit_classify(l3), c2 = orbit_classify(l2);
  cs.push_back(check("canonical rho is L1, orientation-reversing",
                     c1.kind == OrbitKind::L1_psu3 && c1.orientation == Orientation::reversing, describe(c1)));
  cs.push_back(check("e123 is L3, orientation-preserving",
                     c3.kind == OrbitKind::L3_sp1sp2 && c3.orientation == Orientation::preserving, describe(c3)));
  const bool p_ok = c2.params && c2.params->first == Scalar(make_rational(3, 4)) &&
                    c2.params->second == Scalar(make_rational(1, 4));
  cs.push_back(check("(r3/2) e123 + (1/2) e456 is L2 with (3/4, 1/4)", c2.kind == OrbitKind::L2_su2su2_u1 && p_ok,
                     describe(c2)));
  std::mt19937_64 rng(opts.seed);
  int stable = 0;
  std::string first_bad;
  for (int n = 0; n < 100; ++n) {
    const auto g = random_rotation(rng);
    bool ok = true;
    for (const auto* f : {&rho, &l3, &l2}) {
      const auto before = orbit_classify(*f), after = orbit_classify(apply_linear(g, *f));
      const bool same = before.kind == after.kind && before.orientation == after.orientation &&
                        before.params == after.params && before.norm2 == after.norm2;
      if (!same && first_bad.empty()) first_bad = describe(before) + " -> " + describe(after);
      ok = ok && same;
    }
    stable += ok;
  }
  cs.push_back(check("classification invariant under 100 exact rotations", stable == 100,
                     std::to_string(stable) + "/100" + (first_bad.empty() ? "" : ", first change " + first_bad)));
  return outcome(describe(c1) + "; " + describe(c3) + "; " + describe(c2) + "; invariant " + std::to_string(stable) +
                     "/100",
                 cs);
}

ClaimOutcome orbit_jacobi_equivalence(const RunOptions& opts) {
  std::mt19937_64 rng(opts.seed ^ 0x5eedULL);
  const auto id = Matrix<Scalar>::identity(8);
  int agree_gamma = 0, agree_brute = 0, lie = 0;
  for (int n = 0; n < 200; ++n) {
    const Form f = random_sparse_unit_form(rng);
    const bool gam = gamma(f, f, Chirality::plus) == id && gamma(f, f, Chirality::minus) == id;
    const bool j0 = jac(f, f).is_zero();
    const bool brute = satisfies_jacobi(bracket_from_form(f));
    agree_gamma += gam == j0;
    agree_brute += j0 == brute;
    lie += j0;
  }
  std::vector<Check> cs{
      check("Gamma+ = Id and Gamma- = Id iff Jac = 0", agree_gamma == 200, std::to_string(agree_gamma) + "/200"),
      check("Jac = 0 iff the extracted bracket satisfies Jacobi", agree_brute == 200,
            std::to_string(agree_brute) + "/200"),
      info("samples with Jac = 0", lie > 0 && lie < 200, std::to_string(lie) + "/200")};
  return outcome("agreement " + std::to_string(agree_gamma) + "/200 and " + std::to_string(agree_brute) + "/200 (" +
                     std::to_string(lie) + " Lie samples)",
                 cs);
}

ClaimOutcome stab_dimensions(const RunOptions&) {
  std::vector<Check> cs;
  const auto srho = stabilizer(canonical_rho());
  std::vector<std::vector<Scalar>> gens;
  for (int i = 1; i <= 8; ++i) gens.push_back(to_coords(interior(i, canonical_rho()), 2));
  const auto span = span_of("L2", Matrix<Scalar>::from_columns(gens, 28));
  cs.push_back(check("dim stab(rho) = 8", srho.dim() == 8, fmt(srho.dim())));
  cs.push_back(check("stab(rho) is spanned by e_i _| rho", span.equals(srho)));

  static const std::array<const char*, 15> equations = {
      "e68 - e13 - e24 + e57", "e46 - e17", "e47 - e25", "e23 - e14 - e67 + e58", "e35 + e17",
      "e28 + e17",             "e34 - e78 + e56 - e12", "e45 + e18", "e26 - e48", "e38 + e25",
      "e16 + e25",             "e27 - e18", "e36 + e18", "e15 - e48", "e37 - e48"};
  Matrix<Scalar> eq(15, 28);
  for (std::size_t r = 0; r < 15; ++r) {
    auto row = to_coords(parse_real_form(equations[r]), 2);
    for (std::size_t c = 0; c < 28; ++c) eq(r, c) = row[c];
  }
  const auto somega = stabilizer(canonical_omega());
  cs.push_back(check("dim stab(Omega) = 13", somega.dim() == 13, fmt(somega.dim())));
  cs.push_back(check("stab(Omega) satisfies the 15 stabilizer equations", (eq * somega.basis).is_zero()));
  cs.push_back(check("the 15 equations are independent", rank(eq) == 15, fmt(rank(eq))));
  return outcome("dim stab(rho) = " + fmt(srho.dim()) + ", dim stab(Omega) = " + fmt(somega.dim()), cs);
}

ClaimOutcome proj_lambda2(const RunOptions&) {
  std::vector<Check> cs;
  const auto& c = omega_contraction();
  const auto id = Matrix<Scalar>::identity(28);
  bool kaehler = true;
  for (const auto& w : kaehler_forms()) kaehler = kaehler && c * to_coords(w, 2) == (Scalar(5) * id) * to_coords(w, 2);
  cs.push_back(check("w _| Omega = 5 w for the three Kaehler forms", kaehler));
  const std::size_t n5 = nullity(c - Scalar(5) * id), n3 = nullity(c + Scalar(3) * id), n1 = nullity(c - id);
  cs.push_back(check("eigenvalues 5, -3, 1 with multiplicities 3, 10, 15", n5 == 3 && n3 == 10 && n1 == 15,
                     fmt(n5) + ", " + fmt(n3) + ", " + fmt(n1)));
  const auto e53 = span_of("L2", hstack(nullspace(c - Scalar(5) * id), nullspace(c + Scalar(3) * id)));
  cs.push_back(check("eigenvalues 5 and -3 together span stab(Omega)", e53.equals(stabilizer(canonical_omega()))));

  auto family = [&](const char* name, std::initializer_list<Projector> ps, std::initializer_list<std::size_t> ranks) {
    const auto cid = Matrix<CScalar>::identity(28);
    Matrix<CScalar> sum(28, 28);
    bool idem = true, orth = true, rk = true;
    auto r = ranks.begin();
    for (auto p : ps) {
      const auto& m = projector2(p);
      idem = idem && m * m == m;
      rk = rk && rank(m) == *r++;
      for (auto q : ps)
        if (q != p) orth = orth && (m * projector2(q)).is_zero();
      sum += m;
    }
    cs.push_back(check(std::string(name) + " projectors idempotent, orthogonal, complete, ranks as expected",
                       idem && orth && sum == cid && rk,
                       std::string(idem ? "" : "not idempotent ") + (orth ? "" : "not orthogonal ") +
                           (sum == cid ? "" : "incomplete ") + (rk ? "" : "wrong ranks")));
  };
  family("PSU(3) 8+20", {Projector::psu3_8, Projector::psu3_20}, {8, 20});
  family("PSU(3) 8+10+10", {Projector::psu3_8, Projector::psu3_10p, Projector::psu3_10m}, {8, 10, 10});
  family("Sp(1)Sp(2) 3+10+15", {Projector::sp_3, Projector::sp_10, Projector::sp_15}, {3, 10, 15});

  // star(rho ^ a) = +-i r3 a*rho on the 10+- summands, with a*rho the gl(8) action
  const CForm rho = to_complex(canonical_rho());
  const CScalar ir3(Scalar(), Scalar::sqrt3());
  bool stated = true, inverse = true;
  std::string witness;
  for (auto [p, s] : {std::pair{Projector::psu3_10p, 1}, std::pair{Projector::psu3_10m, -1}}) {
    const auto basis10 = column_basis(projector2(p));
    for (std::size_t j = 0; j < basis10.cols(); ++j) {
      const CForm a = from_coords(basis10.column(j), 2);
      const CForm lhs = hodge_star(wedge(rho, a));
      const CForm act = pull2(a, rho);
      const CScalar k = s > 0 ? ir3 : -ir3;
      if (lhs != k * act) {
        if (stated && witness.empty()) {
          auto z = proportionality(Matrix<CScalar>::from_columns({to_coords(lhs, 3)}, 56),
                                   Matrix<CScalar>::from_columns({to_coords(act, 3)}, 56));
          witness = "on " + to_string(p) + ": star(rho ^ a) = " + (z ? fmt(*z) : std::string("(not proportional)")) +
                    " a*rho";
        }
        stated = false;
      }
      inverse = inverse && act == k * lhs;
    }
  }
  cs.push_back(check("star(rho ^ a) = +-i r3 a*rho on the 10+- summands", stated, witness));
  cs.push_back(info("a*rho = +-i r3 star(rho ^ a) on the 10+- summands", inverse));
  return outcome("eigen multiplicities (5: " + fmt(n5) + ", -3: " + fmt(n3) + ", 1: " + fmt(n1) + ")", cs);
}

ClaimOutcome betti_c_complex(const RunOptions&) {
  std::vector<Check> cs;
  bool squares = true;
  for (int k = 0; k + 1 <= 7; ++k) squares = squares && (c_operator(k + 1) * c_operator(k)).is_zero();
  cs.push_back(check("c^2 = 0", squares));
  const auto b = betti();
  std::string bs = "(";
  for (std::size_t i = 0; i < b.size(); ++i) bs += (i ? "," : "") + std::to_string(b[i]);
  bs += ")";
  cs.push_back(check("Betti vector (1,0,0,1,0,1,0,0,1)", b == std::array<int, 9>{1, 0, 0, 1, 0, 1, 0, 0, 1}, bs));
  bool c2 = true;
  for (Blade e : basis(2)) c2 = c2 && c_apply(2, Form::blade(e)) == -pull2(Form::blade(e), canonical_rho());
  cs.push_back(check("c2(a) = -a*rho on a basis of Lambda^2", c2));
  const Form e128 = Form::blade("e128");
  const Form p = p3(e128), pp = p3(p), cp = c_apply(3, p);
  const Form ep = parse_real_form("5/8 e128 + 1/8 r3 e345 + 1/8 r3 e367 - 2/8 e458 + 2/8 e678");
  const Form epp = parse_real_form("39/64 e128 + 7/64 r3 e345 + 7/64 r3 e367 - 18/64 e458 + 18/64 e678");
  const Form ecp =
      parse_real_form("7/32 r3 e1245 + 7/32 r3 e1267 - 9/32 e1468 - 9/32 e1578 + 9/32 e2478 - 9/32 e2568");
  cs.push_back(check("p3(e128) matches", p == ep, fmt(p)));
  cs.push_back(check("p3^2(e128) matches", pp == epp, fmt(pp)));
  cs.push_back(check("c3 p3(e128) matches", cp == ecp, fmt(cp)));
  return outcome("betti " + bs, cs);
}

ClaimOutcome sigma_maps(const RunOptions&) {
  std::vector<Check> cs;
  const auto id = Matrix<Scalar>::identity(8);
  struct Case {
    GKind kind;
    Chirality label;
    Scalar det;
    const char* name;
  };
  std::string dets;
  for (const auto& c : {Case{GKind::psu3, Chirality::plus, Scalar(1), "PSU(3) sigma+"},
                        Case{GKind::psu3, Chirality::minus, Scalar(1), "PSU(3) sigma-"},
                        Case{GKind::sp1sp2, Chirality::plus, Scalar(-1), "Sp(1)Sp(2) sigma+"}}) {
    const auto s = sigma_canonical(c.kind, c.label);
    const Scalar d = determinant(s.columns);
    dets += (dets.empty() ? "" : ", ") + std::string(c.name) + " det " + fmt(d);
    cs.push_back(check(std::string(c.name) + " orthogonal", s.columns.transpose() * s.columns == id));
    cs.push_back(check(std::string(c.name) + " det = " + fmt(c.det), d == c.det, fmt(d)));
    const auto m = mu(s);
    cs.push_back(check(std::string(c.name) + " mu(sigma) = 0",
                       std::all_of(m.coords.begin(), m.coords.end(), [](const Scalar& x) { return x.is_zero(); })));
    bool inv = true;
    for (const auto& a : stabilizer_basis(c.kind)) inv = inv && act2_svf(a, s).columns.is_zero();
    cs.push_back(check(std::string(c.name) + " annihilated by the stabilizer", inv));
  }
  bool mi = true;
  for (auto h : {Chirality::plus, Chirality::minus})
    for (int k = 0; k < 8; ++k) {
      Spinor<Scalar> psi{h, std::vector<Scalar>(8)};
      psi.coords[k] = Scalar(1);
      const auto back = mu(iota(psi));
      mi = mi && back.chirality == h && back.coords == psi.coords;
    }
  cs.push_back(check("mu o iota = id", mi));
  return outcome(dets, cs);
}

ClaimOutcome l_spectrum(const RunOptions&) {
  std::vector<Check> cs;
  const GKind sp = GKind::sp1sp2;
  const Form& omega = canonical_omega();
  const auto t1 = torsion_table(sp, {{2, "e12 - e34 - e56 + e78"},
                                     {3, "e13 + e24 - e57 - e68"},
                                     {4, "e14 - e23 - e58 + e67"},
                                     {5, "3 e15 - e26 - e37 - e48"},
                                     {6, "3 e16 + e25 - e38 + e47"},
                                     {7, "3 e17 + e28 + e35 - e46"},
                                     {8, "3 e18 - e27 + e36 + e45"}});
  const auto z = ratio(torsion_coords(t1), torsion_coords(embed3(interior(1, omega), sp)));
  cs.push_back(check("reference t1 is a multiple of the embedded e1 _| Omega", z.has_value(),
                     z ? "factor " + fmt(*z) : "not proportional"));
  cs.push_back(check("d(t1) != 0 and D+(t1) != 0", !dhat(t1).is_zero() && !Dhat(t1, Chirality::plus).columns.is_zero()));
  RTorsion e{sp, {}};
  e.slots[0] = Form::blade("e18");
  const Form de = dhat(e);
  cs.push_back(check("d(e1 (x) e18) != 0", !de.is_zero(), fmt(de)));

  const auto& ka = kernel_analysis(sp);
  cs.push_back(check("d surjective onto Lambda^5 (rank 56)", ka.rank_d == 56, fmt(ka.rank_d)));
  cs.push_back(check("ker d = ker D+ with dim 64", ka.kernels_equal && ka.ker_d.dim() == 64,
                     "dims " + fmt(ka.ker_d.dim()) + ", " + fmt(ka.ker_Dplus.dim())));

  const auto& l = L_matrix();
  const auto id = Matrix<Scalar>::identity(56);
  const std::size_t m2 = nullity(l - Scalar(2) * id), m12 = nullity(l - Scalar(12) * id),
                    m20 = nullity(l - Scalar(20) * id);
  const std::string spectrum_text = "2:" + fmt(m2) + ", 12:" + fmt(m12) + ", 20:" + fmt(m20);
  cs.push_back(check("L spectrum {2, 12, 20} with multiplicities {8, 32, 16}", m2 == 8 && m12 == 32 && m20 == 16, spectrum_text));
  const Form t1f = interior(1, Scalar(make_rational(1, 2)) * omega);
  const Form lt1 = L_op(t1f);
  const Form expected7 = parse_real_form("-6 e234 + 2 e256 - 2 e278 + 2 e357 + 2 e368 + 2 e458 - 2 e467");
  cs.push_back(check("L(t1) reproduces the expected 7-term output and equals 2 t1", lt1 == expected7 && lt1 == Scalar(2) * t1f,
                     fmt(lt1)));
  const Form lt3 = Scalar(3) * L_op(parse_real_form("-1/3 e134 + e178"));
  cs.push_back(check("3 L(t3) matches", lt3 == parse_real_form("-12 e134 - 8 e156 + 44 e178 + 4 e358 - 4 e367 - 4 e457 - 4 e468"),
                     fmt(lt3)));
  const CForm t2 = parse_form("e157 + 1 i e158 - 1 i e167 + e168 - 1 i e257 + e258 - e267 - 1 i e268");
  Form re, im;
  for (const auto& [b, v] : t2.terms()) {
    re.add_term(b, v.re());
    im.add_term(b, v.im());
  }
  const bool l20 = apply_matrix(l, re, 3, 3) == Scalar(20) * re && apply_matrix(l, im, 3, 3) == Scalar(20) * im;
  cs.push_back(check("L(t2) = 20 t2 on the highest weight vector", l20));
  return outcome("spectrum " + spectrum_text + "; rank d " + fmt(ka.rank_d) + "; dim ker d " + fmt(ka.ker_d.dim()), cs);
}

ClaimOutcome psu3_suite(const RunOptions&) {
  std::vector<Check> cs;
  const GKind k = GKind::psu3;
  RTorsion e{k, {}};
  e.slots[0] = Form::blade("e18");
  const Form de = dhat(e);
  cs.push_back(check("d(e1 (x) e18) = -e1238/2 - e1478/4 + e1568/4",
                     de == parse_real_form("-1/2 e1238 - 1/4 e1478 + 1/4 e1568"), fmt(de)));
  cs.push_back(check("c4* d(e1 (x) e18) = 0", c_adjoint_apply(3, de).is_zero()));
  const Form cc = c_adjoint_apply(4, c_apply(4, de));
  cs.push_back(check("c5* c4 d(e1 (x) e18) matches",
                     cc == parse_real_form("-10/32 e1238 - 5/32 e1478 + 5/32 e1568 + 3/32 e2468 + 3/32 e2578 + "
                                           "3/32 e3458 - 3/32 e3678"),
                     fmt(cc)));
  bool surjd = true;
  const Form& rho = canonical_rho();
  for (Blade b : basis(3)) {
    const Form a = Form::blade(b);
    const Form perp = a - inner(a, rho) * rho;
    surjd = surjd && c_apply(3, perp) == Scalar(make_rational(1, 2)) * dhat(iota_rho_perp(a));
  }
  cs.push_back(check("c3(a) = d(iota(a))/2 on a basis of rho-perp", surjd));

  const auto& ka = kernel_analysis(k);
  cs.push_back(check("d surjective (rank 70)", ka.rank_d == 70, fmt(ka.rank_d)));
  cs.push_back(check("d* surjective (rank 28)", ka.rank_dstar == 28, fmt(ka.rank_dstar)));
  const std::size_t kd = ka.ker_d_dstar ? ka.ker_d_dstar->dim() : 0;
  cs.push_back(check("ker d n ker d* = ker D+ n ker D- with dim 70", ka.kernels_equal && kd == 70, fmt(kd)));
  cs.push_back(info("dim ker D+, dim ker D-", true,
                    fmt(ka.ker_Dplus.dim()) + ", " + fmt(ka.domain_dim - ka.rank_Dminus)));

  // reference sample vectors
  auto ctensor = [](std::initializer_list<std::pair<int, const char*>> slots) {
    CTorsion t{GKind::psu3, {}};
    for (const auto& [i, f] : slots) t.slots[i - 1] = parse_form(f);
    return t;
  };
  CTorsion tau0{k, {}};
  tau0.slots[0] = project2(CForm::blade("e18", CScalar(6)), Projector::psu3_10p);
  tau0.slots[1] = project2(CForm::blade("e28", CScalar(-6)), Projector::psu3_10p);
  cs.push_back(check("id (x) pi10+(tau0) matches",
                     tau0 == ctensor({{1, "3 e18 + 1 r3 i e23 - 1 r3 i e47 + 1 r3 i e56"},
                                      {2, "1 r3 i e13 - 3 e28 + 1 r3 i e46 + 1 r3 i e57"}})));
  const CForm w = CScalar(Scalar(), Scalar(0, 2)) * project2(CForm::blade("e18"), Projector::psu3_10p);
  cs.push_back(check("2 r3 i pi10+(e18) matches", w == parse_form("1 r3 i e18 - e23 + e47 - e56"), fmt(w)));

  const auto zc = z_constants();
  const CScalar z22(Scalar(make_rational(1, 8)), Scalar(0, make_rational(1, 8)));
  const CScalar z11(Scalar(2), Scalar(0, -2));
  cs.push_back(check("z(2,2) = (1 + i r3)/8", zc.z22 == z22, fmt(zc.z22)));
  cs.push_back(check("z(1,1) = 2(1 - r3 i)", zc.z11 == z11, fmt(zc.z11)));
  cs.push_back(check("conjugate (2,2) constant is conj(z)", zc.z22_conjugate == zc.z22.conj(), fmt(zc.z22_conjugate)));

  const Form c2 = c_apply(2, Form::blade("e18", Scalar(4)));
  const RTorsion raw = natural_embedding(c2 - inner(c2, rho) * rho, k);
  const RTorsion tau = project_perp(raw);
  cs.push_back(check("D+(tau[1,2]) != 0 and D-(tau[1,2]) != 0",
                     !Dhat(tau, Chirality::plus).columns.is_zero() && !Dhat(tau, Chirality::minus).columns.is_zero()));
  const RTorsion display =
      torsion_table(k, {{1, "-1 r3 e45 - 1 r3 e67"}, {2, "2 e38"}, {3, "-2 e28"}, {4, "1 r3 e15 + e78"},
                        {5, "-1 r3 e14 - e68"}, {6, "1 r3 e17 + e58"}, {7, "-1 r3 e16 - e48"},
                        {8, "2 e23 + e47 - e56"}});
  cs.push_back(info("reference tau[1,2] equals the embedding before the 20-projection", raw == display));
  return outcome("z(2,2) = " + fmt(zc.z22) + ", z(1,1) = " + fmt(zc.z11) + "; rank d " + fmt(ka.rank_d) +
                     ", rank d* " + fmt(ka.rank_dstar) + ", dim intersection " + fmt(kd),
                 cs);
}

ClaimOutcome frames_catalog(const RunOptions&) {
  std::vector<Check> cs;
  std::string actual;
  {
    const auto e = catalog("su3_biinvariant");
    const auto n = nabla_form(canonical_rho(), e.frame);
    const bool parallel = std::all_of(n.begin(), n.end(), [](const Form& f) { return f.is_zero(); });
    const auto ric = ricci(e.frame);
    cs.push_back(check("su(3): nabla rho = 0", parallel));
    cs.push_back(check("su(3): Ric = (3/16) Id", is_diag(ric, *e.expected.ricci_diag), fmt_diag(ric)));
  }
  {
    const auto e = catalog("psu3_nilmanifold");
    const Form& rho = canonical_rho();
    const auto h = harmonic_check(e.frame, GKind::psu3);
    const auto ric = ricci(e.frame);
    cs.push_back(check("nilmanifold harmonic", h.closed && h.coclosed));
    cs.push_back(check("nilmanifold Ric = " + fmt_diag(*e.expected.ricci_diag), is_diag(ric, *e.expected.ricci_diag),
                       fmt_diag(ric)));
    actual += "nil Ric " + fmt_diag(ric);
    const auto t = intrinsic_torsion(e.frame, GKind::psu3);
    const bool nonzero = std::any_of(t.slots.begin(), t.slots.end(), [](const Form& f) { return !f.is_zero(); });
    const auto& ka = kernel_analysis(GKind::psu3);
    cs.push_back(check("nilmanifold torsion nonzero and inside the 70-dim intersection",
                       nonzero && ka.ker_d_dstar->contains(torsion_coords(t))));
    cs.push_back(check("nilmanifold d(T) = d rho and d*(T) = -d* rho",
                       dhat(t) == coframe_d(rho, e.frame) && dstar_hat(t) == -codifferential(rho, e.frame)));
    bool constraint = true;
    for (auto c : {Chirality::plus, Chirality::minus})
      for (const auto& x : ricci_constraint(ric, GKind::psu3, c).coords) constraint = constraint && x.is_zero();
    cs.push_back(check("nilmanifold sum Ric_ij e_i . sigma(e_j) = 0", constraint));
  }
  {
    const auto e = catalog("salamon_sp1sp2");
    const auto lc = levi_civita(e.frame);
    const auto& table = *e.expected.nabla_table;
    std::string rows;
    for (int j = 1; j <= 8; ++j) {
      bool same = true, flipped = true;
      for (int i = 1; i <= 8; ++i)
        for (int k = 1; k <= 8; ++k) {
          same = same && lc(i, j, k) == table(i, j, k);
          flipped = flipped && lc(i, j, k) == -table(i, j, k);
        }
      if (!same && !flipped) rows += (rows.empty() ? "e" : ", e") + std::to_string(j);
    }
    cs.push_back(check("Salamon nabla table matches up to global sign", lc == table || lc == -table,
                       rows.empty() ? "" : "rows " + rows + " differ"));
    const auto ric = ricci(e.frame);
    cs.push_back(check("Salamon Ric = " + fmt_diag(*e.expected.ricci_diag), is_diag(ric, *e.expected.ricci_diag),
                       fmt_diag(ric)));
    actual += "; Salamon Ric " + fmt_diag(ric);
  }
  {
    const auto e = catalog("gibbons_hawking", Scalar(1));
    const auto h = harmonic_check(e.frame, GKind::psu3);
    cs.push_back(check("Gibbons-Hawking harmonic at x = 1", h.closed && h.coclosed));
    const auto n = nabla_form(canonical_rho(), e.frame);
    const auto& want = *e.expected.nabla_gamma;
    std::string got;
    for (int i = 0; i < 8; ++i)
      if (!n[i].is_zero()) got += (got.empty() ? "" : "; ") + std::string("e") + std::to_string(i + 1) + ": " + fmt(n[i]);
    cs.push_back(check("Gibbons-Hawking nabla rho = -(r3/24)(e4 (x) w1+ ^ e8 + e5 (x) w2+ ^ e8)", n == want, got));
    std::optional<Scalar> scale;
    if (!want[3].is_zero()) scale = ratio(to_coords(n[3], 3), to_coords(want[3], 3));
    actual += "; GH nabla rho = " + (scale ? fmt(*scale) : std::string("?")) + " x expected";
  }
  return outcome(actual, cs);
}

ClaimOutcome calib_bounds(const RunOptions& opts) {
  std::vector<Check> cs;
  auto unit = [](int i) {
    Vector8 v{};
    v[i - 1] = Scalar(1);
    return v;
  };
  const Scalar c3 = calibration(GKind::psu3, {unit(1), unit(2), unit(3)});
  // Omega has -6 e1234, so the calibrated orientation of <e1..e4> is e2 ^ e1 ^ e3 ^ e4
  const Scalar c4 = calibration(GKind::sp1sp2, {unit(2), unit(1), unit(3), unit(4)});
  const Scalar c4_std = calibration(GKind::sp1sp2, {unit(1), unit(2), unit(3), unit(4)});
  cs.push_back(check("2 rho on <e1, e2, e3> = 1", c3 == Scalar(1), fmt(c3)));
  cs.push_back(check("Omega/6 on the oriented plane e2 ^ e1 ^ e3 ^ e4 = 1", c4 == Scalar(1), fmt(c4)));
  cs.push_back(info("Omega/6 on e1 ^ e2 ^ e3 ^ e4", c4_std == -Scalar(1), fmt(c4_std)));
  const double m3 = calibration_sample(GKind::psu3, 10000, opts.seed);
  const double m4 = calibration_sample(GKind::sp1sp2, 10000, opts.seed + 1);
  std::ostringstream d3, d4;
  d3.precision(12);
  d4.precision(12);
  d3 << m3;
  d4 << m4;
  cs.push_back(check("max of 2 rho over 10^4 random 3-planes <= 1 + 1e-9", m3 <= 1 + 1e-9, d3.str()));
  cs.push_back(check("max of Omega/6 over 10^4 random 4-planes <= 1 + 1e-9", m4 <= 1 + 1e-9, d4.str()));
  return outcome("exact " + fmt(c3) + ", " + fmt(c4) + "; sampled max " + d3.str() + ", " + d4.str(), cs);
}

ClaimOutcome obstruct_divisibility(const RunOptions&) {
  std::vector<Check> cs;
  bool sweep = true;
  long count = 0;
  for (long p = -1000000 / 960 * 960; p <= 1000000; p += 960) {
    CharData d;
    d.p1_squared_M = p;
    d.p2_M = p / 4;
    d.signature = p / 60;
    const Rational a = ahat_eval(d);
    sweep = sweep && a == make_rational(p, 960) && Rational(16 * a) == make_rational(p, 60) &&
            sgn_identity_check(d).verdict == Verdict::pass;
    ++count;
  }
  cs.push_back(check("A-hat = p1^2/960 and sgn = 16 A-hat under 4 p2 = p1^2", sweep, std::to_string(count) + " values"));

  CharData su3;
  su3.p1_div_by_6 = su3.w_classes_vanish_except_w4 = su3.w4_squared_zero = su3.spin = true;
  const auto lift = su3_lift_check(su3);
  const bool every = std::all_of(lift.items.begin(), lift.items.end(), [](const CheckItem& i) { return i.verdict == Verdict::pass; });
  cs.push_back(check("SU(3) datum passes every item", necessary_psu3(su3).passed() && lift.passed() && every));

  auto verdict = [](const Checklist& c, const char* n) { return c.find(n)->verdict; };
  CharData d36 = su3;
  d36.p1_squared_M = 36;
  d36.p2_M = 9;
  cs.push_back(check("p1^2 = 36 fails the 216 item", verdict(su3_lift_check(d36), "p1_squared_216") == Verdict::fail &&
                                                         !su3_lift_check(d36).passed()));
  CharData de = su3;
  de.euler_M = 2;
  cs.push_back(check("e = 2 fails the Euler item",
                     verdict(necessary_psu3(de), "euler") == Verdict::fail && !necessary_psu3(de).passed()));
  CharData dp = su3;
  dp.p1_squared_M = 960;
  dp.p2_M = 100;
  cs.push_back(check("4 p2 != p1^2 fails the Pontryagin item",
                     verdict(necessary_psu3(dp), "pontryagin") == Verdict::fail &&
                         sgn_identity_check(dp).verdict == Verdict::not_applicable));
  CharData ds = su3;
  ds.p1_squared_M = 960;
  ds.p2_M = 240;
  ds.signature = 8;
  cs.push_back(check("sgn = 8 with A-hat = 1 fails the signature identity", sgn_identity_check(ds).verdict == Verdict::fail));

  bool index = true;
  for (long k = -3; k <= 3; ++k) {
    CharData d = su3;
    d.p1_squared_M = 216 * k;
    d.p2_M = 378 * k;
    index = index && ahat_eval(d).get_den() == 1 && verdict(su3_lift_check(d), "spin_index") == Verdict::pass;
  }
  cs.push_back(check("spin index integral for p1^2 = 216k with integral A-hat", index));

  CharData d40 = su3;
  d40.p1_squared_M = 38400;
  d40.p2_M = 9600;
  d40.signature = 640;
  CharData d9 = su3;
  d9.p1_squared_M = 8640;
  d9.p2_M = 2160;
  d9.signature = 144;
  const auto l40 = su3_lift_check(d40), l9 = su3_lift_check(d9);
  cs.push_back(check("40/640 items pass on A-hat = 40, sgn = 640",
                     verdict(l40, "ahat_40") == Verdict::pass && verdict(l40, "sgn_640") == Verdict::pass));
  cs.push_back(check("40/640 items fail on A-hat = 9, sgn = 144 while the lift checklist still passes",
                     verdict(l9, "ahat_40") == Verdict::fail && verdict(l9, "sgn_640") == Verdict::fail && l9.passed()));
  return outcome("sweep over " + std::to_string(count) + " values of p1^2", cs);
}

} // namespace


const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> claims = {
      {"clifford.kappa", "Clifford matrices of e1..e8 from octonion right multiplication",
       "8/8 matrices equal the reference table; Clifford relations hold; volume form diag(+Id, -Id)", clifford_kappa},
      {"orbit.det_rho1", "spinor map induced by the canonical PSU(3) form", "-1", orbit_det_rho1},
      {"orbit.membership", "orbit decomposition of supersymmetric 3-forms",
       "L1_psu3, orientation-reversing; L3_sp1sp2, orientation-preserving; L2_su2su2_u1, (3/4, 1/4); invariant "
       "100/100",
       orbit_membership},
      {"orbit.jacobi_equivalence", "isometry condition versus Jacobi identity for 3-forms",
       "agreement 200/200 and 200/200", orbit_jacobi_equivalence},
      {"stab.dimensions", "stabilizer algebras of rho and Omega in Lambda^2", "dim stab(rho) = 8, dim stab(Omega) = 13",
       stab_dimensions},
      {"proj.lambda2", "decompositions of Lambda^2 under PSU(3) and Sp(1)Sp(2)",
       "eigen multiplicities (5: 3, -3: 10, 1: 15); projectors idempotent, orthogonal, complete; 10+- identity",
       proj_lambda2},
      {"betti.c_complex", "invariant complex built from the su(3) structure constants", "betti (1,0,0,1,0,1,0,0,1)",
       betti_c_complex},
      {"sigma.maps", "invariant supersymmetric maps",
       "PSU(3) sigma+ det 1, PSU(3) sigma- det 1, Sp(1)Sp(2) sigma+ det -1", sigma_maps},
      {"L.spectrum", "torsion operators for Sp(1)Sp(2)", "spectrum 2:8, 12:32, 20:16; rank d 56; dim ker d 64",
       l_spectrum},
      {"psu3.z22", "torsion operators for PSU(3)",
       "z(2,2) = 1/8 + 1/8 r3 i, z(1,1) = 2 - 2 r3 i; rank d 70, rank d* 28, dim intersection 70", psu3_suite},
      {"frames.catalog", "left-invariant and local frame examples",
       "nil Ric diag(0, 0, 0, -1/2, -1/2, -1/2, -1/2, 0); Salamon Ric diag(-1/2, 0, -1/4, 0, -1/4, 0, 0, 0); GH "
       "nabla rho = 1 x expected",
       frames_catalog},
      {"calib.bounds", "calibration inequalities for 2 rho and Omega/6", "exact 1, 1; sampled max <= 1 + 1e-9",
       calib_bounds},
      {"obstruct.divisibility", "characteristic number constraints for PSU(3) and SU(3) structures",
       "all predicates as expected", obstruct_divisibility},
  };
  return claims;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::pass: return "pass";
  case ClaimStatus::fail: return "fail";
  case ClaimStatus::error: return "error";
  case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

ClaimStatus parse_claim_status(std::string_view s) {
  if (s == "pass") return ClaimStatus::pass;
  if (s == "fail") return ClaimStatus::fail;
  if (s == "error") return ClaimStatus::error;
  if (s == "skipped") return ClaimStatus::skipped;
  throw std::invalid_argument("unknown claim status: " + std::string(s));
}

bool claim_matches(std::string_view pattern, std::string_view id) {
  if (pattern == "all") return true;
  return fnmatch(std::string(pattern).c_str(), std::string(id).c_str(), 0) == 0;
}

std::vector<const Claim*> select_claims(std::string_view pattern) {
  std::vector<const Claim*> out;
  for (const auto& c : claim_registry())
    if (claim_matches(pattern, c.id)) out.push_back(&c);
  return out;
}

ClaimReport run_claim(const Claim& c, const RunOptions& opts) {
  ClaimReport r{c.id, c.anchor, ClaimStatus::error, c.expected, {}, 0, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto o = c.run(opts);
    r.status = all_pass(o.checks) ? ClaimStatus::pass : ClaimStatus::fail;
    r.actual = std::move(o.actual);
    r.checks = std::move(o.checks);
  } catch (const std::exception& e) {
    r.actual = std::string("error: ") + e.what();
  }
  r.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<ClaimReport> run_claims(const std::vector<const Claim*>& claims, const RunOptions& opts) {
  std::vector<ClaimReport> out;
  for (const auto* c : claims) out.push_back(run_claim(*c, opts));
  return out;
}

std::string reports_to_json(const std::vector<ClaimReport>& reports) {
  json j;
  j["claims"] = json::array();
  std::map<std::string, int> summary{{"pass", 0}, {"fail", 0}, {"error", 0}, {"skipped", 0}};
  for (const auto& r : reports) {
    j["claims"].push_back({{"id", r.id},
                           {"anchor", r.anchor},
                           {"status", to_string(r.status)},
                           {"expected", r.expected},
                           {"actual", r.actual},
                           {"runtime_ms", r.runtime_ms}});
    ++summary[to_string(r.status)];
  }
  j["summary"] = summary;
  return j.dump(2);
}

std::vector<ClaimReport> reports_from_json(std::string_view text) {
  const json j = json::parse(text);
  std::vector<ClaimReport> out;
  for (const auto& c : j.at("claims"))
    out.push_back({c.at("id").get<std::string>(), c.at("anchor").get<std::string>(),
                   parse_claim_status(c.at("status").get<std::string>()), c.at("expected").get<std::string>(),
                   c.at("actual").get<std::string>(), c.at("runtime_ms").get<long long>(), {}});
  return out;
}

std::string reports_to_markdown(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  out << "| id | status | expected | actual | ms |\n|---|---|---|---|---|\n";
  for (const auto& r : reports)
    out << "| " << r.id << " | " << to_string(r.status) << " | " << r.expected << " | " << r.actual << " | "
        << r.runtime_ms << " |\n";
  for (const auto& r : reports) {
    if (r.checks.empty()) continue;
    out << "\n### " << r.id << "\n\n" << r.anchor << "\n\n";
    for (const auto& c : r.checks) {
      out << "- " << (c.informational ? "[info] " : c.pass ? "[pass] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  return out.str();
}

int exit_code(const std::vector<ClaimReport>& reports) {
  for (const auto& r : reports)
    if (r.status == ClaimStatus::fail || r.status == ClaimStatus::error) return 1;
  return 0;
}

} // namespace triality

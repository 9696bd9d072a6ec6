#include "triality/structures.hpp"

#include "triality/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace triality {

std::string to_string(GKind k) { return k == GKind::psu3 ? "PSU3" : "SP1SP2"; }

const Form& canonical_rho() {
  static const Form rho = [] {
    const Scalar h(make_rational(1, 2)), q(make_rational(1, 4)), r(0, make_rational(1, 4));
    Form f;
    f.add_term(make_blade({1, 2, 3}), h);
    f.add_term(make_blade({1, 4, 7}), q);
    f.add_term(make_blade({1, 5, 6}), -q);
    f.add_term(make_blade({2, 4, 6}), q);
    f.add_term(make_blade({2, 5, 7}), q);
    f.add_term(make_blade({3, 4, 5}), q);
    f.add_term(make_blade({3, 6, 7}), -q);
    f.add_term(make_blade({4, 5, 8}), r);
    f.add_term(make_blade({6, 7, 8}), r);
    return f;
  }();
  return rho;
}

const std::array<Form, 3>& kaehler_forms() {
  static const std::array<Form, 3> w = [] {
    auto f = [](std::initializer_list<std::pair<const char*, int>> terms) {
      Form out;
      for (auto [name, s] : terms) out.add_term(parse_blade(name), Scalar(s));
      return out;
    };
    return std::array<Form, 3>{f({{"e12", 1}, {"e34", -1}, {"e56", 1}, {"e78", -1}}),
                               f({{"e13", 1}, {"e24", 1}, {"e57", 1}, {"e68", 1}}),
                               f({{"e14", 1}, {"e23", -1}, {"e58", 1}, {"e67", -1}})};
  }();
  return w;
}

const Form& canonical_omega() {
  static const Form omega = [] {
    Form o;
    for (const auto& w : kaehler_forms()) o += wedge(w, w);
    return o;
  }();
  return omega;
}

const Form& structure_form(GKind k) { return k == GKind::psu3 ? canonical_rho() : canonical_omega(); }

Subspace<Scalar> stabilizer(const Form& gamma) {
  Matrix<Scalar> m(256, 28);
  const auto& b2 = basis(2);
  for (std::size_t j = 0; j < b2.size(); ++j) {
    Form img = act2(Form::blade(b2[j]), gamma);
    for (const auto& [k, c] : img.terms()) m(k, j) = c;
  }
  return {"L2", nullspace(m)};
}

const std::vector<Form>& stabilizer_basis(GKind k) {
  static const std::vector<Form> psu3 = [] {
    std::vector<Form> out;
    for (int i = 1; i <= 8; ++i) out.push_back(interior(i, canonical_rho()));
    return out;
  }();
  static const std::vector<Form> sp = [] {
    std::vector<Form> out;
    auto s = stabilizer(canonical_omega());
    for (std::size_t c = 0; c < s.dim(); ++c) out.push_back(from_coords(s.basis.column(c), 2));
    return out;
  }();
  return k == GKind::psu3 ? psu3 : sp;
}

std::string to_string(Projector p) {
  switch (p) {
  case Projector::psu3_8: return "psu3_8";
  case Projector::psu3_20: return "psu3_20";
  case Projector::psu3_10p: return "psu3_10+";
  case Projector::psu3_10m: return "psu3_10-";
  case Projector::sp_3: return "sp_3";
  case Projector::sp_10: return "sp_10";
  case Projector::sp_15: return "sp_15";
  }
  return "?";
}

const Matrix<Scalar>& c_operator(int k) {
  static const std::array<Matrix<Scalar>, 8> ops = [] {
    std::array<Form, 8> c1;
    for (int i = 1; i <= 8; ++i) c1[i - 1] = interior(i, canonical_rho());
    auto apply = [&](const Form& a) {
      Form out;
      for (const auto& [b, v] : a.terms()) {
        auto ix = blade_indices(b);
        for (std::size_t p = 0; p < ix.size(); ++p) {
          Blade left = 0, right = 0;
          for (std::size_t t = 0; t < ix.size(); ++t) {
            if (t < p) left |= Blade(1) << (ix[t] - 1);
            if (t > p) right |= Blade(1) << (ix[t] - 1);
          }
          Form term = wedge(wedge(Form::blade(left), c1[ix[p] - 1]), Form::blade(right));
          out += (p % 2 ? -v : v) * term;
        }
      }
      return out;
    };
    std::array<Matrix<Scalar>, 8> m;
    for (int p = 0; p < 8; ++p) m[p] = operator_matrix<Scalar>(apply, p, p + 1);
    return m;
  }();
  if (k < 0 || k > 7) throw std::out_of_range("c_operator: grade out of range");
  return ops[k];
}

Form c_apply(int k, const Form& alpha) { return apply_matrix(c_operator(k), alpha, k, k + 1); }

Form c_adjoint_apply(int k, const Form& alpha) {
  return apply_matrix(c_operator(k).transpose(), alpha, k + 1, k);
}

std::array<int, 9> betti() {
  std::array<int, 9> rk{};
  for (int p = 0; p < 8; ++p) rk[p] = int(rank(c_operator(p)));
  std::array<int, 9> b{};
  for (int p = 0; p <= 8; ++p) b[p] = int(binomial8(p)) - rk[p] - (p ? rk[p - 1] : 0);
  return b;
}

const Matrix<Scalar>& p3_matrix() {
  static const Matrix<Scalar> m = c_operator(3).transpose() * c_operator(3);
  return m;
}

Form p3(const Form& alpha) { return apply_matrix(p3_matrix(), alpha, 3, 3); }

Subspace<Scalar> lambda4_o() { return {"L4", nullspace(c_operator(4))}; }
Subspace<Scalar> lambda4_i() { return span_of("L4", c_operator(4).transpose()); }

const Matrix<Scalar>& omega_contraction() {
  static const Matrix<Scalar> m = operator_matrix<Scalar>(
      [](const Form& a) { return contract(a, canonical_omega()); }, 2, 2);
  return m;
}

namespace {

struct ProjectorTables {
  std::array<Matrix<CScalar>, 7> complex;
  std::array<Matrix<Scalar>, 7> real;

  ProjectorTables() {
    const auto id = Matrix<Scalar>::identity(28);
    const auto& c2 = c_operator(2);
    const Matrix<Scalar> ctc = c2.transpose() * c2;
    Matrix<Scalar> p20 = Scalar(make_rational(4, 3)) * ctc;
    real[int(Projector::psu3_20)] = p20;
    real[int(Projector::psu3_8)] = id - p20;

    auto hodge6 = operator_matrix<Scalar>([](const Form& a) { return hodge_star(a); }, 6, 2);
    auto wedge3 = operator_matrix<Scalar>([](const Form& a) { return wedge(a, canonical_rho()); }, 3, 6);
    Matrix<CScalar> twist = convert<CScalar>(Matrix<Scalar>(hodge6 * wedge3 * c2));
    Matrix<CScalar> base = convert<CScalar>(Matrix<Scalar>(Scalar(make_rational(2, 3)) * ctc));
    const CScalar k(Scalar(), Scalar(0, make_rational(2, 3)));  // (2 sqrt3 / 3) i
    complex[int(Projector::psu3_10p)] = base - k * twist;
    complex[int(Projector::psu3_10m)] = base + k * twist;

    const auto& c = omega_contraction();
    const Matrix<Scalar> cc = c * c;
    real[int(Projector::sp_3)] = Scalar(make_rational(1, 32)) * (Scalar(-3) * id + Scalar(2) * c + cc);
    real[int(Projector::sp_10)] = Scalar(make_rational(1, 32)) * (Scalar(5) * id - Scalar(6) * c + cc);
    real[int(Projector::sp_15)] = Scalar(make_rational(1, 16)) * (Scalar(15) * id + Scalar(2) * c - cc);

    for (int p = 0; p < 7; ++p)
      if (p != int(Projector::psu3_10p) && p != int(Projector::psu3_10m)) complex[p] = convert<CScalar>(real[p]);
  }
};

const ProjectorTables& projector_tables() {
  static const ProjectorTables t;
  return t;
}

} // namespace

const Matrix<CScalar>& projector2(Projector p) { return projector_tables().complex[int(p)]; }

const Matrix<Scalar>& real_projector2(Projector p) {
  if (p == Projector::psu3_10p || p == Projector::psu3_10m)
    throw std::invalid_argument("projector " + to_string(p) + " is not real");
  return projector_tables().real[int(p)];
}

CForm project2(const CForm& alpha, Projector p) { return apply_matrix(projector2(p), alpha, 2, 2); }

Form project2(const Form& alpha, Projector p) { return apply_matrix(real_projector2(p), alpha, 2, 2); }

namespace {

Matrix<Scalar> rows8(const std::array<std::array<Scalar, 8>, 8>& r) {
  Matrix<Scalar> m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = r[i][j];
  return m;
}

} // namespace

SpinorValuedForm<Scalar> sigma_canonical(GKind k, Chirality label) {
  const Scalar o, h(make_rational(1, 2)), q(make_rational(1, 4)), r(0, make_rational(1, 4));
  if (k == GKind::sp1sp2) {
    if (label == Chirality::minus) throw std::invalid_argument("sigma_canonical: only the plus map is available for SP1SP2");
    Matrix<Scalar> m(8, 8);
    for (int i = 0; i < 8; ++i) m(i, i) = Scalar(i >= 1 && i <= 3 ? -1 : 1);
    return {Chirality::minus, m};
  }
  if (label == Chirality::plus) {
    return {Chirality::minus, rows8({{{o, -h, o, q, -r, -q, r, h},
                                      {-h, o, -h, -r, -q, -r, -q, o},
                                      {o, h, o, q, -r, q, -r, h},
                                      {-h, o, h, r, q, -r, -q, o},
                                      {o, -h, o, -q, r, q, -r, h},
                                      {h, o, h, -r, -q, -r, -q, o},
                                      {o, -h, o, q, -r, q, -r, -h},
                                      {-h, o, h, -r, -q, r, q, o}}})};
  }
  return {Chirality::plus, rows8({{{-h, o, h, r, -q, -r, q, o},
                                   {o, -h, o, q, r, q, r, h},
                                   {-h, o, -h, -r, q, -r, q, o},
                                   {o, h, o, q, r, -q, -r, h},
                                   {-h, o, h, -r, q, r, -q, o},
                                   {o, h, o, q, r, q, r, -h},
                                   {h, o, h, -r, q, -r, q, o},
                                   {o, h, o, -q, -r, q, r, h}}})};
}

namespace {

CForm cvec(std::initializer_list<std::pair<int, CScalar>> terms) {
  CForm out;
  for (const auto& [i, c] : terms) out.add_term(Blade(1) << (i - 1), c);
  return out;
}

CScalar ci(const Scalar& s) { return CScalar(Scalar(), s); }

bool eigen_relations_hold(const RootData& d) {
  for (const auto& w : d.weights)
    for (std::size_t t = 0; t < d.torus.size(); ++t)
      if (act2(to_complex(d.torus[t]), w.vector) != w.weight[t] * w.vector) return false;
  return true;
}

Form bracket(const BracketTable& b, const Form& x, const Form& y) {
  Form out;
  for (const auto& [kx, vx] : x.terms())
    for (const auto& [ky, vy] : y.terms()) {
      auto c = b.bracket(std::countr_zero(kx) + 1, std::countr_zero(ky) + 1);
      for (int k = 0; k < 8; ++k) out.add_term(Blade(1) << k, vx * vy * c[k]);
    }
  return out;
}

RootData make_psu3_roots() {
  RootData d;
  d.kind = GKind::psu3;
  const Form& rho = canonical_rho();
  d.torus = {interior(3, rho), interior(8, rho)};
  const Scalar q(make_rational(1, 4)), r(0, make_rational(1, 4)), h(make_rational(1, 2));
  const CScalar i(Scalar(), Scalar(1));
  d.weights = {
      {"alpha1", cvec({{4, CScalar(1)}, {5, -i}}), {ci(q), ci(r)}},
      {"alpha2", cvec({{6, CScalar(1)}, {7, i}}), {ci(q), ci(-r)}},
      {"alpha1+alpha2", cvec({{1, CScalar(1)}, {2, -i}}), {ci(h), CScalar()}},
  };
  auto e = [](int k, int s = 1) { return Form::blade(Blade(1) << (k - 1), Scalar(s)); };
  d.e = {e(5), e(6, -1), e(1)};
  d.f = {e(4, -1), e(7), e(2)};
  d.lambda = {q * e(3) + r * e(8), q * e(3) - r * e(8), h * e(3)};

  bool ok = eigen_relations_hold(d);
  BracketTable b = bracket_from_form(rho);
  for (int t = 0; t < 3 && ok; ++t) {
    ok = ok && inner(d.lambda[t], d.lambda[t]) == Scalar(make_rational(1, 4));
    ok = ok && bracket(b, d.e[t], d.f[t]) == d.lambda[t];
    for (int tv : {3, 8}) {
      Form T = e(tv);
      Scalar l = inner(d.lambda[t], T);
      ok = ok && bracket(b, T, d.e[t]) == l * d.f[t];
      ok = ok && bracket(b, T, d.f[t]) == -l * d.e[t];
    }
  }
  d.relations_hold = ok;
  return d;
}

RootData make_sp_roots() {
  RootData d;
  d.kind = GKind::sp1sp2;
  auto f = [](std::initializer_list<std::pair<const char*, int>> terms, Scalar s) {
    Form out;
    for (auto [name, v] : terms) out.add_term(parse_blade(name), s * Scalar(v));
    return out;
  };
  const Scalar one(1), h(make_rational(1, 2));
  d.torus = {f({{"e12", 1}, {"e34", -1}, {"e56", 1}, {"e78", -1}}, h),
             f({{"e12", 1}, {"e34", 1}, {"e56", 1}, {"e78", 1}}, one),
             f({{"e12", 1}, {"e34", 1}, {"e56", -1}, {"e78", -1}}, one)};
  const CScalar i(Scalar(), Scalar(1));
  const CScalar ih = ci(h);
  d.weights = {
      {"(alpha+beta1)/2", cvec({{5, CScalar(1)}, {6, -i}}), {ih, i, -i}},
      {"(alpha-beta1)/2", cvec({{7, CScalar(1)}, {8, i}}), {ih, -i, i}},
      {"(alpha+beta1)/2+beta2", cvec({{1, CScalar(1)}, {2, -i}}), {ih, i, i}},
      {"(alpha-beta1)/2-beta2", cvec({{3, CScalar(1)}, {4, i}}), {ih, -i, -i}},
  };
  bool ok = eigen_relations_hold(d);
  // the torus lies in the stabilizer of Omega and is abelian
  for (const auto& t : d.torus) ok = ok && act2(t, canonical_omega()).is_zero();
  d.relations_hold = ok;
  return d;
}

} // namespace

const RootData& roots(GKind k) {
  static const RootData psu3 = make_psu3_roots();
  static const RootData sp = make_sp_roots();
  return k == GKind::psu3 ? psu3 : sp;
}

namespace {

const Form& calibration_form(GKind k) {
  static const Form two_rho = Scalar(2) * canonical_rho();
  static const Form omega6 = Scalar(make_rational(1, 6)) * canonical_omega();
  return k == GKind::psu3 ? two_rho : omega6;
}

std::size_t calibration_degree(GKind k) { return k == GKind::psu3 ? 3 : 4; }

double det_small(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    if (m[p][c] == 0) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

} // namespace

Scalar calibration(GKind k, const std::vector<Vector8>& plane) {
  if (plane.size() != calibration_degree(k)) throw std::invalid_argument("calibration: wrong number of vectors");
  for (std::size_t a = 0; a < plane.size(); ++a)
    for (std::size_t b = 0; b < plane.size(); ++b) {
      Scalar dot;
      for (int t = 0; t < 8; ++t) dot += plane[a][t] * plane[b][t];
      if (dot != Scalar(a == b ? 1 : 0)) throw std::invalid_argument("calibration: vectors are not orthonormal");
    }
  Form xi = Form::blade(0);
  for (const auto& v : plane) {
    Form x;
    for (int t = 0; t < 8; ++t) x.add_term(Blade(1) << t, v[t]);
    xi = wedge(xi, x);
  }
  return inner(calibration_form(k), xi);
}

double calibration_sample(GKind k, int n, std::uint64_t seed) {
  const std::size_t deg = calibration_degree(k);
  std::vector<std::pair<std::vector<int>, double>> terms;
  for (const auto& [b, c] : calibration_form(k).terms()) {
    std::vector<int> ix;
    for (int i : blade_indices(b)) ix.push_back(i - 1);
    terms.emplace_back(ix, to_float(c));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double best = -1e300;
  for (int s = 0; s < n; ++s) {
    std::vector<std::array<double, 8>> v(deg);
    for (std::size_t a = 0; a < deg; ++a) {
      for (auto& x : v[a]) x = normal(rng);
      for (std::size_t b = 0; b < a; ++b) {
        double d = 0;
        for (int t = 0; t < 8; ++t) d += v[a][t] * v[b][t];
        for (int t = 0; t < 8; ++t) v[a][t] -= d * v[b][t];
      }
      double nrm = 0;
      for (double x : v[a]) nrm += x * x;
      nrm = std::sqrt(nrm);
      for (auto& x : v[a]) x /= nrm;
    }
    double val = 0;
    for (const auto& [ix, c] : terms) {
      std::vector<std::vector<double>> minor(deg, std::vector<double>(deg));
      for (std::size_t r = 0; r < deg; ++r)
        for (std::size_t a = 0; a < deg; ++a) minor[r][a] = v[a][ix[r]];
      val += c * det_small(minor);
    }
    best = std::max(best, val);
  }
  return best;
}

} // namespace triality

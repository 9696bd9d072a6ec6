#include "triality/frames.hpp"

#include <stdexcept>

namespace triality {

std::size_t FrameAlgebra::index(int i, int j, int k) {
  if (i < 1 || i > 8 || j < 1 || j > 8 || k < 1 || k > 8) throw std::out_of_range("frame index out of range");
  return std::size_t(((i - 1) * 8 + (j - 1)) * 8 + (k - 1));
}

void FrameAlgebra::set(int i, int j, int k, const Scalar& v) {
  if (i == j) {
    if (!v.is_zero()) throw std::invalid_argument("[e_i, e_i] must vanish");
    return;
  }
  c_[index(i, j, k)] = v;
  c_[index(j, i, k)] = -v;
}

Form Connection::connection_form(int i) const {
  Form a;
  for (int j = 1; j <= 8; ++j)
    for (int k = j + 1; k <= 8; ++k) a.add_term(make_blade({j, k}), (*this)(i, j, k));
  return a;
}

Form coframe_d(const Form& alpha, const FrameAlgebra& f) {
  std::array<Form, 8> de;
  for (int k = 1; k <= 8; ++k)
    for (int i = 1; i <= 8; ++i)
      for (int j = i + 1; j <= 8; ++j) de[k - 1].add_term(make_blade({i, j}), -f.c(i, j, k));
  Form out;
  for (const auto& [b, v] : alpha.terms()) {
    auto ix = blade_indices(b);
    for (std::size_t p = 0; p < ix.size(); ++p) {
      Blade left = 0, right = 0;
      for (std::size_t t = 0; t < ix.size(); ++t) {
        if (t < p) left |= Blade(1) << (ix[t] - 1);
        if (t > p) right |= Blade(1) << (ix[t] - 1);
      }
      Form term = wedge(wedge(Form::blade(left), de[ix[p] - 1]), Form::blade(right));
      out += (p % 2 ? -v : v) * term;
    }
  }
  return out;
}

Form codifferential(const Form& alpha, const FrameAlgebra& f) { return -hodge_star(coframe_d(hodge_star(alpha), f)); }

Connection levi_civita(const FrameAlgebra& f) {
  Connection g;
  const Scalar h(make_rational(1, 2));
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k) g(i, j, k) = h * (f.c(i, j, k) + f.c(k, i, j) + f.c(k, j, i));
  return g;
}

std::array<Form, 8> nabla_form(const Form& alpha, const FrameAlgebra& f) {
  Connection g = levi_civita(f);
  std::array<Form, 8> out;
  for (int i = 1; i <= 8; ++i) out[i - 1] = act2(g.connection_form(i), alpha);
  return out;
}

Matrix<Scalar> ricci(const FrameAlgebra& f) {
  if (!f.constant_structure()) throw std::domain_error("Ricci requires constant structure coefficients");
  Connection g = levi_civita(f);
  // m[i](k, j) = gamma(i, j, k): the matrix of nabla_{e_i}
  std::array<Matrix<Scalar>, 8> m;
  for (int i = 1; i <= 8; ++i) {
    m[i - 1] = Matrix<Scalar>(8, 8);
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k) m[i - 1](k - 1, j - 1) = g(i, j, k);
  }
  auto curvature = [&](int a, int b) {
    Matrix<Scalar> r = m[a - 1] * m[b - 1] - m[b - 1] * m[a - 1];
    for (int k = 1; k <= 8; ++k)
      if (!f.c(a, b, k).is_zero()) r -= f.c(a, b, k) * m[k - 1];
    return r;
  };
  Matrix<Scalar> ric(8, 8);
  for (int a = 1; a <= 8; ++a)
    for (int j = 1; j <= 8; ++j) {
      Matrix<Scalar> r = curvature(j, a);
      for (int b = 1; b <= 8; ++b) ric(a - 1, b - 1) += r(j - 1, b - 1);
    }
  return ric;
}

Harmonicity harmonic_check(const FrameAlgebra& f, GKind k) {
  const Form& g = structure_form(k);
  return {coframe_d(g, f).is_zero(), coframe_d(hodge_star(g), f).is_zero()};
}

namespace {

struct TorsionSystem {
  Matrix<Scalar> perp;  // basis of g-perp, columns in basis(2) coordinates
  Matrix<Scalar> image; // columns: pull2(perp_j, gamma)
  int grade;
};

const TorsionSystem& torsion_system(GKind k) {
  auto build = [](GKind kind) {
    TorsionSystem s;
    s.perp = column_basis(real_projector2(perp_projector(kind)));
    s.grade = kind == GKind::psu3 ? 3 : 4;
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t j = 0; j < s.perp.cols(); ++j)
      cols.push_back(to_coords(pull2(from_coords(s.perp.column(j), 2), structure_form(kind)), s.grade));
    s.image = Matrix<Scalar>::from_columns(cols, binomial8(s.grade));
    return s;
  };
  static const TorsionSystem psu3 = build(GKind::psu3);
  static const TorsionSystem sp = build(GKind::sp1sp2);
  return k == GKind::psu3 ? psu3 : sp;
}

} // namespace

RTorsion intrinsic_torsion(const FrameAlgebra& f, GKind k) {
  const auto& sys = torsion_system(k);
  const auto nabla = nabla_form(structure_form(k), f);
  RTorsion t{k, {}};
  for (int i = 0; i < 8; ++i) {
    if (nabla[i].is_zero()) continue;
    auto x = solve(sys.image, to_coords(nabla[i], sys.grade));
    if (!x) throw std::domain_error("nabla gamma not in torsion image");
    t.slots[i] = from_coords(sys.perp * *x, 2);
  }
  return t;
}

Spinor<Scalar> ricci_constraint(const Matrix<Scalar>& ric, GKind k, Chirality label) {
  const auto sigma = sigma_canonical(k, label);
  const Chirality out = opposite(sigma.half);
  std::vector<Scalar> psi(8);
  for (int i = 0; i < 8; ++i) {
    auto blk = chiral_block(kappa(i + 1), sigma.half, out);
    for (int j = 0; j < 8; ++j) {
      if (ric(i, j).is_zero()) continue;
      auto img = blk * sigma.columns.column(j);
      for (int r = 0; r < 8; ++r) psi[r] += ric(i, j) * img[r];
    }
  }
  return {out, psi};
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {"su3_biinvariant", "psu3_nilmanifold", "salamon_sp1sp2",
                                               "gibbons_hawking"};
  return ids;
}

namespace {

Connection table(std::initializer_list<std::tuple<int, int, int, Scalar>> entries) {
  // (j, i, k, v): nabla e_j contains v e_i (x) e_k
  Connection c;
  for (const auto& [j, i, k, v] : entries) c(i, j, k) = v;
  return c;
}

std::array<Scalar, 8> diag(std::initializer_list<Scalar> v) {
  std::array<Scalar, 8> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

} // namespace

CatalogEntry catalog(std::string_view id, std::optional<Scalar> x0) {
  const Scalar h(make_rational(1, 2)), q(make_rational(1, 4)), z;
  if (id == "su3_biinvariant") {
    FrameAlgebra f("su3_biinvariant");
    for (const auto& [b, v] : canonical_rho().terms()) {
      auto ix = blade_indices(b);
      for (auto [i, j, k] : {std::array{ix[0], ix[1], ix[2]}, std::array{ix[1], ix[2], ix[0]},
                             std::array{ix[2], ix[0], ix[1]}})
        f.set(i, j, k, v);
    }
    Expectations e;
    Scalar r(make_rational(3, 16));
    e.ricci_diag = diag({r, r, r, r, r, r, r, r});
    e.harmonic = Harmonicity{true, true};
    e.nabla_gamma = std::array<Form, 8>{};
    e.orbit = "L1_psu3";
    return {std::string(id), f, GKind::psu3, e};
  }
  if (id == "psu3_nilmanifold") {
    FrameAlgebra f("psu3_nilmanifold");
    f.set(4, 7, 8, Scalar(-1));
    f.set(5, 6, 8, Scalar(-1));
    Expectations e;
    e.ricci_diag = diag({z, z, z, -h, -h, -h, -h, z});
    e.harmonic = Harmonicity{true, true};
    e.nabla_table = table({{4, 7, 8, -h}, {4, 8, 7, -h}, {5, 6, 8, -h}, {5, 8, 6, -h}, {6, 5, 8, h}, {6, 8, 5, h},
                           {7, 4, 8, h},  {7, 8, 4, h},  {8, 4, 7, -h}, {8, 7, 4, h},  {8, 5, 6, -h}, {8, 6, 5, h}});
    e.orbit = "L1_psu3";
    return {std::string(id), f, GKind::psu3, e};
  }
  if (id == "salamon_sp1sp2") {
    FrameAlgebra f("salamon_sp1sp2");
    f.set(1, 5, 4, Scalar(-1));
    f.set(1, 3, 6, Scalar(-1));
    Expectations e;
    e.ricci_diag = diag({-h, z, -q, z, -q, z, z, z});
    e.nabla_table = table({{1, 3, 6, -h}, {1, 4, 5, -h}, {1, 5, 4, -h}, {1, 6, 3, -h},
                           {3, 1, 6, h},  {3, 6, 1, h},  {5, 1, 4, h},  {5, 4, 1, h}});
    return {std::string(id), f, GKind::sp1sp2, e};
  }
  if (id == "gibbons_hawking") {
    Scalar x = x0.value_or(Scalar(1));
    if (x.sign() <= 0) throw std::invalid_argument("gibbons_hawking: x0 must be positive");
    auto s = sqrt(x * x * x);
    if (!s) throw std::invalid_argument("gibbons_hawking: sqrt(x0^3) is not in Q(sqrt3)");
    const Scalar k = (Scalar(2) * *s).inverse();
    FrameAlgebra f("gibbons_hawking", false, "x = " + format_scalar(x));
    f.set(4, 6, 4, -k);
    f.set(5, 6, 5, k);
    f.set(4, 7, 5, Scalar(2) * k);
    f.set(6, 7, 7, k);
    Expectations e;
    e.harmonic = Harmonicity{true, true};
    // -(1/(8 sqrt3)) (1/sqrt(x^3)) (e4 (x) w1+ ^ e8 + e5 (x) w2+ ^ e8)
    const Scalar coeff = -Scalar(0, make_rational(1, 24)) * s->inverse();
    Form e8 = Form::blade("e8");
    Form w1 = Form::blade("e47") + Form::blade("e56");
    Form w2 = Form::blade("e46") - Form::blade("e57");
    std::array<Form, 8> ng{};
    ng[3] = coeff * wedge(w1, e8);
    ng[4] = coeff * wedge(w2, e8);
    e.nabla_gamma = ng;
    e.orbit = "L1_psu3";
    return {std::string(id), f, GKind::psu3, e};
  }
  throw std::invalid_argument("unknown catalog id: " + std::string(id));
}

} // namespace triality

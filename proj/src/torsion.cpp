#include "triality/torsion.hpp"

#include <string>

namespace triality {

Projector perp_projector(GKind k) { return k == GKind::psu3 ? Projector::psu3_20 : Projector::sp_15; }

RTorsion natural_embedding(const Form& alpha, GKind k) {
  if (!alpha.is_zero() && alpha.homogeneous_grade() != 3) throw std::invalid_argument("embedding: expected a 3-form");
  RTorsion t{k, {}};
  for (const auto& [b, v] : alpha.terms()) {
    auto ix = blade_indices(b);
    const int x = ix[0], y = ix[1], z = ix[2];
    t.slots[x - 1].add_term(make_blade({y, z}), v);
    t.slots[y - 1].add_term(make_blade({x, z}), -v);
    t.slots[z - 1].add_term(make_blade({x, y}), v);
  }
  return t;
}

RTorsion embed3(const Form& alpha, GKind k) { return project_perp(natural_embedding(alpha, k)); }

RTorsion iota_rho_perp(const Form& alpha) {
  const Form& rho = canonical_rho();
  return embed3(alpha - inner(alpha, rho) * rho, GKind::psu3);
}

Form L_op(const Form& tau) {
  const RTorsion t = embed3(tau, GKind::sp1sp2);
  const auto d = Dhat(t, Chirality::plus);
  const auto sigma = sigma_canonical(GKind::sp1sp2, Chirality::plus);
  if (d.half != Chirality::plus || sigma.half != Chirality::minus)
    throw std::logic_error("L_op: unexpected spinor halves");
  Form out;
  for (Blade b : basis(3)) {
    const auto& p = kappa_blade(b);
    Scalar val;
    // q(D(Z), e_I . sigma(Z)) summed over Z
    for (int z = 0; z < 8; ++z)
      for (int c = 0; c < 8; ++c) {
        const Scalar& s = sigma.columns(c, z);
        if (s.is_zero()) continue;
        const int row = p.row[8 + c];
        const Scalar& dv = d.columns(row, z);
        if (dv.is_zero()) continue;
        val += p.sign[8 + c] > 0 ? s * dv : -(s * dv);
      }
    out.add_term(b, val);
  }
  return out;
}

const Matrix<Scalar>& L_matrix() {
  static const Matrix<Scalar> m = operator_matrix<Scalar>(L_op, 3, 3);
  return m;
}

std::vector<Scalar> torsion_coords(const RTorsion& t) {
  std::vector<Scalar> v(8 * 28);
  for (int i = 0; i < 8; ++i) {
    auto c = to_coords(t.slots[i], 2);
    for (int j = 0; j < 28; ++j) v[i * 28 + j] = c[j];
  }
  return v;
}

RTorsion torsion_from_coords(GKind k, const std::vector<Scalar>& v) {
  if (v.size() != 8 * 28) throw std::invalid_argument("torsion_from_coords: expected 224 coordinates");
  RTorsion t{k, {}};
  for (int i = 0; i < 8; ++i)
    t.slots[i] = from_coords(std::vector<Scalar>(v.begin() + i * 28, v.begin() + (i + 1) * 28), 2);
  return t;
}

namespace {

std::vector<Scalar> flatten(const Matrix<Scalar>& m) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

KernelAnalysis analyse(GKind k) {
  const Matrix<Scalar> perp = column_basis(real_projector2(perp_projector(k)));
  const std::size_t m = perp.cols();
  const int gd = k == GKind::psu3 ? 4 : 5;
  const int gs = k == GKind::psu3 ? 2 : 3;

  std::vector<std::vector<Scalar>> dom, dcols, dscols, dpcols, dmcols;
  for (int i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      RTorsion t{k, {}};
      t.slots[i] = from_coords(perp.column(j), 2);
      dom.push_back(torsion_coords(t));
      dcols.push_back(to_coords(dhat(t), gd));
      dscols.push_back(to_coords(dstar_hat(t), gs));
      dpcols.push_back(flatten(Dhat(t, Chirality::plus).columns));
      if (k == GKind::psu3) dmcols.push_back(flatten(Dhat(t, Chirality::minus).columns));
    }
  const auto domain = Matrix<Scalar>::from_columns(dom, 8 * 28);
  const auto d = Matrix<Scalar>::from_columns(dcols, binomial8(gd));
  const auto ds = Matrix<Scalar>::from_columns(dscols, binomial8(gs));
  const auto dp = Matrix<Scalar>::from_columns(dpcols, 64);

  KernelAnalysis r;
  r.kind = k;
  r.domain_dim = dom.size();
  r.rank_d = rank(d);
  r.rank_dstar = rank(ds);
  r.rank_Dplus = rank(dp);
  auto lift = [&](const Matrix<Scalar>& kernel) { return Subspace<Scalar>{"L1xL2", domain * kernel}; };
  r.ker_d = lift(nullspace(d));
  r.ker_Dplus = lift(nullspace(dp));
  if (k == GKind::psu3) {
    const auto dm = Matrix<Scalar>::from_columns(dmcols, 64);
    r.rank_Dminus = rank(dm);
    r.ker_d_dstar = lift(nullspace(vstack(d, ds)));
    r.ker_D = lift(nullspace(vstack(dp, dm)));
    r.kernels_equal = r.ker_d_dstar->equals(*r.ker_D);
  } else {
    r.kernels_equal = r.ker_d.equals(r.ker_Dplus);
  }
  return r;
}

} // namespace

const KernelAnalysis& kernel_analysis(GKind k) {
  static const KernelAnalysis psu3 = analyse(GKind::psu3);
  static const KernelAnalysis sp = analyse(GKind::sp1sp2);
  return k == GKind::psu3 ? psu3 : sp;
}

std::optional<CScalar> proportionality(const Matrix<CScalar>& y, const Matrix<CScalar>& x) {
  if (y.rows() != x.rows() || y.cols() != x.cols()) return std::nullopt;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) {
        CScalar z = y(i, j) / x(i, j);
        if (y == z * x) return z;
        return std::nullopt;
      }
  return std::nullopt;
}

namespace {

Matrix<CScalar> column_of(const Spinor<CScalar>& s) {
  Matrix<CScalar> m(8, 1);
  for (int i = 0; i < 8; ++i) m(i, 0) = s.coords[i];
  return m;
}

CScalar require(std::optional<CScalar> z, const char* what) {
  if (!z) throw std::domain_error(std::string("z_constants: vectors are not proportional for ") + what);
  return *z;
}

} // namespace

ZConstants z_constants() {
  const auto krho = convert<CScalar>(kappa_form(canonical_rho()));
  const auto a_minus_plus = chiral_block(krho, Chirality::minus, Chirality::plus);
  const auto a_plus_minus = chiral_block(krho, Chirality::plus, Chirality::minus);

  auto tau0 = [](Projector p) {
    CTorsion t{GKind::psu3, {}};
    t.slots[0] = project2(CForm::blade("e18", CScalar(6)), p);
    t.slots[1] = project2(CForm::blade("e28", CScalar(-6)), p);
    return t;
  };
  auto ratio22 = [&](const CTorsion& v, const char* what) {
    auto dp = Dhat(v, Chirality::plus);
    auto dm = Dhat(v, Chirality::minus);
    return require(proportionality(dm.columns, a_plus_minus * dp.columns), what);
  };

  ZConstants z;
  z.z22 = ratio22(tau0(Projector::psu3_10p), "(2,2)");
  z.z22_conjugate = ratio22(tau0(Projector::psu3_10m), "conjugate (2,2)");

  CTorsion w{GKind::psu3, {}};
  w.slots[0] = project2(CForm::blade("e18", CScalar(Scalar(), Scalar(0, 2))), Projector::psu3_10p);
  auto lhs = column_of(mu(Dhat(w, Chirality::minus)));
  auto rhs = column_of(mu(Dhat(w, Chirality::plus)));
  z.z11 = require(proportionality(lhs, a_minus_plus * rhs), "(1,1)");
  return z;
}

} // namespace triality

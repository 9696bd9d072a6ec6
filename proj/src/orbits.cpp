#include "triality/orbits.hpp"

#include <stdexcept>

namespace triality {

std::size_t BracketTable::index(int i, int j, int k) {
  if (i < 1 || i > 8 || j < 1 || j > 8 || k < 1 || k > 8) throw std::out_of_range("bracket index out of range");
  return std::size_t(((i - 1) * 8 + (j - 1)) * 8 + (k - 1));
}

void BracketTable::set(int i, int j, int k, const Scalar& v) {
  if (i == j || j == k || i == k) {
    if (!v.is_zero()) throw std::invalid_argument("bracket coefficient with repeated index must vanish");
    return;
  }
  c_[index(i, j, k)] = v;
  c_[index(j, k, i)] = v;
  c_[index(k, i, j)] = v;
  c_[index(j, i, k)] = -v;
  c_[index(i, k, j)] = -v;
  c_[index(k, j, i)] = -v;
}

std::array<Scalar, 8> BracketTable::bracket(int i, int j) const {
  std::array<Scalar, 8> out;
  for (int k = 1; k <= 8; ++k) out[k - 1] = (*this)(i, j, k);
  return out;
}

bool BracketTable::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar form_value(const Form& rho, int i, int j, int k) {
  if (i == j || j == k || i == k) return {};
  Blade b = make_blade({i, j, k});
  Scalar v = rho.coeff(b);
  if (v.is_zero()) return v;
  // parity of the permutation sorting (i, j, k)
  int inversions = (i > j) + (i > k) + (j > k);
  return inversions % 2 ? -v : v;
}

Form jac(const Form& rho, const Form& tau) {
  if (rho.homogeneous_grade().value_or(3) != 3 || tau.homogeneous_grade().value_or(3) != 3)
    throw std::invalid_argument("jac: expected 3-forms");
  Form out;
  const Scalar sixth(make_rational(1, 6));
  for (Blade b : basis(4)) {
    auto ix = blade_indices(b);
    int i = ix[0], j = ix[1], l = ix[2], m = ix[3];
    Scalar s;
    for (int k = 1; k <= 8; ++k) {
      s += form_value(rho, i, j, k) * form_value(tau, l, m, k);
      s += form_value(rho, i, l, k) * form_value(tau, m, j, k);
      s += form_value(rho, i, m, k) * form_value(tau, j, l, k);
      s += form_value(rho, j, l, k) * form_value(tau, i, m, k);
      s += form_value(rho, j, m, k) * form_value(tau, l, i, k);
      s += form_value(rho, l, m, k) * form_value(tau, i, j, k);
    }
    out.add_term(b, sixth * s);
  }
  return out;
}

Matrix<Scalar> gamma(const Form& rho, const Form& tau, Chirality c) {
  if (rho.homogeneous_grade().value_or(3) != 3 || tau.homogeneous_grade().value_or(3) != 3)
    throw std::invalid_argument("gamma: expected 3-forms");
  Matrix<Scalar> p = kappa_form(rho) * kappa_form(tau);
  return chiral_block(p, c, c);
}

bool is_supersymmetric(const Form& rho) {
  if (rho.is_zero()) return false;
  auto a = form_to_map(rho).matrix;
  return a.transpose() * a == Matrix<Scalar>::identity(8);
}

BracketTable bracket_from_form(const Form& rho) {
  if (rho.homogeneous_grade().value_or(3) != 3) throw std::invalid_argument("bracket_from_form: expected a 3-form");
  BracketTable b;
  for (const auto& [k, v] : rho.terms()) {
    auto ix = blade_indices(k);
    b.set(ix[0], ix[1], ix[2], v);
  }
  return b;
}

Form form_from_bracket(const BracketTable& b) {
  Form f;
  for (Blade k : basis(3)) {
    auto ix = blade_indices(k);
    f.add_term(k, b(ix[0], ix[1], ix[2]));
  }
  if (f.is_zero()) throw std::invalid_argument("form_from_bracket: zero bracket cannot be normalized");
  auto n = sqrt(inner(f, f));
  if (!n) throw std::domain_error("form_from_bracket: norm is not in Q(sqrt3)");
  return f * n->inverse();
}

std::optional<std::array<int, 3>> jacobi_witness(const BracketTable& b) {
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k)
        for (int m = 1; m <= 8; ++m) {
          // component m of [[i,j],k] + [[j,k],i] + [[k,i],j]
          Scalar s;
          for (int l = 1; l <= 8; ++l) {
            s += b(i, j, l) * b(l, k, m);
            s += b(j, k, l) * b(l, i, m);
            s += b(k, i, l) * b(l, j, m);
          }
          if (!s.is_zero()) return std::array<int, 3>{i, j, k};
        }
  return std::nullopt;
}

namespace {

// (ad e_i)(k, j) = c(i, j, k)
Matrix<Scalar> ad(const BracketTable& b, int i) {
  Matrix<Scalar> m(8, 8);
  for (int j = 1; j <= 8; ++j)
    for (int k = 1; k <= 8; ++k) m(k - 1, j - 1) = b(i, j, k);
  return m;
}

} // namespace

LieClass lie_classify(const BracketTable& b) {
  if (!satisfies_jacobi(b)) throw std::domain_error("not a Lie bracket");
  // center: x with sum_i x_i c(i, j, k) = 0 for all j, k
  Matrix<Scalar> z(64, 8);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k) z((j - 1) * 8 + (k - 1), i - 1) = b(i, j, k);
  int center = 8 - int(rank(z));

  Matrix<Scalar> brackets(8, 28);
  int col = 0;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j, ++col)
      for (int k = 1; k <= 8; ++k) brackets(k - 1, col) = b(i, j, k);
  Matrix<Scalar> derived = column_basis(brackets);
  int dd = int(derived.cols());

  bool reductive = center + dd == 8;
  if (reductive && dd > 0) {
    std::array<Matrix<Scalar>, 8> ads;
    for (int i = 1; i <= 8; ++i) ads[i - 1] = ad(b, i);
    auto ad_of = [&](std::size_t c) {
      Matrix<Scalar> m(8, 8);
      for (int i = 0; i < 8; ++i)
        if (!derived(i, c).is_zero()) m += derived(i, c) * ads[i];
      return m;
    };
    std::vector<Matrix<Scalar>> dads;
    for (int c = 0; c < dd; ++c) dads.push_back(ad_of(c));
    Matrix<Scalar> killing(dd, dd);
    for (int p = 0; p < dd; ++p)
      for (int q = 0; q < dd; ++q) {
        Matrix<Scalar> prod = dads[p] * dads[q];
        Scalar tr;
        for (int t = 0; t < 8; ++t) tr += prod(t, t);
        killing(p, q) = tr;
      }
    reductive = !determinant(killing).is_zero();
  }
  return {center, dd, reductive};
}

namespace {

// Squared norms a^2, b^2 of the two ideals, from tr(C^2) = 12(a^4 + b^4)
// with C the Casimir sum of ad(e_j)^2 and a^2 + b^2 = 1.
std::pair<Scalar, Scalar> ideal_norms(const BracketTable& b) {
  Matrix<Scalar> cas(8, 8);
  for (int j = 1; j <= 8; ++j) {
    auto a = ad(b, j);
    cas += a * a;
  }
  Matrix<Scalar> c2 = cas * cas;
  Scalar tr;
  for (int t = 0; t < 8; ++t) tr += c2(t, t);
  Scalar p = (Scalar(1) - tr / Scalar(12)) / Scalar(2);
  auto disc = sqrt(Scalar(1) - Scalar(4) * p);
  if (!disc) throw std::domain_error("ideal norms are not in Q(sqrt3)");
  Scalar half(make_rational(1, 2));
  return {half * (Scalar(1) + *disc), half * (Scalar(1) - *disc)};
}

} // namespace

OrbitClass orbit_classify(const Form& rho) {
  if (!rho.is_zero() && rho.homogeneous_grade() != 3) throw std::invalid_argument("orbit_classify: expected a 3-form");
  OrbitClass out;
  out.norm2 = inner(rho, rho);
  BracketTable b = bracket_from_form(rho);
  out.witness = jacobi_witness(b);
  out.jacobi = !out.witness;
  if (!is_supersymmetric(rho)) return out;

  LieClass lc = lie_classify(b);
  Scalar det = determinant(form_to_map(rho).matrix);
  if (det == Scalar(-1)) out.orientation = Orientation::reversing;
  else if (det == Scalar(1)) out.orientation = Orientation::preserving;
  else throw std::logic_error("internal inconsistency: isometry with determinant " + format_scalar(det));

  switch (lc.center_dim) {
  case 0: out.kind = OrbitKind::L1_psu3; break;
  case 2: out.kind = OrbitKind::L2_su2su2_u1; break;
  case 5: out.kind = OrbitKind::L3_sp1sp2; break;
  default:
    throw std::logic_error("internal inconsistency: supersymmetric form with center dimension " +
                           std::to_string(lc.center_dim));
  }
  bool expect_reversing = out.kind == OrbitKind::L1_psu3;
  if (expect_reversing != (out.orientation == Orientation::reversing))
    throw std::logic_error("internal inconsistency: orientation does not match orbit " + to_string(out.kind));
  if (out.kind == OrbitKind::L2_su2su2_u1) out.params = ideal_norms(b);
  return out;
}

std::string to_string(OrbitKind k) {
  switch (k) {
  case OrbitKind::L1_psu3: return "L1_psu3";
  case OrbitKind::L2_su2su2_u1: return "L2_su2su2_u1";
  case OrbitKind::L3_sp1sp2: return "L3_sp1sp2";
  case OrbitKind::NotSupersymmetric: return "NotSupersymmetric";
  }
  return "?";
}

std::string to_string(Orientation o) {
  return o == Orientation::preserving ? "orientation-preserving" : "orientation-reversing";
}

} // namespace triality

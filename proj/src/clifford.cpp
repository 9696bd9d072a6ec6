#include "triality/clifford.hpp"

#include <mutex>

namespace triality {

namespace {

using Quaternion = std::array<Scalar, 4>;

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion qconj(const Quaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quaternion qadd(const Quaternion& a, const Quaternion& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Quaternion qsub(const Quaternion& a, const Quaternion& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

} // namespace

Octonion octonion_unit(int k) {
  Octonion u{};
  u.at(k) = Scalar(1);
  return u;
}

// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
Octonion oct_mul(const Octonion& u, const Octonion& v) {
  Quaternion a{u[0], u[1], u[2], u[3]}, b{u[4], u[5], u[6], u[7]};
  Quaternion c{v[0], v[1], v[2], v[3]}, d{v[4], v[5], v[6], v[7]};
  Quaternion x = qsub(qmul(a, c), qmul(qconj(d), b));
  Quaternion y = qadd(qmul(d, a), qmul(b, qconj(c)));
  return {x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};
}

Octonion oct_conj(const Octonion& u) {
  Octonion c = u;
  for (int k = 1; k < 8; ++k) c[k] = -c[k];
  return c;
}

Scalar oct_norm2(const Octonion& u) {
  Scalar s;
  for (const auto& x : u) s += x * x;
  return s;
}

Matrix<Scalar> right_multiplication(const Octonion& u) {
  Matrix<Scalar> m(8, 8);
  for (int k = 0; k < 8; ++k) {
    Octonion p = oct_mul(octonion_unit(k), u);
    for (int r = 0; r < 8; ++r) m(r, k) = p[r];
  }
  return m;
}

const char* chirality_name(Chirality c) { return c == Chirality::plus ? "+" : "-"; }

namespace {

struct KappaTables {
  std::array<Matrix<Scalar>, 8> generators;
  std::array<SignedPermutation, 256> blades;

  KappaTables() {
    std::array<SignedPermutation, 8> gen_perm;
    for (int i = 0; i < 8; ++i) {
      Octonion u = octonion_unit(i);
      Matrix<Scalar> k(16, 16);
      k.set_block(0, 8, right_multiplication(u));
      k.set_block(8, 0, -right_multiplication(oct_conj(u)));
      generators[i] = k;
      for (int j = 0; j < 16; ++j)
        for (int r = 0; r < 16; ++r) {
          if (k(r, j).is_zero()) continue;
          gen_perm[i].row[j] = r;
          gen_perm[i].sign[j] = k(r, j).sign();
        }
    }
    for (Blade b = 0; b < 256; ++b) {
      SignedPermutation p;
      for (int j = 0; j < 16; ++j) {
        p.row[j] = j;
        p.sign[j] = 1;
      }
      // right-multiply by kappa(e_i) for i in increasing order
      for (int i : blade_indices(b)) {
        const auto& g = gen_perm[i - 1];
        SignedPermutation q;
        for (int j = 0; j < 16; ++j) {
          q.row[j] = p.row[g.row[j]];
          q.sign[j] = g.sign[j] * p.sign[g.row[j]];
        }
        p = q;
      }
      blades[b] = p;
    }
  }
};

const KappaTables& kappa_tables() {
  static const KappaTables t;
  return t;
}

} // namespace

const Matrix<Scalar>& kappa(int i) {
  if (i < 1 || i > 8) throw std::invalid_argument("kappa: index out of range");
  return kappa_tables().generators[i - 1];
}

const SignedPermutation& kappa_blade(Blade b) { return kappa_tables().blades.at(b); }

SpinorMap form_to_map(const Form& rho) {
  if (!rho.is_zero() && rho.homogeneous_grade() != 3) throw std::invalid_argument("form_to_map: expected a 3-form");
  return {Chirality::minus, Chirality::plus, chiral_block(kappa_form(rho), Chirality::minus, Chirality::plus)};
}

int q_adjoint_sign(const Form& alpha) {
  auto g = alpha.homogeneous_grade();
  if (!g) throw std::invalid_argument("q_adjoint_sign: inhomogeneous or zero form");
  auto k = kappa_form(alpha);
  auto t = k.transpose();
  if (t == k) return 1;
  if (t == -k) return -1;
  throw std::logic_error("q_adjoint_sign: transpose is not a multiple of the matrix");
}

} // namespace triality

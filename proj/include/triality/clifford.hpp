#pragma once

#include "triality/exterior.hpp"
#include "triality/linalg.hpp"

#include <array>
#include <vector>

namespace triality {

// Coordinates in the basis 1, i, j, k, e, e.i, e.j, e.k; the second half is
// the Cayley-Dickson pair (0, q).
using Octonion = std::array<Scalar, 8>;

Octonion octonion_unit(int k);
Octonion oct_mul(const Octonion& u, const Octonion& v);
Octonion oct_conj(const Octonion& u);
Scalar oct_norm2(const Octonion& u);
// column k is e_k . u
Matrix<Scalar> right_multiplication(const Octonion& u);

// plus: spinor slots 1-8, where the volume form acts as +Id.
enum class Chirality { plus, minus };

inline Chirality opposite(Chirality c) { return c == Chirality::plus ? Chirality::minus : Chirality::plus; }
inline std::size_t slot_offset(Chirality c) { return c == Chirality::plus ? 0 : 8; }
const char* chirality_name(Chirality c);

// Clifford matrix of e_i as a signed permutation: column j goes to
// sign[j] * e_{row[j]}.
struct SignedPermutation {
  std::array<int, 16> row{};
  std::array<int, 16> sign{};
};

// [[0, R_u], [-R_conj(u), 0]] for u = e_i.
const Matrix<Scalar>& kappa(int i);
const SignedPermutation& kappa_blade(Blade b);

template <class T>
Matrix<T> kappa_form(const Multivector<T>& a) {
  Matrix<T> k(16, 16);
  for (const auto& [b, c] : a.terms()) {
    const auto& p = kappa_blade(b);
    for (int j = 0; j < 16; ++j) {
      T& slot = k(p.row[j], j);
      if (p.sign[j] > 0) slot += c;
      else slot -= c;
    }
  }
  return k;
}

// The block of a 16x16 Clifford element mapping the `from` half to the `to` half.
template <class T>
Matrix<T> chiral_block(const Matrix<T>& k, Chirality from, Chirality to) {
  return k.block(slot_offset(to), slot_offset(from), 8, 8);
}

struct SpinorMap {
  Chirality source;
  Chirality target;
  Matrix<Scalar> matrix;
};

// minus -> plus block of kappa_form(rho).
SpinorMap form_to_map(const Form& rho);

// The sign s with kappa_form(alpha)^T = s kappa_form(alpha); throws if the
// form is inhomogeneous or no such sign exists.
int q_adjoint_sign(const Form& alpha);

template <class T>
struct Spinor {
  Chirality chirality;
  std::vector<T> coords;
};

// Column j holds sigma(e_{j+1}) in the given spinor half.
template <class T>
struct SpinorValuedForm {
  Chirality half;
  Matrix<T> columns;
};

template <class T>
Spinor<T> mu(const SpinorValuedForm<T>& s) {
  Chirality out = opposite(s.half);
  std::vector<T> psi(8);
  for (int j = 0; j < 8; ++j) {
    auto img = chiral_block(kappa(j + 1), s.half, out);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        if (!img(r, c).is_zero() && !is_zero(s.columns(c, j))) psi[r] += T(img(r, c)) * s.columns(c, j);
  }
  return {out, psi};
}

// X -> -X.psi/8
template <class T>
SpinorValuedForm<T> iota(const Spinor<T>& psi) {
  Chirality out = opposite(psi.chirality);
  Matrix<T> cols(8, 8);
  const T scale = T(make_rational(-1, 8));
  for (int j = 0; j < 8; ++j) {
    auto img = chiral_block(kappa(j + 1), psi.chirality, out);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        if (!img(r, c).is_zero()) cols(r, j) += scale * T(img(r, c)) * psi.coords[c];
  }
  return {out, cols};
}

// Spin lift of a 2-form on one spinor half: half of its Clifford matrix.
template <class T>
Matrix<T> spin_action(const Multivector<T>& a, Chirality half) {
  return chiral_block(kappa_form(a), half, half) * T(make_rational(1, 2));
}

// Column j is act2(a, e_{j+1}).
template <class T>
Matrix<T> vector_action(const Multivector<T>& a) {
  Matrix<T> m(8, 8);
  for (int j = 0; j < 8; ++j) {
    auto img = act2(a, Multivector<T>::blade(Blade(1) << j));
    for (const auto& [k, c] : img.terms()) m(std::countr_zero(k), j) = c;
  }
  return m;
}

// so(8) action on spinor-valued 1-forms: spin part on the spinor, natural
// action on the 1-form slot.
template <class T>
SpinorValuedForm<T> act2_svf(const Multivector<T>& a, const SpinorValuedForm<T>& s) {
  return {s.half, spin_action(a, s.half) * s.columns - s.columns * vector_action(a)};
}

} // namespace triality

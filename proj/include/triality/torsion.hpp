#pragma once

#include "triality/clifford.hpp"
#include "triality/exterior.hpp"
#include "triality/linalg.hpp"
#include "triality/structures.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <type_traits>

namespace triality {

// sum_i e_i (x) slots[i], stored with the full Lambda^2 slot.
template <class T>
struct TorsionTensor {
  GKind kind = GKind::psu3;
  std::array<Multivector<T>, 8> slots{};

  friend bool operator==(const TorsionTensor&, const TorsionTensor&) = default;
};

using RTorsion = TorsionTensor<Scalar>;
using CTorsion = TorsionTensor<CScalar>;

// Projector of Lambda^2 onto the complement of the stabilizer algebra.
Projector perp_projector(GKind k);

template <class T>
const Matrix<T>& perp_matrix(GKind k) {
  if constexpr (std::is_same_v<T, Scalar>) return real_projector2(perp_projector(k));
  else return projector2(perp_projector(k));
}

template <class T>
TorsionTensor<T> project_perp(const TorsionTensor<T>& t) {
  TorsionTensor<T> out{t.kind, {}};
  for (int i = 0; i < 8; ++i)
    if (!t.slots[i].is_zero()) out.slots[i] = apply_matrix(perp_matrix<T>(t.kind), t.slots[i], 2, 2);
  return out;
}

template <class T>
Multivector<T> structure_form_as(GKind k) {
  if constexpr (std::is_same_v<T, Scalar>) return structure_form(k);
  else return to_complex(structure_form(k));
}

// sum_i e_i ^ (a_i . gamma)
template <class T>
Multivector<T> dhat(const TorsionTensor<T>& t) {
  const auto p = project_perp(t);
  const auto g = structure_form_as<T>(t.kind);
  Multivector<T> out;
  for (int i = 0; i < 8; ++i)
    if (!p.slots[i].is_zero()) out += wedge(Multivector<T>::blade(Blade(1) << i), pull2(p.slots[i], g));
  return out;
}

// sum_i e_i _| (a_i . gamma)
template <class T>
Multivector<T> dstar_hat(const TorsionTensor<T>& t) {
  const auto p = project_perp(t);
  const auto g = structure_form_as<T>(t.kind);
  Multivector<T> out;
  for (int i = 0; i < 8; ++i)
    if (!p.slots[i].is_zero()) out += interior(i + 1, pull2(p.slots[i], g));
  return out;
}

template <class T>
SpinorValuedForm<T> sigma_as(GKind k, Chirality label) {
  auto s = sigma_canonical(k, label);
  if constexpr (std::is_same_v<T, Scalar>) return s;
  else return {s.half, convert<CScalar>(s.columns)};
}

// sum_i e_i . (a_i(sigma)); lives in the half opposite to sigma.
template <class T>
SpinorValuedForm<T> Dhat(const TorsionTensor<T>& t, Chirality label) {
  const auto sigma = sigma_as<T>(t.kind, label);
  const auto p = project_perp(t);
  const Chirality out_half = opposite(sigma.half);
  Matrix<T> out(8, 8);
  for (int i = 0; i < 8; ++i) {
    if (p.slots[i].is_zero()) continue;
    auto moved = act2_svf(p.slots[i], sigma);
    out += convert<T>(chiral_block(kappa(i + 1), sigma.half, out_half)) * moved.columns;
  }
  return {out_half, out};
}

// so(8) action on Lambda^1 (x) Lambda^2.
template <class T>
TorsionTensor<T> act_torsion(const Multivector<T>& g, const TorsionTensor<T>& t) {
  TorsionTensor<T> out{t.kind, {}};
  for (int i = 0; i < 8; ++i) {
    if (t.slots[i].is_zero()) continue;
    out.slots[i] += act2(g, t.slots[i]);
    auto img = act2(g, Multivector<T>::blade(Blade(1) << i));
    for (const auto& [k, c] : img.terms()) out.slots[std::countr_zero(k)] += c * t.slots[i];
  }
  return out;
}

// x^y^z -> x(x)y^z + y(x)z^x + z(x)x^y
RTorsion natural_embedding(const Form& alpha, GKind k);
// natural_embedding followed by the perp projection of the 2-form slot.
RTorsion embed3(const Form& alpha, GKind k);
// embed3 of the component of alpha orthogonal to rho.
RTorsion iota_rho_perp(const Form& alpha);

Form L_op(const Form& tau);
const Matrix<Scalar>& L_matrix();

struct KernelAnalysis {
  GKind kind;
  std::size_t domain_dim = 0;
  std::size_t rank_d = 0, rank_dstar = 0, rank_Dplus = 0, rank_Dminus = 0;
  // Subspaces of Lambda^1 (x) Lambda^2 in 8 x 28 slot coordinates.
  Subspace<Scalar> ker_d, ker_Dplus;
  std::optional<Subspace<Scalar>> ker_d_dstar, ker_D;
  bool kernels_equal = false;
};

// Cached; the PSU(3) run takes a few seconds.
const KernelAnalysis& kernel_analysis(GKind k);

std::vector<Scalar> torsion_coords(const RTorsion& t);
RTorsion torsion_from_coords(GKind k, const std::vector<Scalar>& v);

struct ZConstants {
  CScalar z22, z11, z22_conjugate;
};

// Throws std::domain_error when the compared vectors are not proportional.
ZConstants z_constants();

// y = z x for a single z.
std::optional<CScalar> proportionality(const Matrix<CScalar>& y, const Matrix<CScalar>& x);

} // namespace triality

#pragma once

#include "triality/clifford.hpp"
#include "triality/exterior.hpp"
#include "triality/linalg.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace triality {

enum class GKind { psu3, sp1sp2 };

std::string to_string(GKind k);

const Form& canonical_rho();
const Form& canonical_omega();
// (w_i, w_j, w_k)
const std::array<Form, 3>& kaehler_forms();
// rho or Omega
const Form& structure_form(GKind k);

// Solutions a in Lambda^2 of a * gamma = 0, in basis(2) coordinates.
Subspace<Scalar> stabilizer(const Form& gamma);
// e_i _| rho for PSU(3); a basis of the 13-dimensional stabilizer of Omega otherwise.
const std::vector<Form>& stabilizer_basis(GKind k);

enum class Projector { psu3_8, psu3_20, psu3_10p, psu3_10m, sp_3, sp_10, sp_15 };

std::string to_string(Projector p);
// 28x28 matrices on basis(2) coordinates.
const Matrix<CScalar>& projector2(Projector p);
// Throws for the complex projectors psu3_10p and psu3_10m.
const Matrix<Scalar>& real_projector2(Projector p);
CForm project2(const CForm& alpha, Projector p);
Form project2(const Form& alpha, Projector p);

// The matrix of alpha -> alpha _| Omega on Lambda^2.
const Matrix<Scalar>& omega_contraction();

// c: Lambda^k -> Lambda^{k+1} for k = 0..7, with structure constants rho_ijk.
const Matrix<Scalar>& c_operator(int k);
Form c_apply(int k, const Form& alpha);
// Adjoint c*: Lambda^{k+1} -> Lambda^k.
Form c_adjoint_apply(int k, const Form& alpha);
std::array<int, 9> betti();
const Matrix<Scalar>& p3_matrix();
Form p3(const Form& alpha);
// Lambda^4_o = ker c on Lambda^4; Lambda^4_i = image of the adjoint from Lambda^5.
Subspace<Scalar> lambda4_o();
Subspace<Scalar> lambda4_i();

// Canonical supersymmetric map; `label` is the sign the map carries in the
// literature, `half` of the result is where its values actually live.
// Throws for sp1sp2 with label minus.
SpinorValuedForm<Scalar> sigma_canonical(GKind k, Chirality label);

struct WeightVector {
  std::string label;
  CForm vector;
  // expected act2 eigenvalue under each torus generator
  std::vector<CScalar> weight;
};

struct RootData {
  GKind kind;
  std::vector<Form> torus;
  std::vector<WeightVector> weights;
  // PSU(3) only: su(2) triples used for the calibration argument
  std::vector<Form> e, f, lambda;
  bool relations_hold = false;
};

const RootData& roots(GKind k);

using Vector8 = std::array<Scalar, 8>;

// 2 rho (k = 3 vectors) or Omega/6 (k = 4) on an oriented orthonormal tuple.
Scalar calibration(GKind k, const std::vector<Vector8>& plane);
// Maximum over n random orthonormal tuples, in floating point.
double calibration_sample(GKind k, int n, std::uint64_t seed);

} // namespace triality

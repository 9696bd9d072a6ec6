#pragma once

#include "triality/clifford.hpp"
#include "triality/exterior.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace triality {

// Totally antisymmetric coefficients: [e_i, e_j] = sum_k c(i,j,k) e_k, indices 1..8.
class BracketTable {
public:
  BracketTable() = default;

  const Scalar& operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }
  // Sets c(i,j,k) and every permutation with its sign.
  void set(int i, int j, int k, const Scalar& v);
  std::array<Scalar, 8> bracket(int i, int j) const;
  bool is_zero() const;

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

private:
  static std::size_t index(int i, int j, int k);
  std::array<Scalar, 512> c_{};
};

// Antisymmetric value rho(e_i, e_j, e_k) of a 3-form.
Scalar form_value(const Form& rho, int i, int j, int k);

Form jac(const Form& rho, const Form& tau);
// rho.tau restricted to one chirality.
Matrix<Scalar> gamma(const Form& rho, const Form& tau, Chirality c);

bool is_supersymmetric(const Form& rho);

BracketTable bracket_from_form(const Form& rho);
// Unit-norm 3-form of the bracket; throws for a zero bracket or when the
// norm has no square root in the scalar field.
Form form_from_bracket(const BracketTable& b);

// First triple (i<j<k) on which the Jacobi identity fails.
std::optional<std::array<int, 3>> jacobi_witness(const BracketTable& b);
inline bool satisfies_jacobi(const BracketTable& b) { return !jacobi_witness(b); }

struct LieClass {
  int center_dim;
  int derived_dim;
  bool reductive;
};

// Throws std::domain_error("not a Lie bracket") if Jacobi fails.
LieClass lie_classify(const BracketTable& b);

enum class OrbitKind { L1_psu3, L2_su2su2_u1, L3_sp1sp2, NotSupersymmetric };
enum class Orientation { preserving, reversing };

struct OrbitClass {
  OrbitKind kind = OrbitKind::NotSupersymmetric;
  std::optional<Orientation> orientation;
  // squared norms on the two su(2) ideals, larger first
  std::optional<std::pair<Scalar, Scalar>> params;
  Scalar norm2;
  bool jacobi = false;
  std::optional<std::array<int, 3>> witness;
};

OrbitClass orbit_classify(const Form& rho);

std::string to_string(OrbitKind k);
std::string to_string(Orientation o);

} // namespace triality

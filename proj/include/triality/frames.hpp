#pragma once

#include "triality/clifford.hpp"
#include "triality/exterior.hpp"
#include "triality/structures.hpp"
#include "triality/torsion.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triality {

// Orthonormal frame with [e_i, e_j] = sum_k c(i,j,k) e_k, indices 1..8.
class FrameAlgebra {
public:
  explicit FrameAlgebra(std::string name = "frame", bool constant_structure = true, std::string point_note = {})
      : name_(std::move(name)), point_note_(std::move(point_note)), constant_(constant_structure) {}

  // Sets c(i,j,k) = v and c(j,i,k) = -v.
  void set(int i, int j, int k, const Scalar& v);
  const Scalar& c(int i, int j, int k) const { return c_[index(i, j, k)]; }

  const std::string& name() const { return name_; }
  const std::string& point_note() const { return point_note_; }
  bool constant_structure() const { return constant_; }

private:
  static std::size_t index(int i, int j, int k);
  std::string name_;
  std::string point_note_;
  bool constant_;
  std::array<Scalar, 512> c_{};
};

// gamma(i,j,k): coefficient of e_k in nabla_{e_i} e_j.
struct Connection {
  std::array<Scalar, 512> gamma{};

  Scalar& operator()(int i, int j, int k) { return gamma.at(std::size_t(((i - 1) * 8 + (j - 1)) * 8 + (k - 1))); }
  const Scalar& operator()(int i, int j, int k) const {
    return gamma.at(std::size_t(((i - 1) * 8 + (j - 1)) * 8 + (k - 1)));
  }
  // sum_{j<k} gamma(i,j,k) e_jk, acting on forms through act2.
  Form connection_form(int i) const;

  friend bool operator==(const Connection&, const Connection&) = default;
  friend Connection operator-(Connection c) {
    for (auto& x : c.gamma) x = -x;
    return c;
  }
};

Form coframe_d(const Form& alpha, const FrameAlgebra& f);
// d* = -*d* in dimension 8.
Form codifferential(const Form& alpha, const FrameAlgebra& f);
Connection levi_civita(const FrameAlgebra& f);
// slot i is nabla_{e_{i+1}} alpha
std::array<Form, 8> nabla_form(const Form& alpha, const FrameAlgebra& f);
// Throws std::domain_error for frames without constant structure coefficients.
Matrix<Scalar> ricci(const FrameAlgebra& f);

struct Harmonicity {
  bool closed;
  bool coclosed;
  friend bool operator==(const Harmonicity&, const Harmonicity&) = default;
};

Harmonicity harmonic_check(const FrameAlgebra& f, GKind k);
// The T in Lambda^1 (x) g-perp with nabla gamma = T(gamma); throws
// std::domain_error if some slot has no solution.
RTorsion intrinsic_torsion(const FrameAlgebra& f, GKind k);
// sum_ij Ric_ij e_i . sigma(e_j)
Spinor<Scalar> ricci_constraint(const Matrix<Scalar>& ric, GKind k, Chirality label);

struct Expectations {
  std::optional<std::array<Scalar, 8>> ricci_diag;
  std::optional<Harmonicity> harmonic;
  // entries of the nabla e_j table, compared up to a global sign
  std::optional<Connection> nabla_table;
  std::optional<std::array<Form, 8>> nabla_gamma;
  std::optional<std::string> orbit;
};

struct CatalogEntry {
  std::string id;
  FrameAlgebra frame;
  GKind kind;
  Expectations expected;
};

const std::vector<std::string>& catalog_ids();
// x0 is only used by gibbons_hawking and defaults to 1 there; throws
// std::invalid_argument for unknown ids or an x0 with no exact sqrt(x0^3).
CatalogEntry catalog(std::string_view id, std::optional<Scalar> x0 = std::nullopt);

} // namespace triality

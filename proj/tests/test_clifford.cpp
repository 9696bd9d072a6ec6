#include <doctest.h>

#include "gen.hpp"
#include "triality/clifford.hpp"
#include "triality/structures.hpp"

#include <sstream>

using namespace triality;
using namespace triality::testing;

namespace {

// sum of +-E_{a,b}, E_{a,b} having -1 at (a,b) and +1 at (b,a), 1-based.
Matrix<Scalar> from_e_terms(const std::string& text) {
  Matrix<Scalar> m(16, 16);
  std::istringstream in(text);
  int s, a, b;
  while (in >> s >> a >> b) {
    m(a - 1, b - 1) -= Scalar(s);
    m(b - 1, a - 1) += Scalar(s);
  }
  return m;
}

Octonion random_octonion(std::mt19937_64& rng) {
  Octonion u;
  for (auto& x : u) x = small_scalar(rng);
  return u;
}

} // namespace

TEST_CASE("kappa(e1), kappa(e2) and kappa(e8) against hand-entered tables") {
  CHECK(kappa(1) == from_e_terms("-1 1 9 -1 2 10 -1 3 11 -1 4 12 -1 5 13 -1 6 14 -1 7 15 -1 8 16"));
  CHECK(kappa(2) == from_e_terms("1 1 10 -1 2 9 -1 3 12 1 4 11 -1 5 14 1 6 13 1 7 16 -1 8 15"));
  CHECK(kappa(8) == from_e_terms("1 1 16 1 2 15 -1 3 14 -1 4 13 1 5 12 1 6 11 -1 7 10 -1 8 9"));
}

TEST_CASE("Clifford relations") {
  const auto id = Matrix<Scalar>::identity(16);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const Matrix<Scalar> ac = kappa(i) * kappa(j) + kappa(j) * kappa(i);
      if (i == j) CHECK(ac == Scalar(-2) * id);
      else CHECK(ac.is_zero());
    }
}

TEST_CASE("kappa_form of a blade is the ordered product") {
  CHECK(kappa_form(Form::blade("e12")) == kappa(1) * kappa(2));
  CHECK(kappa_form(Form::blade("e257")) == kappa(2) * kappa(5) * kappa(7));
  std::mt19937_64 rng(21);
  const Form a = random_form(rng, 2), b = random_form(rng, 2);
  CHECK(kappa_form(a + b) == kappa_form(a) + kappa_form(b));
}

TEST_CASE("q-adjoint sign follows the grade") {
  // transpose reverses the product of antisymmetric generators
  for (int p = 1; p <= 8; ++p) {
    const int expected = (p * (p + 1) / 2) % 2 ? -1 : 1;
    for (Blade b : basis(p)) CHECK(q_adjoint_sign(Form::blade(b)) == expected);
  }
  CHECK_THROWS(q_adjoint_sign(Form::blade("e1") + Form::blade("e12")));
}

TEST_CASE("octonion norm is multiplicative") {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 30; ++n) {
    const auto u = random_octonion(rng), v = random_octonion(rng);
    CHECK(oct_norm2(oct_mul(u, v)) == oct_norm2(u) * oct_norm2(v));
  }
  // i j = k
  CHECK(oct_mul(octonion_unit(1), octonion_unit(2)) == octonion_unit(3));
}

TEST_CASE("mu after iota is the identity") {
  for (auto h : {Chirality::plus, Chirality::minus})
    for (int k = 0; k < 8; ++k) {
      Spinor<Scalar> psi{h, std::vector<Scalar>(8)};
      psi.coords[k] = Scalar(1);
      const auto back = mu(iota(psi));
      CHECK(back.chirality == h);
      CHECK(back.coords == psi.coords);
    }
}

TEST_CASE("kernel of Clifford multiplication has dimension 56") {
  for (auto h : {Chirality::plus, Chirality::minus}) {
    Matrix<Scalar> m(8, 64);
    for (int j = 0; j < 8; ++j)
      for (int c = 0; c < 8; ++c) {
        SpinorValuedForm<Scalar> s{h, Matrix<Scalar>(8, 8)};
        s.columns(c, j) = Scalar(1);
        const auto img = mu(s);
        for (int r = 0; r < 8; ++r) m(r, j * 8 + c) = img.coords[r];
      }
    CHECK(64 - rank(m) == 56);
  }
}

TEST_CASE("form_to_map of rho is an orientation-reversing isometry") {
  const auto a = form_to_map(canonical_rho());
  CHECK(a.source == Chirality::minus);
  CHECK(a.target == Chirality::plus);
  CHECK(a.matrix.transpose() * a.matrix == Matrix<Scalar>::identity(8));
  CHECK(determinant(a.matrix) == Scalar(-1));
}

TEST_CASE("spin lift intertwines Clifford multiplication") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 10; ++n) {
    const Form a = random_form(rng, 2, 3), x = random_form(rng, 1, 3);
    const Matrix<Scalar> s = kappa_form(a) * Scalar(make_rational(1, 2));
    CHECK(s * kappa_form(x) - kappa_form(x) * s == kappa_form(act2(a, x)));
  }
}

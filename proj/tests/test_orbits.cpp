#include <doctest.h>

#include "gen.hpp"
#include "triality/orbits.hpp"
#include "triality/structures.hpp"

#include <algorithm>
#include <numeric>

using namespace triality;
using namespace triality::testing;

namespace {

Matrix<Scalar> signed_permutation(std::mt19937_64& rng) {
  std::array<int, 8> p;
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  Matrix<Scalar> m(8, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 8; ++i) m(p[i], i) = Scalar(coin(rng) ? 1 : -1);
  return m;
}

// Brute force Jacobi over all triples of the bracket e_i x e_j = sum_k rho_ijk e_k.
bool jacobi_brute(const Form& rho) {
  auto br = [&](const std::array<Scalar, 8>& x, const std::array<Scalar, 8>& y) {
    std::array<Scalar, 8> out{};
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j) {
        if (x[i - 1].is_zero() || y[j - 1].is_zero()) continue;
        for (int k = 1; k <= 8; ++k) out[k - 1] += x[i - 1] * y[j - 1] * form_value(rho, i, j, k);
      }
    return out;
  };
  auto e = [](int i) {
    std::array<Scalar, 8> v{};
    v[i - 1] = Scalar(1);
    return v;
  };
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k) {
        auto a = br(e(i), br(e(j), e(k))), b = br(e(j), br(e(k), e(i))), c = br(e(k), br(e(i), e(j)));
        for (int t = 0; t < 8; ++t)
          if (!(a[t] + b[t] + c[t]).is_zero()) return false;
      }
  return true;
}

} // namespace

TEST_CASE("canonical forms land in the expected orbits") {
  auto c = orbit_classify(canonical_rho());
  CHECK(c.kind == OrbitKind::L1_psu3);
  CHECK(c.orientation == Orientation::reversing);
  CHECK(c.jacobi);
  c = orbit_classify(Form::blade("e123"));
  CHECK(c.kind == OrbitKind::L3_sp1sp2);
  CHECK(c.orientation == Orientation::preserving);
  c = orbit_classify(Scalar(0, make_rational(1, 2)) * Form::blade("e123") +
                     Scalar(make_rational(1, 2)) * Form::blade("e456"));
  CHECK(c.kind == OrbitKind::L2_su2su2_u1);
  REQUIRE(c.params);
  CHECK(c.params->first == Scalar(make_rational(3, 4)));
  CHECK(c.params->second == Scalar(make_rational(1, 4)));
}

TEST_CASE("non-unit or non-Lie forms are not supersymmetric") {
  auto c = orbit_classify(Scalar(2) * Form::blade("e123"));
  CHECK(c.kind == OrbitKind::NotSupersymmetric);
  CHECK(c.norm2 == Scalar(4));
  c = orbit_classify(Scalar(make_rational(3, 5)) * Form::blade("e123") +
                     Scalar(make_rational(4, 5)) * Form::blade("e145"));
  CHECK(c.kind == OrbitKind::NotSupersymmetric);
  CHECK_FALSE(c.jacobi);
  CHECK(c.witness);
}

TEST_CASE("classification is invariant under signed permutations") {
  std::mt19937_64 rng(31);
  const Form l2 = Scalar(0, make_rational(1, 2)) * Form::blade("e123") + Scalar(make_rational(1, 2)) * Form::blade("e456");
  for (int n = 0; n < 20; ++n) {
    const auto g = signed_permutation(rng);
    const int s = determinant(g) == Scalar(1) ? 1 : -1;
    for (const Form& f : {canonical_rho(), Form::blade("e123"), l2}) {
      const auto a = orbit_classify(f), b = orbit_classify(apply_linear(g, f));
      CHECK(a.kind == b.kind);
      CHECK(a.params == b.params);
      CHECK(a.norm2 == b.norm2);
      if (s > 0) CHECK(a.orientation == b.orientation);
    }
  }
}

TEST_CASE("Jac vanishes iff the bracket is Lie") {
  std::mt19937_64 rng(32);
  for (int n = 0; n < 60; ++n) {
    std::uniform_int_distribution<int> terms(1, 3);
    const Form rho = random_form(rng, 3, terms(rng));
    const bool lie = jacobi_brute(rho);
    CHECK(satisfies_jacobi(bracket_from_form(rho)) == lie);
    CHECK(jac(rho, rho).is_zero() == lie);
  }
  CHECK(jacobi_brute(canonical_rho()));
}

TEST_CASE("bracket and form are inverse on unit forms") {
  CHECK(form_from_bracket(bracket_from_form(canonical_rho())) == canonical_rho());
  CHECK(form_from_bracket(bracket_from_form(Form::blade("e246"))) == Form::blade("e246"));
  CHECK_THROWS(form_from_bracket(BracketTable{}));
}

TEST_CASE("Lie algebra types of the orbit representatives") {
  auto su3 = lie_classify(bracket_from_form(canonical_rho()));
  CHECK(su3.center_dim == 0);
  CHECK(su3.derived_dim == 8);
  auto su2 = lie_classify(bracket_from_form(Form::blade("e123")));
  CHECK(su2.center_dim == 5);
  CHECK(su2.derived_dim == 3);
  CHECK(su2.reductive);
  CHECK_THROWS_AS(lie_classify(bracket_from_form(Form::blade("e123") + Form::blade("e145"))), std::domain_error);
}

TEST_CASE("gamma is the identity exactly on the supersymmetric forms") {
  const auto id = Matrix<Scalar>::identity(8);
  CHECK(gamma(canonical_rho(), canonical_rho(), Chirality::plus) == id);
  CHECK(gamma(canonical_rho(), canonical_rho(), Chirality::minus) == id);
  const Form bad = Form::blade("e123") + Form::blade("e145");
  CHECK_FALSE(is_supersymmetric(bad));
  CHECK(is_supersymmetric(Form::blade("e578")));
}

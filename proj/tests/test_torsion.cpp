#include <doctest.h>

#include "gen.hpp"
#include "triality/torsion.hpp"

using namespace triality;
using namespace triality::testing;

namespace {

RTorsion random_torsion(std::mt19937_64& rng, GKind k) {
  RTorsion t{k, {}};
  std::uniform_int_distribution<int> slot(0, 7);
  for (int n = 0; n < 3; ++n) t.slots[slot(rng)] += random_form(rng, 2, 2);
  return t;
}

} // namespace

TEST_CASE("natural embedding") {
  const RTorsion t = natural_embedding(Form::blade("e123"), GKind::psu3);
  CHECK(t.slots[0] == Form::blade("e23"));
  CHECK(t.slots[1] == -Form::blade("e13"));
  CHECK(t.slots[2] == Form::blade("e12"));
  std::mt19937_64 rng(51);
  for (int n = 0; n < 10; ++n) {
    const Form a = random_form(rng, 3);
    const RTorsion e = natural_embedding(a, GKind::sp1sp2);
    Form back;
    for (int i = 0; i < 8; ++i) back += wedge(vec(i + 1), e.slots[i]);
    CHECK(back == Scalar(3) * a);
    CHECK(embed3(a, GKind::sp1sp2) == project_perp(e));
  }
  CHECK_THROWS_AS(natural_embedding(Form::blade("e12"), GKind::psu3), std::invalid_argument);
}

TEST_CASE("stabilizer components do not contribute") {
  for (auto k : {GKind::psu3, GKind::sp1sp2})
    for (const auto& a : stabilizer_basis(k)) {
      RTorsion t{k, {}};
      t.slots[3] = a;
      CHECK(dhat(t).is_zero());
      CHECK(dstar_hat(t).is_zero());
      CHECK(Dhat(t, Chirality::plus).columns.is_zero());
    }
}

TEST_CASE("torsion operators are equivariant under the stabilizer") {
  std::mt19937_64 rng(52);
  for (auto k : {GKind::psu3, GKind::sp1sp2}) {
    const auto& stab = stabilizer_basis(k);
    std::uniform_int_distribution<std::size_t> pick(0, stab.size() - 1);
    for (int n = 0; n < 6; ++n) {
      const Form& a = stab[pick(rng)];
      const RTorsion t = random_torsion(rng, k);
      const RTorsion at = act_torsion(a, t);
      CHECK(dhat(at) == act2(a, dhat(t)));
      CHECK(dstar_hat(at) == act2(a, dstar_hat(t)));
      const auto d = Dhat(t, Chirality::plus);
      CHECK(Dhat(at, Chirality::plus).columns == act2_svf(a, d).columns);
    }
  }
}

TEST_CASE("kernel analysis") {
  const auto& p = kernel_analysis(GKind::psu3);
  CHECK(p.domain_dim == 160);
  CHECK(p.rank_d == 70);
  CHECK(p.rank_dstar == 28);
  REQUIRE(p.ker_d_dstar);
  CHECK(p.ker_d_dstar->dim() == 70);
  CHECK(p.kernels_equal);
  const auto& s = kernel_analysis(GKind::sp1sp2);
  CHECK(s.domain_dim == 120);
  CHECK(s.rank_d == 56);
  CHECK(s.ker_d.dim() == 64);
  CHECK(s.ker_d.equals(s.ker_Dplus));
}

TEST_CASE("d of the embedded rho-perp component is twice c3") {
  const Form& rho = canonical_rho();
  for (Blade b : basis(3)) {
    const Form a = Form::blade(b);
    const Form perp = a - inner(a, rho) * rho;
    CHECK(dhat(iota_rho_perp(a)) == Scalar(2) * c_apply(3, perp));
  }
}

TEST_CASE("L satisfies (L - 2)(L - 12)(L - 20) = 0") {
  const auto& l = L_matrix();
  const auto id = Matrix<Scalar>::identity(56);
  const Matrix<Scalar> a = l - Scalar(2) * id, b = l - Scalar(12) * id, c = l - Scalar(20) * id;
  CHECK((a * b * c).is_zero());
  CHECK(56 - rank(a) == 8);
  CHECK(56 - rank(b) == 32);
  CHECK(56 - rank(c) == 16);
  const Form t = interior(1, canonical_omega());
  CHECK(L_op(t) == Scalar(2) * t);
}

TEST_CASE("z constants are conjugate") {
  const auto z = z_constants();
  CHECK(z.z22_conjugate == z.z22.conj());
  CHECK(!z.z11.is_zero());
}

TEST_CASE("proportionality") {
  Matrix<CScalar> x(2, 1), y(2, 1);
  x(0, 0) = CScalar(1);
  x(1, 0) = CScalar(2);
  y(0, 0) = CScalar(Scalar(), Scalar(3));
  y(1, 0) = CScalar(Scalar(), Scalar(6));
  CHECK(proportionality(y, x) == CScalar(Scalar(), Scalar(3)));
  y(1, 0) = CScalar(1);
  CHECK_FALSE(proportionality(y, x).has_value());
}

TEST_CASE("torsion coordinates round trip") {
  std::mt19937_64 rng(53);
  const RTorsion t = random_torsion(rng, GKind::sp1sp2);
  CHECK(torsion_from_coords(GKind::sp1sp2, torsion_coords(t)) == t);
}

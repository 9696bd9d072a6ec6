#include <doctest.h>

#include "gen.hpp"
#include "triality/structures.hpp"

using namespace triality;
using namespace triality::testing;

TEST_CASE("stabilizer dimensions") {
  CHECK(stabilizer(canonical_rho()).dim() == 8);
  CHECK(stabilizer(canonical_omega()).dim() == 13);
  for (auto k : {GKind::psu3, GKind::sp1sp2})
    for (const auto& a : stabilizer_basis(k)) CHECK(act2(a, structure_form(k)).is_zero());
}

TEST_CASE("stabilizer of rho is spanned by e_i _| rho") {
  const auto s = stabilizer(canonical_rho());
  for (int i = 1; i <= 8; ++i) CHECK(s.contains(to_coords(interior(i, canonical_rho()), 2)));
}

TEST_CASE("stabilizers are closed under the bracket") {
  for (auto k : {GKind::psu3, GKind::sp1sp2}) {
    const auto s = stabilizer(structure_form(k));
    for (const auto& a : stabilizer_basis(k))
      for (const auto& b : stabilizer_basis(k)) CHECK(s.contains(to_coords(act2(a, b), 2)));
  }
}

TEST_CASE("Kaehler forms have eigenvalue 5") {
  for (const auto& w : kaehler_forms()) CHECK(contract(w, canonical_omega()) == Scalar(5) * w);
  CHECK(hodge_star(canonical_omega()) == canonical_omega());
}

TEST_CASE("projector families are complete orthogonal idempotents") {
  const auto id = Matrix<CScalar>::identity(28);
  auto family = [&](std::initializer_list<Projector> ps) {
    Matrix<CScalar> sum(28, 28);
    for (auto p : ps) {
      const auto& m = projector2(p);
      CHECK(m * m == m);
      for (auto q : ps)
        if (q != p) CHECK((m * projector2(q)).is_zero());
      sum = sum + m;
    }
    CHECK(sum == id);
  };
  family({Projector::psu3_8, Projector::psu3_20});
  family({Projector::psu3_8, Projector::psu3_10p, Projector::psu3_10m});
  family({Projector::sp_3, Projector::sp_10, Projector::sp_15});
  CHECK(rank(projector2(Projector::psu3_10p)) == 10);
  CHECK(rank(real_projector2(Projector::sp_15)) == 15);
  CHECK_THROWS(real_projector2(Projector::psu3_10p));
}

TEST_CASE("projectors commute with the stabilizer") {
  for (auto [k, ps] : {std::pair{GKind::psu3, std::vector{Projector::psu3_8, Projector::psu3_10p}},
                       std::pair{GKind::sp1sp2, std::vector{Projector::sp_3, Projector::sp_10}}})
    for (const auto& a : stabilizer_basis(k)) {
      const auto ad = convert<CScalar>(operator_matrix<Scalar>([&](const Form& b) { return act2(a, b); }, 2, 2));
      for (auto p : ps) CHECK(ad * projector2(p) == projector2(p) * ad);
    }
}

TEST_CASE("c complex") {
  for (int k = 1; k <= 7; ++k) CHECK((c_operator(k) * c_operator(k - 1)).is_zero());
  CHECK(betti() == std::array<int, 9>{1, 0, 0, 1, 0, 1, 0, 0, 1});
  CHECK(c_apply(0, Form::blade(0)).is_zero());
}

TEST_CASE("c adjoint is the metric adjoint") {
  std::mt19937_64 rng(41);
  for (int k = 0; k <= 7; ++k) {
    const Form a = random_form(rng, k), b = random_form(rng, k + 1);
    CHECK(inner(c_apply(k, a), b) == inner(a, c_adjoint_apply(k, b)));
  }
}

TEST_CASE("Lambda4 splits into ker c and the image of the adjoint") {
  const auto o = lambda4_o(), i = lambda4_i();
  CHECK(o.dim() + i.dim() == 70);
  CHECK(intersection(o, i).dim() == 0);
}

TEST_CASE("supersymmetric maps are orthogonal and invariant") {
  const auto id = Matrix<Scalar>::identity(8);
  for (auto [k, l] : {std::pair{GKind::psu3, Chirality::plus}, {GKind::psu3, Chirality::minus},
                      {GKind::sp1sp2, Chirality::plus}}) {
    const auto s = sigma_canonical(k, l);
    CHECK(s.columns.transpose() * s.columns == id);
    const auto m = mu(s);
    for (const auto& x : m.coords) CHECK(x.is_zero());
    for (const auto& a : stabilizer_basis(k)) CHECK(act2_svf(a, s).columns.is_zero());
  }
  CHECK_THROWS_AS(sigma_canonical(GKind::sp1sp2, Chirality::minus), std::invalid_argument);
}

TEST_CASE("root data relations") {
  CHECK(roots(GKind::psu3).relations_hold);
  CHECK(roots(GKind::sp1sp2).relations_hold);
}

TEST_CASE("calibration values") {
  auto unit = [](int i) {
    Vector8 v{};
    v[i - 1] = Scalar(1);
    return v;
  };
  CHECK(calibration(GKind::psu3, {unit(1), unit(2), unit(3)}) == Scalar(1));
  CHECK(calibration(GKind::psu3, {unit(2), unit(1), unit(3)}) == Scalar(-1));
  CHECK(calibration(GKind::sp1sp2, {unit(2), unit(1), unit(3), unit(4)}) == Scalar(1));
  CHECK_THROWS_AS(calibration(GKind::psu3, {unit(1), unit(1), unit(3)}), std::invalid_argument);
  CHECK(calibration_sample(GKind::psu3, 2000, 7) <= 1 + 1e-9);
  CHECK(calibration_sample(GKind::sp1sp2, 2000, 8) <= 1 + 1e-9);
}

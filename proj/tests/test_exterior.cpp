#include <doctest.h>

#include "gen.hpp"
#include "triality/exterior.hpp"

using namespace triality;
using namespace triality::testing;

TEST_CASE("blade names and signs") {
  CHECK(parse_blade("e134") == make_blade({1, 3, 4}));
  CHECK(blade_name(make_blade({2, 5, 8})) == "e258");
  CHECK(wedge_sign(make_blade({2}), make_blade({1})) == -1);
  CHECK(wedge_sign(make_blade({1, 2}), make_blade({2})) == 0);
  CHECK(binomial8(3) == 56);
  CHECK(binomial8(4) == 70);
}

TEST_CASE("wedge is graded commutative and associative") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 40; ++n) {
    std::uniform_int_distribution<int> deg(0, 3);
    const int p = deg(rng), q = deg(rng), r = deg(rng);
    const Form a = random_form(rng, p), b = random_form(rng, q), c = random_form(rng, r);
    const Scalar s((p * q) % 2 ? -1 : 1);
    CHECK(wedge(a, b) == s * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("star star is (-1)^p") {
  std::mt19937_64 rng(12);
  for (int p = 0; p <= 8; ++p) {
    const Form a = random_form(rng, p);
    CHECK(hodge_star(hodge_star(a)) == Scalar(p % 2 ? -1 : 1) * a);
  }
}

TEST_CASE("a ^ star b = <a, b> vol") {
  std::mt19937_64 rng(13);
  for (int p = 0; p <= 8; ++p) {
    const Form a = random_form(rng, p), b = random_form(rng, p);
    CHECK(wedge(a, hodge_star(b)) == inner(a, b) * Form::blade(kVolume));
  }
}

TEST_CASE("interior product is adjoint to wedge with a vector") {
  std::mt19937_64 rng(14);
  for (int n = 0; n < 60; ++n) {
    std::uniform_int_distribution<int> deg(1, 7), ix(1, 8);
    const int p = deg(rng), i = ix(rng);
    const Form a = random_form(rng, p), b = random_form(rng, p - 1);
    CHECK(inner(interior(i, a), b) == inner(a, wedge(vec(i), b)));
  }
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937_64 rng(15);
  for (int n = 0; n < 40; ++n) {
    std::uniform_int_distribution<int> deg(0, 4), ix(1, 8);
    const int p = deg(rng), i = ix(rng);
    const Form a = random_form(rng, p), b = random_form(rng, deg(rng));
    const Form rhs = wedge(interior(i, a), b) + Scalar(p % 2 ? -1 : 1) * wedge(a, interior(i, b));
    CHECK(interior(i, wedge(a, b)) == rhs);
  }
}

TEST_CASE("act2 on vectors and as a derivation") {
  // (X ^ Y) * Z = g(X, Z) Y - g(Y, Z) X
  CHECK(act2(Form::blade("e12"), vec(1)) == vec(2));
  CHECK(act2(Form::blade("e12"), vec(2)) == -vec(1));
  CHECK(act2(Form::blade("e12"), vec(3)).is_zero());
  CHECK(pull2(Form::blade("e12"), vec(1)) == -vec(2));
  std::mt19937_64 rng(16);
  for (int n = 0; n < 40; ++n) {
    std::uniform_int_distribution<int> deg(0, 4);
    const Form g = random_form(rng, 2, 3), a = random_form(rng, deg(rng)), b = random_form(rng, deg(rng));
    CHECK(act2(g, wedge(a, b)) == wedge(act2(g, a), b) + wedge(a, act2(g, b)));
  }
}

TEST_CASE("act2 preserves the inner product") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 30; ++n) {
    const Form g = random_form(rng, 2, 3), a = random_form(rng, 3), b = random_form(rng, 3);
    CHECK(inner(act2(g, a), b) == -inner(a, act2(g, b)));
  }
}

TEST_CASE("contract of a 2-form carries a factor one half") {
  const Form a = Form::blade("e12");
  CHECK(contract(a, Form::blade("e123")) == Scalar(make_rational(1, 2)) * interior(a, Form::blade("e123")));
  CHECK(contract(vec(1), Form::blade("e123")) == Form::blade("e23"));
  CHECK_THROWS_AS(contract(Form::blade("e1234"), Form::blade("e12")), std::invalid_argument);
}

TEST_CASE("coordinates round trip") {
  std::mt19937_64 rng(18);
  for (int p = 0; p <= 8; ++p) {
    const Form a = random_form(rng, p);
    CHECK(from_coords(to_coords(a, p), p) == a);
  }
  CHECK_THROWS_AS(to_coords(Form::blade("e12"), 3), std::invalid_argument);
}

TEST_CASE("form grammar") {
  CHECK(parse_real_form("-1/3 e134 + 1 r3 e25") ==
        Scalar(make_rational(-1, 3)) * Form::blade("e134") + Scalar(0, 1) * Form::blade("e25"));
  const CForm z = parse_form("1 r3 i e23 - e45");
  CHECK(z.coeff("e23") == CScalar(Scalar(), Scalar(0, 1)));
  CHECK(z.coeff("e45") == CScalar(-1));
  std::mt19937_64 rng(19);
  for (int p = 1; p <= 5; ++p) {
    const Form a = random_form(rng, p);
    if (a.is_zero()) continue;
    CHECK(parse_real_form(format_form(a)) == a);
  }
}

TEST_CASE("form grammar errors carry an offset") {
  try {
    parse_real_form("e12 + e19");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() >= 6);
  }
  CHECK_THROWS_AS(parse_real_form("1 i e12"), std::exception);
}

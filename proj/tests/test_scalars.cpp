#include <doctest.h>

#include "triality/scalars.hpp"

#include <random>

using namespace triality;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  return make_rational(num(rng), den(rng));
}

Scalar random_scalar(std::mt19937_64& rng) { return Scalar(random_rational(rng), random_rational(rng)); }

CScalar random_cscalar(std::mt19937_64& rng) { return CScalar(random_scalar(rng), random_scalar(rng)); }

} // namespace

TEST_CASE("sqrt3 squares to three") {
  CHECK(Scalar::sqrt3() * Scalar::sqrt3() == Scalar(3));
}

TEST_CASE("inverse of 1 + sqrt3") {
  Scalar x(1, 1);
  Scalar expected(make_rational(-1, 2), make_rational(1, 2));
  CHECK(x.inverse() == expected);
  CHECK(x * expected == Scalar(1));
}

TEST_CASE("modulus of (1 + i sqrt3)/8") {
  CScalar z(make_rational(1, 8), Scalar(0, make_rational(1, 8)));
  CHECK(z * z.conj() == CScalar(make_rational(1, 16)));
  CHECK(z.abs2() == Scalar(make_rational(1, 16)));
}

TEST_CASE("division by zero is reported") {
  CHECK_FALSE(checked_div(Scalar(1), Scalar()).has_value());
  CHECK_FALSE(checked_div(CScalar(1), CScalar()).has_value());
  CHECK(checked_div(Scalar(1), Scalar(2)).value() == Scalar(make_rational(1, 2)));
  CHECK_THROWS_AS(Scalar(1) / Scalar(), std::domain_error);
}

TEST_CASE("literal grammar") {
  CHECK(parse_real_scalar("\xE2\x88\x92" "3/4 r3") == Scalar(0, make_rational(-3, 4)));
  CHECK(parse_real_scalar("-3/4 r3") == Scalar(0, make_rational(-3, 4)));
  CHECK(parse_real_scalar("1/2") == Scalar(make_rational(1, 2)));
  CHECK(parse_scalar("1/8 + 1/8 r3 i") == CScalar(make_rational(1, 8), Scalar(0, make_rational(1, 8))));
  CHECK(parse_scalar("2 - 2 r3 i") == CScalar(2, Scalar(0, -2)));
  CHECK(parse_real_scalar("4/6") == Scalar(make_rational(2, 3)));
}

TEST_CASE("malformed literals report an offset") {
  try {
    parse_scalar("1/2 + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_real_scalar("1 i"), ParseError);
}

TEST_CASE("formatting is canonical") {
  CHECK(format_scalar(Scalar(0, make_rational(-3, 4))) == "-3/4 r3");
  CHECK(format_scalar(Scalar()) == "0");
  CHECK(format_scalar(CScalar(make_rational(1, 8), Scalar(0, make_rational(1, 8)))) == "1/8 + 1/8 r3 i");
  CHECK(format_scalar(CScalar(2, Scalar(0, -2))) == "2 - 2 r3 i");
}

TEST_CASE("float embedding") {
  CHECK(to_float(Scalar(0, 1)) == 1.7320508075688772);
  CHECK(to_float(Scalar(make_rational(1, 2))) == 0.5);
  CHECK(to_float(Scalar(make_rational(1, 4), make_rational(1, 4))) == doctest::Approx(0.6830127018922193).epsilon(1e-15));
}

TEST_CASE("ordering and square roots") {
  CHECK(Scalar(2, -1).sign() > 0);
  CHECK(Scalar(1, -1).sign() < 0);
  CHECK(Scalar(-2, 1).sign() < 0);
  CHECK(sqrt(Scalar(make_rational(1, 4))).value() == Scalar(make_rational(1, 2)));
  CHECK(sqrt(Scalar(make_rational(3, 4))).value() == Scalar(0, make_rational(1, 2)));
  CHECK(sqrt(Scalar(4, 2)).value() == Scalar(1, 1));
  CHECK(sqrt(Scalar(4, -2)).value() == Scalar(-1, 1));
  CHECK_FALSE(sqrt(Scalar(2)).has_value());
  CHECK_FALSE(sqrt(Scalar(-1)).has_value());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240917);
  for (int t = 0; t < 1000; ++t) {
    CScalar x = random_cscalar(rng), y = random_cscalar(rng), z = random_cscalar(rng);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x * y == y * x);
    REQUIRE(x + y == y + x);
    REQUIRE(x.conj().conj() == x);
    REQUIRE(x.abs2().sign() >= 0);
    if (!y.is_zero()) REQUIRE((x / y) * y == x);
  }
}

TEST_CASE("conjugate product is the field norm") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng);
    Scalar x(a, b);
    CHECK(x * x.conj3() == Scalar(Rational(a * a - 3 * b * b)));
  }
}

TEST_CASE("format then parse is the identity") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    CScalar x = random_cscalar(rng);
    REQUIRE(parse_scalar(format_scalar(x)) == x);
    Scalar r = random_scalar(rng);
    REQUIRE(parse_real_scalar(format_scalar(r)) == r);
  }
}

#include <doctest.h>

#include "triality/obstructions.hpp"

#include <random>

using namespace triality;

namespace {

CharData su3_datum() {
  // 4 p2 = p1^2 = 216 * 40, e = 0, sgn = 16 A-hat
  CharData d;
  d.p1_squared_M = 8640;
  d.p2_M = 2160;
  d.euler_M = 0;
  d.signature = 144;
  d.p1_div_by_6 = d.w_classes_vanish_except_w4 = d.w4_squared_zero = d.spin = true;
  return d;
}

CharData random_datum(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> k(-40, 40), e(-2, 2), coin(0, 1);
  CharData d;
  d.p1_squared_M = 216 * k(rng);
  d.p2_M = coin(rng) ? d.p1_squared_M / 4 : mpz_class(54 * k(rng));
  d.euler_M = coin(rng) ? 0 : e(rng);
  d.signature = 16 * k(rng);
  d.p1_div_by_6 = coin(rng);
  d.w_classes_vanish_except_w4 = coin(rng);
  d.w4_squared_zero = coin(rng);
  d.spin = coin(rng);
  return d;
}

} // namespace

TEST_CASE("A-hat") {
  CharData d;
  d.p1_squared_M = 960;
  d.p2_M = 240;
  CHECK(ahat_eval(d) == Rational(1));
  d.p1_squared_M = 7;
  d.p2_M = 0;
  CHECK(ahat_eval(d) == make_rational(49, 5760));
}

TEST_CASE("SU(3) datum passes") {
  const auto d = su3_datum();
  CHECK(necessary_psu3(d).passed());
  const auto lift = su3_lift_check(d);
  CHECK(lift.passed());
  CHECK(sgn_identity_check(d).verdict == Verdict::pass);
  // A-hat = 9: the informational items fail without changing the verdict
  CHECK(lift.find("ahat_40")->verdict == Verdict::fail);
  CHECK(lift.find("sgn_640")->verdict == Verdict::fail);
}

TEST_CASE("individual failures") {
  auto d = su3_datum();
  d.p1_squared_M = 36;
  d.p2_M = 9;
  CHECK(su3_lift_check(d).find("p1_squared_216")->verdict == Verdict::fail);
  d = su3_datum();
  d.euler_M = 2;
  CHECK(necessary_psu3(d).find("euler")->verdict == Verdict::fail);
  d = su3_datum();
  d.p2_M = 100;
  CHECK(necessary_psu3(d).find("pontryagin")->verdict == Verdict::fail);
  CHECK(sgn_identity_check(d).verdict == Verdict::not_applicable);
  d = su3_datum();
  d.signature = 8;
  CHECK(sgn_identity_check(d).verdict == Verdict::fail);
}

TEST_CASE("spin index is integral on the lattice") {
  for (long k = -3; k <= 3; ++k) {
    CharData d = su3_datum();
    d.p1_squared_M = 8640 * k;
    d.p2_M = 2160 * k;
    CHECK(su3_lift_check(d).find("spin_index")->verdict == Verdict::pass);
  }
}

TEST_CASE("clearing a flag never turns a failure into a pass") {
  std::mt19937_64 rng(71);
  for (int n = 0; n < 300; ++n) {
    const CharData d = random_datum(rng);
    for (int f = 0; f < 4; ++f) {
      CharData w = d;
      bool* flags[] = {&w.p1_div_by_6, &w.w_classes_vanish_except_w4, &w.w4_squared_zero, &w.spin};
      *flags[f] = false;
      if (!necessary_psu3(d).passed()) CHECK_FALSE(necessary_psu3(w).passed());
      if (!su3_lift_check(d).passed()) CHECK_FALSE(su3_lift_check(w).passed());
    }
  }
}

TEST_CASE("parsing") {
  const auto d = parse_char_data({"p1_squared_M=8640", "p2_M = 2160", "signature=\xE2\x88\x92" "16", "spin=yes"});
  CHECK(d.p1_squared_M == 8640);
  CHECK(d.p2_M == 2160);
  CHECK(d.signature == -16);
  CHECK(d.spin);
  CHECK_FALSE(d.p1_div_by_6);
  const auto t = parse_char_data_text("# comment\np1_squared_M=216  # trailing\n\neuler_M=0\nw4_squared_zero=1\n");
  CHECK(t.p1_squared_M == 216);
  CHECK(t.w4_squared_zero);
  CHECK_THROWS_AS(parse_char_data({"colour=blue"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_char_data({"p2_M=1.5"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_char_data({"spin=maybe"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_char_data({"spin"}), std::invalid_argument);
}

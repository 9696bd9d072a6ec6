#pragma once

#include "triality/exterior.hpp"

#include <random>

namespace triality::testing {

inline Scalar small_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4), coin(0, 3);
  Rational a = make_rational(num(rng), den(rng));
  Rational b = coin(rng) == 0 ? make_rational(num(rng), den(rng)) : Rational(0);
  return Scalar(a, b);
}

// A homogeneous p-form with a handful of random terms.
inline Form random_form(std::mt19937_64& rng, int p, int terms = 4) {
  Form out;
  const auto& bs = basis(p);
  std::uniform_int_distribution<std::size_t> pick(0, bs.size() - 1);
  for (int t = 0; t < terms; ++t) out.add_term(bs[pick(rng)], small_scalar(rng));
  return out;
}

inline Form vec(int i) { return Form::blade(Blade(1) << (i - 1)); }

} // namespace triality::testing

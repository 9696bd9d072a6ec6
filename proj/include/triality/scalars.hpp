#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace triality {

using Rational = mpq_class;

// n/d in lowest terms
Rational make_rational(long n, long d = 1);

std::string format_rational(const Rational& q);
std::optional<Rational> rational_sqrt(const Rational& q);

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// a + b*sqrt(3)
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}
  Scalar(Rational a) : a_(std::move(a)) {}
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar sqrt3() { return Scalar(0, 1); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;

  // b -> -b
  Scalar conj3() const { return Scalar(a_, -b_); }
  // a^2 - 3b^2
  Rational norm() const { return a_ * a_ - 3 * b_ * b_; }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

private:
  Rational a_;
  Rational b_;
};

// re + im*i with re, im in Q(sqrt3)
class CScalar {
public:
  CScalar() = default;
  CScalar(long v) : re_(v) {}
  CScalar(Rational v) : re_(std::move(v)) {}
  CScalar(Scalar re) : re_(std::move(re)) {}
  CScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static CScalar i() { return CScalar(0, 1); }

  const Scalar& re() const noexcept { return re_; }
  const Scalar& im() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  CScalar conj() const { return CScalar(re_, -im_); }
  CScalar conj3() const { return CScalar(re_.conj3(), im_.conj3()); }
  Scalar abs2() const { return re_ * re_ + im_ * im_; }
  CScalar inverse() const;

  CScalar operator-() const { return CScalar(-re_, -im_); }
  CScalar& operator+=(const CScalar& o);
  CScalar& operator-=(const CScalar& o);
  CScalar& operator*=(const CScalar& o);
  CScalar& operator/=(const CScalar& o);

  friend CScalar operator+(CScalar x, const CScalar& y) { return x += y; }
  friend CScalar operator-(CScalar x, const CScalar& y) { return x -= y; }
  friend CScalar operator*(CScalar x, const CScalar& y) { return x *= y; }
  friend CScalar operator/(CScalar x, const CScalar& y) { return x /= y; }
  friend bool operator==(const CScalar& x, const CScalar& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

private:
  Scalar re_;
  Scalar im_;
};

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const CScalar& x) { return x.is_zero(); }
inline Scalar conj(const Scalar& x) { return x; }
inline CScalar conj(const CScalar& x) { return x.conj(); }

// Division that reports a zero divisor instead of throwing.
std::optional<Scalar> checked_div(const Scalar& x, const Scalar& y);
std::optional<CScalar> checked_div(const CScalar& x, const CScalar& y);

// Principal square root inside Q(sqrt3), if it exists there.
std::optional<Scalar> sqrt(const Scalar& x);

// Non-authoritative float value.
double to_float(const Scalar& s);

std::string format_scalar(const Scalar& s);
std::string format_scalar(const CScalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const CScalar& s);

CScalar parse_scalar(std::string_view text);
Scalar parse_real_scalar(std::string_view text);

// Parsing pieces shared with the form grammar.
void skip_spaces(std::string_view text, std::size_t& pos);
// Consumes '-' or U+2212; returns false if neither is present.
bool consume_minus(std::string_view text, std::size_t& pos);
// One term `rational [r3] [i]`; pos is advanced past it.
CScalar parse_scalar_term(std::string_view text, std::size_t& pos);

} // namespace triality

#include "triality/scalars.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace triality {

Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

int Scalar::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 3b^2
  int c = cmp(Rational(a_ * a_), Rational(3 * b_ * b_));
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rational n = norm();
  return Scalar(a_ / n, -b_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + 3 * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

CScalar CScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar n = abs2().inverse();
  return CScalar(re_ * n, -im_ * n);
}

CScalar& CScalar::operator+=(const CScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CScalar& CScalar::operator-=(const CScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CScalar& CScalar::operator*=(const CScalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Scalar nr = re_ * o.re_ - im_ * o.im_;
  Scalar ni = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(nr);
  im_ = std::move(ni);
  return *this;
}

CScalar& CScalar::operator/=(const CScalar& o) { return *this *= o.inverse(); }

std::optional<Scalar> checked_div(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) return std::nullopt;
  return x / y;
}

std::optional<CScalar> checked_div(const CScalar& x, const CScalar& y) {
  if (y.is_zero()) return std::nullopt;
  return x / y;
}

std::optional<Scalar> sqrt(const Scalar& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return Scalar();
  // (p + q r3)^2 = p^2 + 3q^2 + 2pq r3
  if (x.is_rational()) {
    if (auto r = rational_sqrt(x.a())) return Scalar(*r);
    if (auto r = rational_sqrt(Rational(x.a() / 3))) return Scalar(0, *r);
    return std::nullopt;
  }
  auto disc = rational_sqrt(x.norm());
  if (!disc) return std::nullopt;
  for (int s : {1, -1}) {
    Rational p2 = (x.a() + s * *disc) / 2;
    auto p = rational_sqrt(p2);
    if (!p || sgn(*p) == 0) continue;
    Scalar r(*p, x.b() / (2 * *p));
    if (r.sign() < 0) r = -r;
    if (r * r == x) return r;
  }
  return std::nullopt;
}

double to_float(const Scalar& s) { return s.a().get_d() + s.b().get_d() * 1.7320508075688772; }

namespace {

struct Term {
  Rational coeff;
  const char* suffix;
};

std::string join_terms(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (sgn(t.coeff) == 0) continue;
    Rational mag = abs(t.coeff);
    if (out.empty()) {
      if (sgn(t.coeff) < 0) out += "-";
    } else {
      out += sgn(t.coeff) < 0 ? " - " : " + ";
    }
    out += format_rational(mag);
    out += t.suffix;
  }
  return out.empty() ? "0" : out;
}

} // namespace

std::string format_scalar(const Scalar& s) { return join_terms({{s.a(), ""}, {s.b(), " r3"}}); }

std::string format_scalar(const CScalar& s) {
  return join_terms({{s.re().a(), ""}, {s.re().b(), " r3"}, {s.im().a(), " i"}, {s.im().b(), " r3 i"}});
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << format_scalar(s); }
std::ostream& operator<<(std::ostream& os, const CScalar& s) { return os << format_scalar(s); }

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool consume_minus(std::string_view text, std::size_t& pos) {
  if (pos < text.size() && text[pos] == '-') {
    ++pos;
    return true;
  }
  if (text.substr(pos, 3) == "\xE2\x88\x92") {
    pos += 3;
    return true;
  }
  return false;
}

namespace {

mpz_class parse_digits(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError(start, "expected digits");
  return mpz_class(std::string(text.substr(start, pos - start)));
}

bool consume_word(std::string_view text, std::size_t& pos, std::string_view word) {
  if (text.substr(pos, word.size()) != word) return false;
  std::size_t end = pos + word.size();
  if (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end]))) return false;
  pos = end;
  return true;
}

} // namespace

CScalar parse_scalar_term(std::string_view text, std::size_t& pos) {
  skip_spaces(text, pos);
  bool neg = consume_minus(text, pos);
  if (!neg && pos < text.size() && text[pos] == '+') ++pos;
  skip_spaces(text, pos);
  mpz_class num = parse_digits(text, pos);
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t at = pos;
    den = parse_digits(text, pos);
    if (den == 0) throw ParseError(at, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  std::size_t save = pos;
  skip_spaces(text, pos);
  bool r3 = consume_word(text, pos, "r3");
  if (!r3) pos = save;
  save = pos;
  skip_spaces(text, pos);
  bool im = consume_word(text, pos, "i");
  if (!im) pos = save;
  Scalar s = r3 ? Scalar(0, q) : Scalar(q);
  return im ? CScalar(Scalar(), s) : CScalar(s);
}

CScalar parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) throw ParseError(pos, "empty scalar");
  CScalar total = parse_scalar_term(text, pos);
  for (;;) {
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    std::size_t at = pos;
    bool neg = consume_minus(text, pos);
    if (!neg) {
      if (text[pos] != '+') throw ParseError(at, "expected '+' or '-'");
      ++pos;
    }
    CScalar t = parse_scalar_term(text, pos);
    total += neg ? -t : t;
  }
  return total;
}

Scalar parse_real_scalar(std::string_view text) {
  CScalar c = parse_scalar(text);
  if (!c.is_real()) throw ParseError(0, "expected a real scalar");
  return c.re();
}

} // namespace triality

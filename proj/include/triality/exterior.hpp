#pragma once

#include "triality/linalg.hpp"
#include "triality/scalars.hpp"

#include <bit>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triality {

// Bit i-1 stands for e_i; the indices of a blade are always increasing.
using Blade = unsigned;

inline constexpr int kDim = 8;
inline constexpr Blade kVolume = 0xFF;

inline int grade(Blade b) { return std::popcount(b); }
Blade make_blade(std::initializer_list<int> indices);
Blade parse_blade(std::string_view name);
std::vector<int> blade_indices(Blade b);
std::string blade_name(Blade b);

// Sign of e_a ^ e_b relative to e_{a|b}; 0 when the blades overlap.
int wedge_sign(Blade a, Blade b);

// Blades of grade p in lexicographic order of their index lists.
const std::vector<Blade>& basis(int p);
std::size_t basis_position(Blade b);
inline std::size_t binomial8(int p) { return basis(p).size(); }

template <class T>
class Multivector {
public:
  Multivector() = default;

  static Multivector blade(Blade b, T c = T(1)) {
    Multivector m;
    m.add_term(b, c);
    return m;
  }
  static Multivector blade(std::string_view name, T c = T(1)) { return blade(parse_blade(name), std::move(c)); }

  const std::map<Blade, T>& terms() const noexcept { return terms_; }

  T coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? T() : it->second;
  }
  T coeff(std::string_view name) const { return coeff(parse_blade(name)); }

  void add_term(Blade b, const T& c) {
    if (triality::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (triality::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // The common grade of all terms; nullopt for mixed or zero forms.
  std::optional<int> homogeneous_grade() const {
    std::optional<int> g;
    for (const auto& [b, c] : terms_) {
      if (g && *g != grade(b)) return std::nullopt;
      g = grade(b);
    }
    return g;
  }

  Multivector grade_part(int p) const {
    Multivector out;
    for (const auto& [b, c] : terms_)
      if (grade(b) == p) out.terms_.emplace(b, c);
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  Multivector& operator*=(const T& s) {
    if (triality::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= T(-1); }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend bool operator==(const Multivector& a, const Multivector& b) { return a.terms_ == b.terms_; }

private:
  std::map<Blade, T> terms_;
};

using Form = Multivector<Scalar>;
using CForm = Multivector<CScalar>;

inline bool is_zero(const Form& f) { return f.is_zero(); }
inline bool is_zero(const CForm& f) { return f.is_zero(); }

CForm to_complex(const Form& f);
// Real part; throws if an imaginary part is present.
Form to_real(const CForm& f);
CForm conj(const CForm& f);

template <class T>
Multivector<T> wedge(const Multivector<T>& a, const Multivector<T>& b) {
  Multivector<T> out;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms()) {
      int s = wedge_sign(ka, kb);
      if (s == 0) continue;
      T c = va * vb;
      out.add_term(ka | kb, s > 0 ? c : -c);
    }
  return out;
}

// e_i contracted into alpha (metric adjoint of e_i ^ .).
template <class T>
Multivector<T> interior(int i, const Multivector<T>& alpha) {
  const Blade bit = Blade(1) << (i - 1);
  Multivector<T> out;
  for (const auto& [k, v] : alpha.terms()) {
    if (!(k & bit)) continue;
    int before = std::popcount(k & (bit - 1));
    out.add_term(k ^ bit, before % 2 ? -v : v);
  }
  return out;
}

// Metric adjoint of x ^ . for arbitrary x.
template <class T>
Multivector<T> interior(const Multivector<T>& x, const Multivector<T>& alpha) {
  Multivector<T> out;
  for (const auto& [k, v] : x.terms()) {
    Multivector<T> t = alpha;
    for (int i : blade_indices(k)) t = interior(i, t);
    out += v * t;
  }
  return out;
}

// x contracted into alpha. Grade-2 x carries a factor 1/2, so that a
// Kaehler form w of the quaternionic 4-form satisfies w _| Omega = 5w.
template <class T>
Multivector<T> contract(const Multivector<T>& x, const Multivector<T>& alpha) {
  auto g = x.homogeneous_grade();
  if (x.is_zero()) return {};
  if (!g) throw std::invalid_argument("contract: inhomogeneous contracting form");
  if (auto ga = alpha.homogeneous_grade(); ga && *g > *ga)
    throw std::invalid_argument("contract: grade of x exceeds grade of alpha");
  Multivector<T> out = interior(x, alpha);
  if (*g == 2) out *= T(make_rational(1, 2));
  return out;
}

template <class T>
Multivector<T> hodge_star(const Multivector<T>& a) {
  Multivector<T> out;
  for (const auto& [k, v] : a.terms()) {
    Blade c = kVolume ^ k;
    out.add_term(c, wedge_sign(k, c) > 0 ? v : -v);
  }
  return out;
}

// Bilinear pairing of orthonormal blades.
template <class T>
T inner(const Multivector<T>& a, const Multivector<T>& b) {
  T s;
  for (const auto& [k, v] : a.terms()) {
    auto it = b.terms().find(k);
    if (it != b.terms().end()) s += v * it->second;
  }
  return s;
}

// so(8) action of a 2-form: (X^Y)*Z = g(X,Z)Y - g(Y,Z)X, as a derivation.
template <class T>
Multivector<T> act2(const Multivector<T>& a, const Multivector<T>& alpha) {
  if (a.is_zero()) return {};
  if (a.homogeneous_grade() != 2) throw std::invalid_argument("act2: expected a 2-form");
  Multivector<T> out;
  for (const auto& [ka, va] : a.terms()) {
    auto xy = blade_indices(ka);
    const Blade bx = Blade(1) << (xy[0] - 1), by = Blade(1) << (xy[1] - 1);
    for (const auto& [k, v] : alpha.terms()) {
      // e_x -> e_y
      if ((k & bx) && !(k & by)) {
        Blade rest = k ^ bx;
        int s = wedge_sign(bx, rest) * wedge_sign(by, rest);
        T c = va * v;
        out.add_term(rest | by, s > 0 ? c : -c);
      }
      // e_y -> -e_x
      if ((k & by) && !(k & bx)) {
        Blade rest = k ^ by;
        int s = -wedge_sign(by, rest) * wedge_sign(bx, rest);
        T c = va * v;
        out.add_term(rest | bx, s > 0 ? c : -c);
      }
    }
  }
  return out;
}

// 2-form acting through the dual representation on forms: a.g = -act2(a, g).
template <class T>
Multivector<T> pull2(const Multivector<T>& a, const Multivector<T>& alpha) {
  return -act2(a, alpha);
}

// Pushforward along the linear map e_i -> sum_k m(k, i) e_k.
Form apply_linear(const Matrix<Scalar>& m, const Form& alpha);

template <class T>
std::vector<T> to_coords(const Multivector<T>& a, int p) {
  std::vector<T> v(binomial8(p));
  for (const auto& [k, c] : a.terms()) {
    if (grade(k) != p) throw std::invalid_argument("to_coords: grade mismatch");
    v[basis_position(k)] = c;
  }
  return v;
}

template <class T>
Multivector<T> from_coords(const std::vector<T>& v, int p) {
  Multivector<T> out;
  const auto& bs = basis(p);
  for (std::size_t t = 0; t < v.size(); ++t) out.add_term(bs[t], v[t]);
  return out;
}

// Matrix of a linear map Lambda^p -> Lambda^q in blade coordinates.
template <class T>
Matrix<T> operator_matrix(const std::function<Multivector<T>(const Multivector<T>&)>& f, int p, int q) {
  const auto& src = basis(p);
  Matrix<T> m(binomial8(q), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    auto img = f(Multivector<T>::blade(src[j]));
    for (const auto& [k, c] : img.terms()) {
      if (grade(k) != q) throw std::logic_error("operator_matrix: image has wrong grade");
      m(basis_position(k), j) = c;
    }
  }
  return m;
}

template <class T>
Multivector<T> apply_matrix(const Matrix<T>& m, const Multivector<T>& a, int p, int q) {
  return from_coords<T>(m * to_coords(a, p), q);
}

// Form grammar: term (('+'|'-') term)*, term = [scalar ['*']] blade.
CForm parse_form(std::string_view text);
Form parse_real_form(std::string_view text);
std::string format_form(const Form& f);
std::string format_form(const CForm& f);

} // namespace triality

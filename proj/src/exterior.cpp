#include "triality/exterior.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace triality {

Blade make_blade(std::initializer_list<int> indices) {
  Blade b = 0;
  for (int i : indices) {
    if (i < 1 || i > kDim) throw std::invalid_argument("blade index out of range");
    b |= Blade(1) << (i - 1);
  }
  return b;
}

Blade parse_blade(std::string_view name) {
  if (name.empty() || name[0] != 'e') throw std::invalid_argument("blade name must start with 'e'");
  if (name.size() == 1) throw std::invalid_argument("blade name has no indices");
  Blade b = 0;
  int last = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    char c = name[k];
    if (c < '1' || c > '8') throw std::invalid_argument("blade index must be a digit 1..8");
    int i = c - '0';
    if (i <= last) throw std::invalid_argument("blade indices must be strictly increasing");
    last = i;
    b |= Blade(1) << (i - 1);
  }
  return b;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; i < kDim; ++i)
    if (b >> i & 1) out.push_back(i + 1);
  return out;
}

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string s = "e";
  for (int i : blade_indices(b)) s += char('0' + i);
  return s;
}

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int i = 0; i < kDim; ++i)
    if (a >> i & 1) swaps += std::popcount(b & ((Blade(1) << i) - 1));
  return swaps % 2 ? -1 : 1;
}

namespace {

struct BasisTables {
  std::array<std::vector<Blade>, kDim + 1> by_grade;
  std::array<std::size_t, 256> position{};

  BasisTables() {
    std::vector<Blade> all;
    for (Blade b = 0; b < 256; ++b) all.push_back(b);
    std::sort(all.begin(), all.end(), [](Blade x, Blade y) { return blade_indices(x) < blade_indices(y); });
    for (Blade b : all) {
      auto& v = by_grade[grade(b)];
      position[b] = v.size();
      v.push_back(b);
    }
  }
};

const BasisTables& tables() {
  static const BasisTables t;
  return t;
}

} // namespace

const std::vector<Blade>& basis(int p) { return tables().by_grade.at(p); }
std::size_t basis_position(Blade b) { return tables().position.at(b); }

CForm to_complex(const Form& f) {
  CForm out;
  for (const auto& [k, v] : f.terms()) out.add_term(k, CScalar(v));
  return out;
}

Form to_real(const CForm& f) {
  Form out;
  for (const auto& [k, v] : f.terms()) {
    if (!v.is_real()) throw std::invalid_argument("form has an imaginary part");
    out.add_term(k, v.re());
  }
  return out;
}

CForm conj(const CForm& f) {
  CForm out;
  for (const auto& [k, v] : f.terms()) out.add_term(k, v.conj());
  return out;
}

Form apply_linear(const Matrix<Scalar>& m, const Form& alpha) {
  std::array<Form, kDim> images;
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) images[i].add_term(Blade(1) << k, m(k, i));
  Form out;
  for (const auto& [b, v] : alpha.terms()) {
    Form t = Form::blade(0, v);
    for (int i : blade_indices(b)) t = wedge(t, images[i - 1]);
    out += t;
  }
  return out;
}

namespace {

Blade parse_blade_at(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos >= text.size() || text[pos] != 'e') throw ParseError(pos, "expected a blade such as e123");
  ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  try {
    return parse_blade(text.substr(start, pos - start));
  } catch (const std::invalid_argument& e) {
    throw ParseError(start, e.what());
  }
}

CScalar parse_coefficient(std::string_view text, std::size_t& pos) {
  if (text[pos] == '(') {
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError(pos, "unbalanced parenthesis");
    std::size_t inner_start = pos + 1;
    CScalar c;
    try {
      c = parse_scalar(text.substr(inner_start, close - inner_start));
    } catch (const ParseError& e) {
      throw ParseError(inner_start + e.offset(), "bad coefficient");
    }
    pos = close + 1;
    return c;
  }
  return parse_scalar_term(text, pos);
}

CForm parse_term(std::string_view text, std::size_t& pos) {
  skip_spaces(text, pos);
  if (pos >= text.size()) throw ParseError(pos, "expected a term");
  CScalar c(1);
  if (text[pos] != 'e') {
    c = parse_coefficient(text, pos);
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_spaces(text, pos);
    }
  }
  Blade b = parse_blade_at(text, pos);
  return CForm::blade(b, c);
}

} // namespace

CForm parse_form(std::string_view text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  bool neg = consume_minus(text, pos);
  CForm out = parse_term(text, pos);
  if (neg) out = -out;
  for (;;) {
    skip_spaces(text, pos);
    if (pos >= text.size()) break;
    std::size_t at = pos;
    bool minus = consume_minus(text, pos);
    if (!minus) {
      if (text[pos] != '+') throw ParseError(at, "expected '+' or '-' between terms");
      ++pos;
    }
    CForm t = parse_term(text, pos);
    if (minus) out -= t;
    else out += t;
  }
  return out;
}

Form parse_real_form(std::string_view text) {
  CForm f = parse_form(text);
  try {
    return to_real(f);
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "expected real coefficients");
  }
}

namespace {

template <class T>
std::string format_any(const Multivector<T>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  std::vector<std::pair<Blade, T>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return std::pair(grade(x.first), basis_position(x.first)) < std::pair(grade(y.first), basis_position(y.first));
  });
  for (const auto& [k, v] : terms) {
    std::string c = format_scalar(v);
    bool compound = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
    bool negative = !compound && c[0] == '-';
    std::string mag = negative ? c.substr(1) : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (compound) out += "(" + c + ") ";
    else if (mag != "1") out += mag + " ";
    out += blade_name(k);
  }
  return out;
}

} // namespace

std::string format_form(const Form& f) { return format_any(f); }
std::string format_form(const CForm& f) { return format_any(f); }

} // namespace triality

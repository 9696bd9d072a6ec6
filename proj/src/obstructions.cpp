#include "triality/obstructions.hpp"

#include <sstream>
#include <stdexcept>

namespace triality {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

mpz_class parse_integer(const std::string& key, const std::string& v) {
  std::string s = v;
  if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
  mpz_class z;
  if (s.empty() || z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw std::invalid_argument("obstruct: " + key + " expects an integer, got '" + v + "'");
  return z;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("obstruct: " + key + " expects true or false, got '" + v + "'");
}

void assign(CharData& d, std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) throw std::invalid_argument("obstruct: expected key=value, got '" + std::string(line) + "'");
  const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
  if (key == "p1_squared_M") d.p1_squared_M = parse_integer(key, value);
  else if (key == "p2_M") d.p2_M = parse_integer(key, value);
  else if (key == "euler_M") d.euler_M = parse_integer(key, value);
  else if (key == "signature") d.signature = parse_integer(key, value);
  else if (key == "p1_div_by_6") d.p1_div_by_6 = parse_bool(key, value);
  else if (key == "w_classes_vanish_except_w4") d.w_classes_vanish_except_w4 = parse_bool(key, value);
  else if (key == "w4_squared_zero") d.w4_squared_zero = parse_bool(key, value);
  else if (key == "spin") d.spin = parse_bool(key, value);
  else throw std::invalid_argument("obstruct: unknown key '" + key + "'");
}

Verdict of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

bool divides(long n, const mpz_class& x) { return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(n)) != 0; }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string str(const mpz_class& z) { return z.get_str(); }

CheckItem euler_item(const CharData& d) { return {"euler", of(d.euler_M == 0), "e[M] = " + str(d.euler_M)}; }

CheckItem pontryagin_item(const CharData& d) {
  return {"pontryagin", of(4 * d.p2_M == d.p1_squared_M),
          "4 p2[M] = " + str(mpz_class(4 * d.p2_M)) + ", p1^2[M] = " + str(d.p1_squared_M)};
}

CheckItem flag_item(const char* name, bool v) { return {name, of(v), v ? "true" : "false"}; }

} // namespace

CharData parse_char_data(const std::vector<std::string>& assignments) {
  CharData d;
  for (const auto& a : assignments) assign(d, a);
  return d;
}

CharData parse_char_data_text(std::string_view text) {
  CharData d;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (trim(line).empty()) continue;
    assign(d, line);
  }
  return d;
}

std::string format_char_data(const CharData& d) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream out;
  out << "p1_squared_M=" << d.p1_squared_M << " p2_M=" << d.p2_M << " euler_M=" << d.euler_M
      << " signature=" << d.signature << " p1_div_by_6=" << b(d.p1_div_by_6)
      << " w_classes_vanish_except_w4=" << b(d.w_classes_vanish_except_w4)
      << " w4_squared_zero=" << b(d.w4_squared_zero) << " spin=" << b(d.spin);
  return out.str();
}

Rational ahat_eval(const CharData& d) {
  Rational a(mpz_class(7 * d.p1_squared_M - 4 * d.p2_M), mpz_class(5760));
  a.canonicalize();
  return a;
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass: return "pass";
  case Verdict::fail: return "fail";
  case Verdict::not_applicable: return "not applicable";
  }
  return "?";
}

bool Checklist::passed() const {
  for (const auto& i : items)
    if (!i.informational && i.verdict != Verdict::pass) return false;
  return true;
}

const CheckItem* Checklist::find(std::string_view name) const {
  for (const auto& i : items)
    if (i.name == name) return &i;
  return nullptr;
}

CheckItem sgn_identity_check(const CharData& d) {
  if (4 * d.p2_M != d.p1_squared_M)
    return {"signature", Verdict::not_applicable, "requires 4 p2[M] = p1^2[M]"};
  const Rational sixteen_ahat = 16 * ahat_eval(d);
  const bool ok = Rational(d.signature) == sixteen_ahat && divides(16, d.signature);
  return {"signature", of(ok), "sgn = " + str(d.signature) + ", 16 A-hat = " + format_rational(sixteen_ahat)};
}

Checklist necessary_psu3(const CharData& d) {
  return {{euler_item(d), pontryagin_item(d), flag_item("w_classes", d.w_classes_vanish_except_w4),
           flag_item("w4_squared", d.w4_squared_zero), flag_item("spin", d.spin)}};
}

Checklist su3_lift_check(const CharData& d) {
  Checklist c{{euler_item(d), pontryagin_item(d), flag_item("p1_div_by_6", d.p1_div_by_6)}};
  c.items.push_back({"p1_squared_216", of(divides(216, d.p1_squared_M)), "p1^2[M] = " + str(d.p1_squared_M)});
  const Rational ahat = ahat_eval(d);
  Rational index = 3 * ahat - Rational(d.p1_squared_M, mpz_class(216));
  index.canonicalize();
  c.items.push_back({"spin_index", of(is_integer(index)), "3 A-hat - p1^2/216 = " + format_rational(index)});
  const Rational per40 = ahat / 40;
  c.items.push_back({"ahat_40", of(is_integer(per40)), "A-hat = " + format_rational(ahat), true});
  c.items.push_back({"sgn_640", of(divides(640, d.signature)), "sgn = " + str(d.signature), true});
  return c;
}

} // namespace triality

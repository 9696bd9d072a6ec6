#pragma once

#include "triality/scalars.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace triality {

// Characteristic numbers and flags of a closed 8-manifold, as claimed by the user.
struct CharData {
  mpz_class p1_squared_M;
  mpz_class p2_M;
  mpz_class euler_M;
  mpz_class signature;
  bool p1_div_by_6 = false;
  bool w_classes_vanish_except_w4 = false;
  bool w4_squared_zero = false;
  bool spin = false;
};

// Missing keys keep their defaults (0 / false); unknown keys, malformed
// integers or booleans throw std::invalid_argument.
CharData parse_char_data(const std::vector<std::string>& assignments);
// key=value per line, '#' starts a comment.
CharData parse_char_data_text(std::string_view text);
std::string format_char_data(const CharData& d);

// (7 p1^2 - 4 p2) / 5760
Rational ahat_eval(const CharData& d);

enum class Verdict { pass, fail, not_applicable };

std::string to_string(Verdict v);

struct CheckItem {
  std::string name;
  Verdict verdict;
  std::string detail;
  // reported, but not part of the overall verdict
  bool informational = false;
};

struct Checklist {
  std::vector<CheckItem> items;

  bool passed() const;
  const CheckItem* find(std::string_view name) const;
};

// signature = 16 A-hat and signature = 0 mod 16, when 4 p2 = p1^2.
CheckItem sgn_identity_check(const CharData& d);
Checklist necessary_psu3(const CharData& d);
Checklist su3_lift_check(const CharData& d);

} // namespace triality

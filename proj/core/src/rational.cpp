#include "zariski/rational.hpp"

#include <cctype>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rat {
    throw InputError("invalid rational literal '" + text +
                     "' (expected an integer or \"p/q\"; floating point is not accepted)");
  };

  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_plain_integer(text)) return fail();
    return Rat(Int(text, 10));
  }

  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_plain_integer(num) || !is_plain_integer(den)) return fail();
  Int d(den, 10);
  if (d == 0) throw InputError("invalid rational literal '" + text + "': zero denominator");
  Rat value(Int(num, 10), d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) {
  if (is_integral(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Int& value) { return value.get_str(); }

Int denominator_lcm(std::span<const Rat> values) {
  Int result = 1;
  for (const Rat& v : values) {
    Int lcm;
    mpz_lcm(lcm.get_mpz_t(), result.get_mpz_t(), v.get_den().get_mpz_t());
    result = lcm;
  }
  return result;
}

}  // namespace zariski

#include "fremlin/rational.hpp"

#include <cctype>

#include "fremlin/errors.hpp"

namespace fremlin {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("", "malformed rational \"" + std::string(text) + "\"");
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace fremlin

#include "cok/rational.hpp"

#include <cstdlib>

#include "cok/errors.hpp"

namespace cok {

namespace {

std::int64_t parse_integer(const std::string& text) {
  if (text.empty()) fail(errc::bad_rational, "empty integer");
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    fail(errc::bad_rational, "not an integer: '" + text + "'");
  }
  if (pos != text.size())
    fail(errc::bad_rational, "trailing characters in '" + text + "'");
  return value;
}

}  // namespace

rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return rational(parse_integer(text));
  std::int64_t num = parse_integer(text.substr(0, slash));
  std::int64_t den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(errc::bad_rational, "zero denominator in '" + text + "'");
  return rational(num, den);
}

std::string format_rational(const rational& value) {
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace cok

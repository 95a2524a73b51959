#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace cok {

// Exact rational arithmetic for block indices and ultrametric weights.
// Serialized form is "p/q" with q > 0 and gcd(p, q) = 1; a bare "p" parses
// as p/1.
using rational = boost::rational<std::int64_t>;

rational parse_rational(const std::string& text);
std::string format_rational(const rational& value);

}  // namespace cok

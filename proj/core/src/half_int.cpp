#include "relrep/half_int.hpp"

#include <cstdlib>
#include <ostream>

#include "relrep/error.hpp"

namespace relrep {

int parity_sign(HalfInt e) {
  if (!e.is_integer())
    throw NumericError("parity_sign: exponent " + to_string(e) + " is not an integer");
  return (e.twice() / 2) % 2 == 0 ? 1 : -1;
}

HalfInt parse_half_int(const std::string& text) {
  if (text.empty()) throw ParseError("empty half-integer literal");
  std::size_t slash = text.find('/');
  const std::string head = text.substr(0, slash);
  std::size_t used = 0;
  long long n = 0;
  try {
    n = std::stoll(head, &used);
  } catch (const std::exception&) {
    throw ParseError("bad half-integer literal '" + text + "'");
  }
  if (used != head.size())
    throw ParseError("bad half-integer literal '" + text + "'");
  if (slash == std::string::npos) return HalfInt::from_twice(2 * n);
  if (text.substr(slash + 1) != "2")
    throw ParseError("half-integer denominator must be 2 in '" + text + "'");
  return HalfInt::from_twice(n);
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << to_string(h); }

}  // namespace relrep

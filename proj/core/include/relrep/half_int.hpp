#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace relrep {

/// Exact half-integer, stored as twice its value.  Spins, helicities and
/// weight labels are all half-integers; keeping them exact avoids any
/// floating-point drift in indexing and parity factors.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  /// From an integer value (e.g. HalfInt(2) is the number 2).
  constexpr HalfInt(int n) : twice_(2 * n) {}

  /// From twice the value (e.g. from_twice(3) is 3/2).
  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// True for 1/2, 3/2, ... and their negatives.
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
  double value() const { return 0.5 * static_cast<double>(twice_); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

 private:
  std::int64_t twice_ = 0;
};

/// (-1)^e for half-integer e; throws if e is not an integer.
int parity_sign(HalfInt e);

/// Parse "n" or "n/2" (e.g. "2", "3/2", "-1/2").
HalfInt parse_half_int(const std::string& text);

/// Render as "n" for integers, "t/2" otherwise; inverse of parse_half_int.
std::string to_string(HalfInt h);

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace relrep

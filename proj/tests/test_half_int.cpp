#include "doctest.h"

#include <sstream>

#include "relrep/error.hpp"
#include "relrep/half_int.hpp"

using namespace relrep;

TEST_CASE("half_int_stores_twice_value_exactly") {
  CHECK((HalfInt(2).twice()) == (4));
  CHECK((HalfInt::from_twice(3).twice()) == (3));
  CHECK((HalfInt::from_twice(3).value()) == (1.5));
  CHECK((HalfInt().twice()) == (0));
}

TEST_CASE("half_int_integer_and_half_odd_predicates") {
  CHECK(HalfInt(2).is_integer());
  CHECK(HalfInt(-1).is_integer());
  CHECK(HalfInt::from_twice(1).is_half_odd());
  CHECK(HalfInt::from_twice(-3).is_half_odd());
  CHECK_FALSE(HalfInt::from_twice(1).is_integer());
}

TEST_CASE("half_int_arithmetic_and_comparison") {
  const HalfInt a = HalfInt::from_twice(3);   // 3/2
  const HalfInt b = HalfInt::from_twice(-1);  // -1/2
  CHECK(((a + b).twice()) == (2));
  CHECK(((a - b).twice()) == (4));
  CHECK(((-a).twice()) == (-3));
  CHECK(a > b);
  CHECK(b < HalfInt(0));
  CHECK(a == HalfInt::from_twice(3));
  HalfInt c = a;
  c += b;
  CHECK((c.twice()) == (2));
  c -= b;
  CHECK(c == a);
}

TEST_CASE("parity_sign_alternates_on_integers") {
  CHECK((parity_sign(HalfInt(0))) == (1));
  CHECK((parity_sign(HalfInt(1))) == (-1));
  CHECK((parity_sign(HalfInt(2))) == (1));
  CHECK((parity_sign(HalfInt(-3))) == (-1));
}

TEST_CASE("parity_sign_rejects_half_odd_exponent") {
  CHECK_THROWS_AS(parity_sign(HalfInt::from_twice(1)), NumericError);
}

TEST_CASE("parse_half_int_accepts_integers_and_halves") {
  CHECK((parse_half_int("2").twice()) == (4));
  CHECK((parse_half_int("-1").twice()) == (-2));
  CHECK((parse_half_int("3/2").twice()) == (3));
  CHECK((parse_half_int("-5/2").twice()) == (-5));
  CHECK((parse_half_int("0").twice()) == (0));
}

TEST_CASE("parse_half_int_rejects_malformed_text") {
  CHECK_THROWS_AS(parse_half_int(""), ParseError);
  CHECK_THROWS_AS(parse_half_int("x"), ParseError);
  CHECK_THROWS_AS(parse_half_int("1/3"), ParseError);
  CHECK_THROWS_AS(parse_half_int("3/"), ParseError);
  CHECK_THROWS_AS(parse_half_int("1.5"), ParseError);
}

TEST_CASE("to_string_round_trips_parse") {
  for (int t = -7; t <= 7; ++t) {
    const HalfInt h = HalfInt::from_twice(t);
    CHECK(parse_half_int(to_string(h)) == h);
  }
  CHECK((to_string(HalfInt::from_twice(3))) == ("3/2"));
  CHECK((to_string(HalfInt(2))) == ("2"));
  std::ostringstream os;
  os << HalfInt::from_twice(-1);
  CHECK((os.str()) == ("-1/2"));
}

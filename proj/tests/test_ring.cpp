// Tests for the coefficient-ring layer: spec parsing, arithmetic, units,
// element text I/O over Z/n, Galois fields, and the Laurent ring.
#include <catch2/catch_amalgamated.hpp>

#include "bbrack/ring.hpp"

using bbrack::Elem;
using bbrack::Error;
using bbrack::Ring;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;

static std::vector<long long> unit_codes(const Ring& R) {
  std::vector<long long> out;
  for (auto& u : R.units()) out.push_back(u.code);
  return out;
}

TEST_CASE("ring spec parsing and round trips", "[ring]") {
  SECTION("modular") {
    Ring R = Ring::parse_spec("Z5");
    CHECK(R.spec_string() == "Z5");
    CHECK(R.kind() == Ring::Kind::Modular);
    CHECK(R.finite());
    CHECK(R.size() == 5);
  }
  SECTION("galois") {
    Ring R = Ring::parse_spec("GF(2^3;1+t+t^3)");
    CHECK(R.spec_string() == "GF(2^3;1+t+t^3)");
    CHECK(R.kind() == Ring::Kind::Galois);
    CHECK(R.size() == 8);
    Ring R9 = Ring::parse_spec("GF(3^2;1+t^2)");
    CHECK(R9.size() == 9);
  }
  SECTION("laurent") {
    Ring R = Ring::parse_spec("Laurent");
    CHECK(R.spec_string() == "Laurent");
    CHECK_FALSE(R.finite());
    CHECK(R.kind() == Ring::Kind::Laurent);
  }
  SECTION("equality is by spec") {
    CHECK(Ring::parse_spec("Z5") == Ring::modular(5));
    CHECK(Ring::parse_spec("Z5") != Ring::parse_spec("Z7"));
  }
  SECTION("rejected specs") {
    CHECK_THROWS_MATCHES(Ring::parse_spec("Q5"), Error,
                         Catch::Matchers::MessageMatches(
                             StartsWith("ParseError: unknown ring spec")));
    CHECK_THROWS_AS(Ring::parse_spec("Z1"), Error);
    CHECK_THROWS_AS(Ring::parse_spec("Z"), Error);
    CHECK_THROWS_AS(Ring::parse_spec("GF(2^3)"), Error);
    // reducible modulus polynomial: (1+t)^2 over GF(2)
    CHECK_THROWS_MATCHES(Ring::parse_spec("GF(2^2;1+t^2)"), Error,
                         Catch::Matchers::MessageMatches(ContainsSubstring(
                             "reducible")));
    // non-prime characteristic
    CHECK_THROWS_AS(Ring::parse_spec("GF(4^1;t)"), Error);
    // non-monic / wrong-degree modulus
    CHECK_THROWS_AS(Ring::parse_spec("GF(2^3;1+t)"), Error);
  }
}

TEST_CASE("modular arithmetic", "[ring]") {
  Ring R = Ring::modular(5);
  CHECK(R.zero().code == 0);
  CHECK(R.one().code == 1);
  CHECK(R.from_int(-1).code == 4);
  CHECK(R.from_int(7).code == 2);
  CHECK(R.add(R.from_code(3), R.from_code(4)).code == 2);
  CHECK(R.sub(R.from_code(1), R.from_code(3)).code == 3);
  CHECK(R.neg(R.from_code(2)).code == 3);
  CHECK(R.mul(R.from_code(2), R.from_code(4)).code == 3);
  CHECK(R.inv(R.from_code(2)).code == 3);
  CHECK(R.inv(R.from_code(4)).code == 4);
  CHECK(R.pow(R.from_code(2), -2).code == 4);
  CHECK(R.pow(R.from_code(3), 0) == R.one());
  CHECK(R.is_zero(R.from_code(0)));
  CHECK_FALSE(R.is_zero(R.one()));
  CHECK(unit_codes(R) == std::vector<long long>{1, 2, 3, 4});
  CHECK(R.less(R.from_code(2), R.from_code(3)));
  CHECK_FALSE(R.less(R.from_code(3), R.from_code(3)));

  SECTION("non-field modulus") {
    Ring R6 = Ring::modular(6);
    CHECK(unit_codes(R6) == std::vector<long long>{1, 5});
    CHECK_FALSE(R6.is_unit(R6.from_code(2)));
    CHECK_THROWS_MATCHES(R6.inv(R6.from_code(2)), Error,
                         Catch::Matchers::MessageMatches(
                             StartsWith("NonUnit: 2 is not a unit of Z6")));
  }
  SECTION("element text") {
    CHECK(R.format(R.from_code(2)) == "2");
    CHECK(R.parse("7").code == 2);
    CHECK(R.parse("-1").code == 4);
    CHECK(R.parse("2+2").code == 4);
    CHECK_THROWS_MATCHES(R.parse("t"), Error,
                         Catch::Matchers::MessageMatches(ContainsSubstring(
                             "variable not allowed in Z5")));
    CHECK_THROWS_AS(R.parse("x"), Error);
    CHECK_THROWS_AS(R.parse(""), Error);
  }
}

TEST_CASE("galois field arithmetic", "[ring]") {
  Ring R = Ring::parse_spec("GF(2^3;1+t+t^3)");
  Elem t = R.parse("t");
  CHECK(t.code == 2);
  CHECK(R.parse("t^2").code == 4);
  // t^3 = 1 + t under the modulus polynomial
  CHECK(R.mul(t, R.parse("t^2")).code == 3);
  CHECK(R.format(R.from_code(5)) == "1+t^2");
  CHECK(R.format(R.from_code(7)) == "1+t+t^2");
  CHECK(R.format(R.zero()) == "0");
  CHECK(R.format(R.one()) == "1");
  CHECK(R.inv(t).code == 5);
  CHECK(R.pow(t, 7) == R.one());
  CHECK(R.pow(t, -1) == R.from_code(5));
  CHECK(unit_codes(R) == std::vector<long long>{1, 2, 3, 4, 5, 6, 7});
  // characteristic 2: x + x = 0
  CHECK(R.add(R.from_code(6), R.from_code(6)) == R.zero());
  CHECK(R.sub(R.zero(), R.from_code(6)).code == 6);

  SECTION("round trip of every element") {
    for (long long c = 0; c < R.size(); ++c)
      CHECK(R.parse(R.format(R.from_code(c))).code == c);
  }
  SECTION("GF(3^2): t^2 = -1") {
    Ring R9 = Ring::parse_spec("GF(3^2;1+t^2)");
    CHECK(R9.mul(R9.parse("t"), R9.parse("t")) == R9.from_int(-1));
    CHECK(R9.units().size() == 8);
  }
}

TEST_CASE("laurent ring", "[ring]") {
  Ring R = Ring::laurent();
  Elem A = R.parse("A");
  SECTION("parse/format round trips, descending exponents") {
    for (std::string s : {"0", "1", "-1", "A", "-A^3", "A^-1", "3A^2",
                          "-A^2-A^-2", "A+2", "A^18-A^10-A^6-A^2",
                          "-A^-2-A^-6-A^-10+A^-18", "1+A^-4+A^-8+A^-12"})
      CHECK(R.format(R.parse(s)) == s);
    CHECK(R.format(R.parse("2 + A")) == "A+2");
    CHECK(R.format(R.parse("3*A^2")) == "3A^2");
  }
  SECTION("arithmetic") {
    CHECK(R.add(A, R.parse("-A")) == R.zero());
    CHECK(R.mul(R.parse("-A^3"), R.parse("-A^-3")) == R.one());
    CHECK(R.format(R.mul(R.parse("-A^2-A^-2"), R.parse("-A^2-A^-2"))) ==
          "A^4+2+A^-4");
    CHECK(R.pow(A, -2) == R.parse("A^-2"));
    CHECK(R.format(R.sub(R.one(), R.parse("A^2"))) == "-A^2+1");
  }
  SECTION("units are the signed monomials") {
    CHECK(R.is_unit(R.parse("-A^3")));
    CHECK(R.is_unit(R.parse("A^-7")));
    CHECK_FALSE(R.is_unit(R.parse("2A")));
    CHECK_FALSE(R.is_unit(R.parse("A+1")));
    CHECK_FALSE(R.is_unit(R.zero()));
    CHECK(R.inv(R.parse("-A^3")) == R.parse("-A^-3"));
    CHECK_THROWS_MATCHES(R.inv(R.parse("A+1")), Error,
                         Catch::Matchers::MessageMatches(
                             StartsWith("NonUnit")));
    CHECK_THROWS_MATCHES(R.units(), Error,
                         Catch::Matchers::MessageMatches(StartsWith(
                             "Infinite: the Laurent ring has infinitely")));
  }
  SECTION("order and comparisons") {
    CHECK(R.less(R.parse("A^-1"), R.one()));
    CHECK(R.parse("A+1") == R.parse("1+A"));
    CHECK_FALSE(R.parse("A") == R.parse("-A"));
  }
  SECTION("negative exponent rejected outside laurent") {
    Ring R5 = Ring::modular(5);
    CHECK_THROWS_AS(R5.parse("2^-1"), Error);
    CHECK_THROWS_AS(Ring::parse_spec("GF(2^3;t^-1)"), Error);
  }
}

TEST_CASE("error kinds carry their kind prefix", "[ring]") {
  try {
    Ring::modular(6).inv(Ring::modular(6).from_code(3));
    FAIL("expected a NonUnit error");
  } catch (const Error& e) {
    CHECK(e.kind() == "NonUnit");
    CHECK_THAT(e.what(), StartsWith("NonUnit: "));
  }
}

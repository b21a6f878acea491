#include "test_support.hpp"

#include "hopf/errors.hpp"

using namespace hopf;

TEST_CASE("parse_rational accepts fractions, decimals and exponents") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1e-20") == Rational(1) / Rational(Integer("100000000000000000000")));
  CHECK(parse_rational("2.5E3") == Rational(2500));
  CHECK_THROWS_AS(parse_rational("abc"), HopfError);
  CHECK_THROWS_AS(parse_rational(""), HopfError);
  CHECK_THROWS_AS(parse_rational("1/0"), HopfError);
}

TEST_CASE("to_rational is exact for binary fractions") {
  CHECK(to_rational(0.5) == Rational(1, 2));
  CHECK(to_rational(-3.25) == Rational(-13, 4));
  // 0.1 is not 1/10 in binary.
  CHECK(to_rational(0.1) != Rational(1, 10));
  CHECK(abs(to_real(to_rational(0.1)) - Real("0.1")) < Real("1e-17"));
}

TEST_CASE("exact_sqrt recognises rational squares only") {
  CHECK(exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK(exact_sqrt(Rational(0)) == Rational(0));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
  CHECK_FALSE(exact_sqrt(Rational(1, 3)).has_value());
}

TEST_CASE("sign") {
  CHECK(sign(Rational(-1, 7)) == -1);
  CHECK(sign(Rational(0)) == 0);
  CHECK(sign(Real("1e-45")) == 1);
}

TEST_CASE("format_real uses 17 significant digits and is deterministic") {
  CHECK(format_real(Real(1) / 4) == "2.5000000000000000e-01");
  CHECK(format_real(Real(-3)) == "-3.0000000000000000e+00");
  CHECK(format_real(pi()) == "3.1415926535897932e+00");
  CHECK(format_real(pi()) == format_real(pi()));
  CHECK(format_real(Real(2), 5) == "2.0000e+00");
}

TEST_CASE("pi carries the full working precision") {
  CHECK(abs(sin(pi())) < Real("1e-48"));
  CHECK(kRealDigits == 50);
}

TEST_CASE("error kinds have stable names") {
  CHECK(to_string(ErrorKind::radius_out_of_domain) == "RadiusOutOfDomain");
  CHECK(to_string(ErrorKind::no_exact_count_guarantee) == "NoExactCountGuarantee");
  const HopfError e(ErrorKind::endpoint_root, "boom");
  CHECK(e.kind() == ErrorKind::endpoint_root);
  CHECK(std::string(e.what()).find("boom") != std::string::npos);
}

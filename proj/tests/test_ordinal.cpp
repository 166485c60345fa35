#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hforest/error.hpp"
#include "hforest/ordinal.hpp"
#include "test_util.hpp"

using hforest::Ordinal;

TEST_CASE("parse: direct CNF readings") {
  CHECK(Ordinal::parse("0").is_zero());
  CHECK(Ordinal::parse("0").cnf().empty());

  Ordinal a = Ordinal::parse("w^2+w+3");
  REQUIRE(a.cnf().size() == 3);
  CHECK(a.cnf()[0].exponent == Ordinal::nat(2));
  CHECK(a.cnf()[0].count == 1);
  CHECK(a.cnf()[1].exponent == Ordinal::nat(1));
  CHECK(a.cnf()[1].count == 1);
  CHECK(a.cnf()[2].exponent == Ordinal::nat(0));
  CHECK(a.cnf()[2].count == 3);
}

TEST_CASE("parse: non-canonical input is normalized") {
  CHECK(Ordinal::parse("w+w") == Ordinal::omega_pow(Ordinal::nat(1), 2));
  CHECK(Ordinal::parse("1+w") == Ordinal::omega());
  CHECK(Ordinal::parse("w*0") == Ordinal());
  CHECK(Ordinal::parse("w^0") == Ordinal::nat(1));
  CHECK(Ordinal::parse("2+3") == Ordinal::nat(5));
  CHECK(Ordinal::parse("w^(w)") == Ordinal::omega_pow(Ordinal::omega()));
  CHECK(Ordinal::parse(" w + 1 ") == Ordinal::parse("w+1"));
}

TEST_CASE("parse errors report a position") {
  CHECK_THROWS_AS(Ordinal::parse("w^"), hforest::parse_error);
  CHECK_THROWS_AS(Ordinal::parse("w+"), hforest::parse_error);
  CHECK_THROWS_AS(Ordinal::parse("x"), hforest::parse_error);
  CHECK_THROWS_AS(Ordinal::parse("w^(w"), hforest::parse_error);
  CHECK_THROWS_AS(Ordinal::parse("3a"), hforest::parse_error);
  try {
    Ordinal::parse("w+%");
  } catch (const hforest::parse_error& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("compare is the ordinal order") {
  CHECK(Ordinal() < Ordinal::omega());
  CHECK(Ordinal::parse("w^2") > Ordinal::parse("w+5"));
  CHECK(Ordinal::parse("w+1") == Ordinal::parse("w+1"));
  CHECK(Ordinal::parse("w") < Ordinal::parse("w+1"));
  CHECK(Ordinal::parse("w*2") > Ordinal::parse("w+100"));
  CHECK(Ordinal::parse("w^(w)") > Ordinal::parse("w^100*7+w*3"));
  CHECK(Ordinal::parse("5") < Ordinal::parse("w"));
  CHECK(Ordinal::parse("4") < Ordinal::parse("5"));
}

TEST_CASE("addition absorbs on the left") {
  CHECK(Ordinal::nat(1) + Ordinal::omega() == Ordinal::omega());
  CHECK(Ordinal::omega() + Ordinal::nat(1) == Ordinal::parse("w+1"));
  CHECK(Ordinal::parse("w+2") + Ordinal::omega() == Ordinal::parse("w*2"));
  CHECK(Ordinal::parse("w^2+w") + Ordinal::parse("w+1") == Ordinal::parse("w^2+w*2+1"));
  CHECK(Ordinal::parse("w^2") + Ordinal::parse("w^3") == Ordinal::parse("w^3"));
}

TEST_CASE("summands expand multiplicities in order") {
  auto s = Ordinal::parse("w^2+w+3").summands();
  REQUIRE(s.size() == 5);
  CHECK(s[0] == Ordinal::nat(2));
  CHECK(s[1] == Ordinal::nat(1));
  CHECK(s[2] == Ordinal::nat(0));
  CHECK(s[3] == Ordinal::nat(0));
  CHECK(s[4] == Ordinal::nat(0));

  CHECK(Ordinal::nat(1).summands() == std::vector<Ordinal>{Ordinal::nat(0)});
  CHECK(Ordinal::parse("w*2").summands() ==
        std::vector<Ordinal>{Ordinal::nat(1), Ordinal::nat(1)});
  CHECK_THROWS_AS(Ordinal().summands(), std::invalid_argument);
}

TEST_CASE("leading summand decomposition") {
  Ordinal a = Ordinal::parse("w^2*2+w");
  CHECK(a.leading_exponent() == Ordinal::nat(2));
  CHECK(a.strip_leading() == Ordinal::parse("w^2+w"));
  CHECK(Ordinal::nat(1).strip_leading().is_zero());
  CHECK_THROWS_AS(Ordinal().leading_exponent(), std::invalid_argument);
}

TEST_CASE("properties: round trip, total order, associativity, summand folding") {
  testutil::RandomGen gen(20240901);
  std::vector<Ordinal> sample;
  for (int i = 0; i < 400; ++i) sample.push_back(gen.ordinal());

  for (const Ordinal& a : sample) {
    CHECK(Ordinal::parse(a.str()) == a);
    CHECK(a + Ordinal() == a);
    CHECK(Ordinal() + a == a);
    if (!a.is_zero()) {
      Ordinal folded;
      for (const Ordinal& e : a.summands()) folded = folded + Ordinal::omega_pow(e);
      CHECK(folded == a);
    }
  }

  for (std::size_t i = 0; i < 200; ++i) {
    const Ordinal& a = sample[gen.pick(sample.size())];
    const Ordinal& b = sample[gen.pick(sample.size())];
    const Ordinal& c = sample[gen.pick(sample.size())];
    CHECK((a + b) + c == a + (b + c));
    if (a <= b && b <= a) CHECK(a == b);
    if (a <= b && b <= c) CHECK(a <= c);
  }
}

#include <doctest.h>

#include "chroma/rational.hpp"

using chroma::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
}

TEST_CASE("rational comparison") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(5, 4) >= Rational(5, 4));
    CHECK(Rational(7) > Rational(13, 2));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 2).floor() == 3);
    CHECK(Rational(6, 2).ceil() == 3);
    CHECK(Rational(0).ceil() == 0);
}

TEST_CASE("serialization is reduced p/q") {
    CHECK(Rational(3, 4).to_string() == "3/4");
    CHECK(Rational(8, 4).to_string() == "2/1");
    CHECK(Rational(0).to_string() == "0/1");
    CHECK(Rational(-5, 10).to_string() == "-1/2");
}

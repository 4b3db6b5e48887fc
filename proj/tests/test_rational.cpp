#include <doctest.h>

#include "monotoric/linalg.hpp"
#include "monotoric/rational.hpp"
#include "monotoric/types.hpp"

using namespace monotoric;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK((a - b).str() == "1/6");
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("rational parse and print round-trip") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("-12").str() == "-12");
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("floor and ceiling on negatives") {
  CHECK(Rational(-7, 2).floorLong() == -4);
  CHECK(Rational(-7, 2).ceilLong() == -3);
  CHECK(Rational(7, 2).floorLong() == 3);
  CHECK(Rational(7, 2).ceilLong() == 4);
  CHECK(Rational(4, 2).floorLong() == 2);
  CHECK(Rational(4, 2).ceilLong() == 2);
}

TEST_CASE("arbitrary precision survives large products") {
  Rational big = Rational(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000007L);
  Rational inv = Rational(1) / big;
  CHECK(big * inv == Rational(1));
  CHECK(big > Rational(0));
}

TEST_CASE("eigen vectors and matrices over rationals") {
  RatVec v = ratVec({Rational(1, 2), Rational(1, 3)});
  RatVec w = ratVec({Rational(2), Rational(3)});
  CHECK(v.dot(w) == Rational(2));

  RatMat A(2, 2);
  A << Rational(1), Rational(2), Rational(3), Rational(4);
  auto x = solveSquare(A, w);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(-1));
  CHECK((*x)[1] == Rational(3, 2));
  CHECK(rank(A) == 2);

  RatMat B(2, 2);
  B << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK(rank(B) == 1);
  CHECK(!solveSquare(B, w).has_value());
  RatMat ker = nullspaceBasis(B);
  REQUIRE(ker.cols() == 1);
  CHECK((B * ker.col(0))[0].isZero());
  CHECK((B * ker.col(0))[1].isZero());
}

TEST_CASE("general solve finds a witness or reports inconsistency") {
  RatMat A(3, 2);
  A << Rational(1), Rational(0), Rational(0), Rational(1), Rational(1), Rational(1);
  RatVec b = ratVec({Rational(2), Rational(3), Rational(5)});
  auto x = solve(A, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(3));
  b[2] = Rational(6);
  CHECK(!solve(A, b).has_value());
}

TEST_CASE("primitive direction clears denominators and common factors") {
  CHECK(primitiveDirection(ratVec({Rational(1, 2), Rational(1, 3)})) == intVec({3, 2}));
  CHECK(primitiveDirection(ratVec({Rational(-4), Rational(6)})) == intVec({-2, 3}));
  CHECK(primitiveDirection(ratVec({Rational(0), Rational(0)})) == intVec({0, 0}));
}

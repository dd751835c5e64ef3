#include <doctest.h>

#include "blockalg/sampling.hpp"
#include "blockalg/scalar.hpp"

using namespace blockalg;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(1, -2) == make_rational(-1, 2));
  CHECK(make_rational(-6, -4) == make_rational(3, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK(make_rational(2, 4).get_den() == 2);
  CHECK(make_rational(1, -2).get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("field operations are exact") {
  const Scalar half(make_rational(1, 2));
  const Scalar third(make_rational(1, 3));
  CHECK(half + third == Scalar(make_rational(5, 6)));
  CHECK(half - half == Scalar(0));
  CHECK(half * Scalar(2) == Scalar(1));

  const Scalar i = Scalar::imaginary_unit();
  CHECK(i * i == Scalar(-1));
  CHECK(i.conjugate() == -i);
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));

  const Scalar z(make_rational(3, 2), make_rational(-4, 5));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(z / z == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("zero and equality") {
  CHECK(Scalar().is_zero());
  CHECK(Scalar(0) == Scalar());
  CHECK(Scalar(1) != Scalar::imaginary_unit());
  CHECK(Scalar(make_rational(2, 4)) == Scalar(make_rational(1, 2)));
}

TEST_CASE("random field identities") {
  SeededRng rng(11);
  for (int k = 0; k < 100; ++k) {
    const Scalar a = random_scalar(rng, false);
    const Scalar b = random_scalar(rng, true);
    const Scalar c = random_scalar(rng, false);
    CHECK((a / b) * b == a);
    CHECK(a + (-a) == Scalar(0));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
  }
}

TEST_SUITE_END();

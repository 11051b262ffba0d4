#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wmds/coeffring.hpp"

using namespace wmds;
using testing::ge;

TEST_CASE("normal form") {
  CHECK(GaussElement::generator(3, 1) * GaussElement::generator(3, 2) == GaussElement::q_power(3, 1));
  CHECK(GaussElement::generator(4, 2) * GaussElement::generator(4, 2) == GaussElement::q_power(4, 1));
  const GaussElement g1 = GaussElement::generator(3, 1);
  CHECK(g1 * g1 * GaussElement::generator(3, 2) == GaussElement::q_power(3, 1) * g1);

  const std::vector<GaussElement::RawTerm> raw = {{0, {2, 1}, 1}, {1, {1, 0}, -1}};
  CHECK(GaussElement::normalize(3, raw).is_zero());
}

TEST_CASE("text rendering and parsing") {
  const GaussElement e = ge(3, "-1 + q^2*g1");
  CHECK(e.to_string() == "-1 + q^2*g1");
  CHECK(ge(3, e.to_string()) == e);
  CHECK(ge(2, "q^-1*g1").to_string() == "q^-1*g1");
  CHECK(ge(4, "0").is_zero());
  CHECK(ge(3, "g1*g2") == ge(3, "q"));
  CHECK_THROWS_AS(ge(3, "g3"), ParseError);
  CHECK_THROWS_AS(ge(3, "q^"), ParseError);
}

TEST_CASE("gauss symbols") {
  CHECK(gauss_symbol(3, 3) == GaussElement::constant(3, -1));
  CHECK(gauss_symbol(3, -1) == GaussElement::generator(3, 2));
  CHECK(gauss_symbol(1, 5) == GaussElement::constant(1, -1));

  CHECK(g_star(3, 2) == ge(3, "q^-1*g2"));
  CHECK(g_star(2, 4) == GaussElement::constant(2, -1));
  CHECK(g_star(3, 1) * g_star(3, -1) == GaussElement::q_power(3, -1));

  CHECK(gauss_eval(3, 1, 0, 1) == GaussElement::generator(3, 1));
  CHECK(gauss_eval(2, 1, 3, 2) == ge(2, "-q + q^2"));
  CHECK(gauss_eval(3, 1, 0, 2).is_zero());
  CHECK(gauss_eval(3, 1, 0, 0) == GaussElement::constant(3, 1));
}

TEST_CASE("units") {
  const GaussElement u = ge(3, "-q^2*g1");
  REQUIRE(u.is_unit());
  CHECK(u * u.unit_inverse() == GaussElement::constant(3, 1));
  CHECK_FALSE(ge(3, "1 + q").is_unit());
}

TEST_CASE("degree mismatch") {
  CHECK_THROWS_AS(GaussElement::constant(2, 1) + GaussElement::constant(3, 1), DegreeMismatch);
}

TEST_CASE("specialization") {
  SpecializationMap m{9.0, {3.0}};
  const GaussElement g1 = GaussElement::generator(2, 1);
  CHECK(std::abs(specialize(g1 * g1, m) - 9.0) < 1e-12);
  CHECK(std::abs(specialize(GaussElement::constant(2, -7), m) + 7.0) < 1e-12);

  const SpecializationMap r3 = random_specialization(3, 5);
  CHECK(std::abs(specialize(ge(3, "g1*g2"), r3) - r3.q_value) < 1e-12);
  CHECK(std::abs(r3.g_values[0] * r3.g_values[1] - r3.q_value) < 1e-12 * std::abs(r3.q_value));
  const GaussElement diff = GaussElement::generator(3, 1) * GaussElement::generator(3, 2) - GaussElement::q_power(3, 1);
  CHECK(std::abs(specialize(diff, r3)) < 1e-12);

  const SpecializationMap a = random_specialization(2, 42), b = random_specialization(2, 42);
  CHECK(a.q_value == b.q_value);
  CHECK(a.g_values == b.g_values);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SpecializationMap one = random_specialization(1, seed);
    CHECK(one.g_values.empty());
    CHECK(one.q_value.real() >= 2.0);
    CHECK(one.q_value.real() <= 16.0);
  }
}

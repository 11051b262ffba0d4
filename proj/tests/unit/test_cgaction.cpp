#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wmds/cgaction.hpp"

using namespace wmds;
using testing::ge;
using testing::poly;

namespace {

const WeylElement& by_word(const WeylGroup& w, const std::vector<int>& word) {
  for (const auto& e : w)
    if (e.word == word) return e;
  throw std::runtime_error("no element with that word");
}

Monomial mono(int n, const RootVector& v, const std::string& c = "1") { return {Exponent(v), ge(n, c)}; }

}  // namespace

TEST_CASE("change of variables") {
  const PPartContext ctx(Family::A, 2, 1, {0, 0});
  const Monomial a = change_of_vars(ctx, 0, mono(1, {1, 0}));
  CHECK(a.exponent == Exponent(RootVector{-1, 0}));
  CHECK(a.coeff == GaussElement::q_power(1, -2));
  const Monomial b = change_of_vars(ctx, 0, mono(1, {0, 1}));
  CHECK(b.exponent == Exponent(RootVector{1, 1}));
  CHECK(b.coeff == GaussElement::q_power(1, 1));
  const Monomial c = change_of_vars(ctx, 1, mono(1, {0, 0}, "3"));
  CHECK(c.exponent == Exponent(RootVector{0, 0}));
  CHECK(c.coeff == GaussElement::constant(1, 3));
}

TEST_CASE("atom images") {
  const PPartContext a1(Family::A, 1, 2, {0});
  const AtomImage img = atom_transform(a1, 0, Atom{0, 1});
  CHECK(img.atom == Atom{0, 3});
  CHECK(img.unit.exponent == Exponent(RootVector{-2}));
  CHECK(img.unit.coeff == ge(2, "-q^-3"));
  // D(x) / D(sigma x) = q^3 x^2 (1 - q x^2) / (q^3 x^2 - 1)
  const LaurentPoly lhs = expand_atoms(a1, {Atom{0, 1}}) * poly(1, 2, {{"2", "q^3"}, {"0", "-1"}});
  const LaurentPoly rhs = poly(1, 2, {{"2", "q^3"}}) * expand_atoms(a1, {Atom{0, 1}}) *
                          LaurentPoly::monomial(1, img.unit) * expand_atoms(a1, {img.atom});
  CHECK(lhs == rhs);

  const PPartContext a2(Family::A, 2, 1, {0, 0});
  const int a12 = a2.roots().root_index({1, 1});
  const AtomImage moved = atom_transform(a2, 0, Atom{a2.roots().root_index({0, 1}), 0});
  CHECK(moved.atom == Atom{a12, 1});
  CHECK(moved.unit.exponent == Exponent(RootVector{0, 0}));
  CHECK(moved.unit.coeff == GaussElement::constant(1, 1));

  const PPartContext b2(Family::B, 2, 2, {0, 0});
  for (int root = 0; root < static_cast<int>(b2.roots().positive_roots().size()); ++root)
    for (int k = 0; k < 2; ++k) {
      if (b2.roots().pairing(b2.roots().positive_roots()[root], k) != 0) continue;
      const AtomImage fixed = atom_transform(b2, k, Atom{root, 2});
      CHECK(fixed.atom == Atom{root, 2});
      CHECK(fixed.unit.exponent == Exponent(RootVector{0, 0}));
      CHECK(fixed.unit.coeff == GaussElement::constant(2, 1));
    }
}

TEST_CASE("P + Q for n = 1") {
  for (int l = 0; l <= 3; ++l) {
    const PPartContext ctx(Family::A, 1, 1, {l});
    const Fraction pq = pq_factors(ctx, 0, {0});
    const Fraction expected{LaurentPoly::monomial(1, Exponent(RootVector{l}), GaussElement::q_power(1, l)), {}};
    CHECK(fractions_equal(ctx, pq, expected));
  }
}

TEST_CASE("action of a simple reflection on 1") {
  const PPartContext ctx(Family::A, 1, 2, {0});
  Fraction f = act_simple(ctx, 0, to_fraction(ctx.one()));
  cancel_atoms(ctx, f);
  CHECK(f.atoms == std::vector<Atom>{Atom{0, 1}});
  CHECK(fractions_equal(ctx, act_word(ctx, {}, to_fraction(ctx.one())), to_fraction(ctx.one())));
}

TEST_CASE("monomials in the sublattice factor out of the action") {
  const PPartContext ctx(Family::A, 2, 3, {1, 0});
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const RootVector beta{d(rng), d(rng)};
    const RootVector gamma{3 * d(rng), 3 * d(rng)};
    RootVector sum{beta[0] + gamma[0], beta[1] + gamma[1]};
    for (int k = 0; k < 2; ++k) {
      const Fraction whole = act_simple(ctx, k, to_fraction(LaurentPoly::monomial(2, mono(3, sum))));
      Fraction part = act_simple(ctx, k, to_fraction(LaurentPoly::monomial(2, mono(3, beta))));
      part.num = part.num.times_monomial(change_of_vars(ctx, k, mono(3, gamma)));
      CHECK(fractions_equal(ctx, whole, part));
    }
  }
}

TEST_CASE("braid relations") {
  const PPartContext a2(Family::A, 2, 3, {0, 1});
  const Fraction one = to_fraction(a2.one());
  CHECK(fractions_equal(a2, act_word(a2, {0, 1, 0}, one), act_word(a2, {1, 0, 1}, one)));

  const PPartContext b2(Family::B, 2, 2, {1, 0});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 4; ++trial) {
    const Fraction f = to_fraction(LaurentPoly::monomial(2, mono(2, {d(rng), d(rng)})));
    CHECK(fractions_equal(b2, act_word(b2, {0, 1, 0, 1}, f), act_word(b2, {1, 0, 1, 0}, f)));
    CHECK(fractions_equal(b2, act_word(b2, {0, 0}, f), f));
  }
}

TEST_CASE("j polynomials") {
  const PPartContext a2(Family::A, 2, 1, {0, 0});
  CHECK(j_poly(a2, a2.weyl().identity()) == a2.one());
  CHECK(j_poly(a2, by_word(a2.weyl(), {0})) == poly(2, 1, {{"1,0", "-q"}}));
  const PPartContext a1(Family::A, 1, 2, {0});
  CHECK(j_poly(a1, a1.weyl()[1]) == poly(1, 2, {{"2", "-q^2"}}));
}

TEST_CASE("boundary polynomials") {
  const PPartContext a1(Family::A, 1, 1, {0});
  const BoundaryPolys b1 = boundary_polys(a1);
  CHECK(b1.delta == poly(1, 1, {{"0", "1"}, {"1", "-q"}}));
  CHECK(b1.d == poly(1, 1, {{"0", "1"}, {"1", "-1"}}));

  const PPartContext a1n2(Family::A, 1, 2, {3});
  const BoundaryPolys b2 = boundary_polys(a1n2);
  CHECK(b2.delta == poly(1, 2, {{"0", "1"}, {"2", "-q^2"}}));
  CHECK(b2.d == poly(1, 2, {{"0", "1"}, {"2", "-q"}}));

  const PPartContext a2(Family::A, 2, 1, {0, 0});
  const LaurentPoly expected = poly(2, 1, {{"0,0", "1"}, {"1,0", "-1"}}) * poly(2, 1, {{"0,0", "1"}, {"0,1", "-1"}}) *
                               poly(2, 1, {{"0,0", "1"}, {"1,1", "-q"}});
  CHECK(boundary_polys(a2).d == expected);
}

TEST_CASE("atom cancellation") {
  const PPartContext ctx(Family::A, 1, 2, {0});
  Fraction f{poly(1, 2, {{"0", "1"}, {"2", "-q"}}) * poly(1, 2, {{"1", "g1"}}), {Atom{0, 1}, Atom{0, 2}}};
  cancel_atoms(ctx, f);
  CHECK(f.atoms == std::vector<Atom>{Atom{0, 2}});
  CHECK(f.num == poly(1, 2, {{"1", "g1"}}));
}

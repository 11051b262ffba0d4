#include <doctest.h>

#include "rank1_oracle.hpp"
#include "wmds/ppart.hpp"

using namespace wmds;

namespace {

oracle::Univariate as_univariate(const LaurentPoly& p) {
  oracle::Univariate out;
  for (const auto& [e, c] : p.terms()) out.emplace(e[0], c);
  return out;
}

}  // namespace

TEST_CASE("rank one p-parts agree with the two-element average") {
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= 5; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      const auto engine = as_univariate(compute_N(PPartContext(Family::A, 1, n, {l})).poly);
      CHECK(engine == oracle::rank1_ppart(n, l));
    }
}

TEST_CASE("rank one closed form") {
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= 5; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      CHECK(oracle::rank1_closed_form(n, l) == oracle::rank1_ppart(n, l));
    }
}

#include <doctest.h>

#include <fstream>
#include <string>

#include <json.hpp>

#include "wmds/ppart.hpp"

using namespace wmds;

namespace {

LaurentPoly load(const std::string& name, int rank, int n) {
  std::ifstream in(std::string(WMDS_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  return LaurentPoly::from_json(rank, n, nlohmann::json::parse(in));
}

struct Fixture {
  const char* file;
  Family family;
  int n;
  std::vector<int> ell;
};

}  // namespace

TEST_CASE("golden p-parts") {
  for (const auto& fx : {Fixture{"A2_n3_ell0-0.json", Family::A, 3, {0, 0}}, Fixture{"A2_n3_ell1-1.json", Family::A, 3, {1, 1}},
                         Fixture{"B2_n2_ell0-0.json", Family::B, 2, {0, 0}}, Fixture{"B2_n2_ell2-4.json", Family::B, 2, {2, 4}}}) {
    CAPTURE(fx.file);
    const PPartContext ctx(fx.family, 2, fx.n, fx.ell);
    const LaurentPoly expected = load(fx.file, 2, fx.n);
    const PPart pp = compute_N(ctx);
    CHECK(pp.poly == expected);
    for (const auto& v : expected.support()) CHECK(ctx.twisted().position(v) != PolytopePosition::Outside);
    for (const auto& v : ctx.twisted().vertices()) CHECK_FALSE(expected.coefficient(v).is_zero());
  }
}

TEST_CASE("golden modified p-parts") {
  for (const auto& fx : {Fixture{"A2_n3_ell0-0_f.json", Family::A, 3, {0, 0}}, Fixture{"B2_n2_ell2-4_f.json", Family::B, 2, {2, 4}}}) {
    CAPTURE(fx.file);
    const PPartContext ctx(fx.family, 2, fx.n, fx.ell);
    const int h = ctx.twisted().max_vertex_height() + 4;
    const LaurentPoly expected = load(fx.file, 2, fx.n);
    CHECK(compute_f_truncated(ctx, h) == expected);
    for (const auto& v : expected.support()) CHECK(ctx.twisted().position(v) != PolytopePosition::Interior);
  }
}

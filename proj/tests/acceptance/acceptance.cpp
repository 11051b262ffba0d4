// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rank1_oracle.hpp"
#include "wmds/ppart.hpp"

using namespace wmds;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  if (!o.passed) ++failures;
  std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << id << ". " << title << ": " << o.detail
            << std::endl;
}

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  report(id, title, o);
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

std::string case_name(const PPartContext& ctx) {
  return std::string(1, family_letter(ctx.roots().family())) + std::to_string(ctx.rank()) + " n=" +
         std::to_string(ctx.n()) + " ell=" + format_vector(ctx.ell());
}

oracle::Univariate as_univariate(const LaurentPoly& p) {
  oracle::Univariate out;
  for (const auto& [e, c] : p.terms()) out.emplace(e[0], c);
  return out;
}

std::vector<std::vector<int>> binary_vectors(int r) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) v[i] = (mask >> i) & 1;
    out.push_back(v);
  }
  return out;
}

// The grid {A2, B2, G2, A3, B3, C3} x n in {1,2,3} x ell in {0,1}^r.
struct GridEntry {
  PPartContext ctx;
  std::optional<PPart> pp;
  std::string error;
};

std::vector<GridEntry> grid;
double grid_seconds = 0;

void compute_grid() {
  const std::vector<std::pair<Family, int>> systems = {{Family::A, 2}, {Family::B, 2}, {Family::G, 2},
                                                       {Family::A, 3}, {Family::B, 3}, {Family::C, 3}};
  const auto t0 = Clock::now();
  for (const auto& [f, r] : systems)
    for (int n = 1; n <= 3; ++n)
      for (const auto& ell : binary_vectors(r)) {
        GridEntry e{PPartContext(f, r, n, ell), std::nullopt, {}};
        try {
          e.pp = compute_N(e.ctx);
        } catch (const std::exception& ex) {
          e.error = ex.what();
        }
        grid.push_back(std::move(e));
      }
  grid_seconds = seconds_since(t0);
}

Outcome over_grid(const std::function<CheckReport(const PPart&)>& check) {
  int passed = 0;
  std::string first;
  for (const auto& e : grid) {
    if (!e.pp) {
      if (first.empty()) first = case_name(e.ctx) + " (no p-part)";
      continue;
    }
    const CheckReport r = check(*e.pp);
    if (r.passed) ++passed;
    else if (first.empty()) first = case_name(e.ctx);
  }
  Outcome o;
  o.passed = passed == static_cast<int>(grid.size());
  o.detail = std::to_string(passed) + "/" + std::to_string(grid.size()) + " grid points";
  if (!first.empty()) o.detail += ", first failure " + first;
  return o;
}

LaurentPoly load_fixture(const std::string& name, int n) {
  std::ifstream in(std::string(WMDS_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return LaurentPoly::from_json(2, n, nlohmann::json::parse(in));
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  std::cout << "acceptance criteria" << std::endl;

  criterion(1, "rank-1 oracle equivalence (A1, n<=4, l<=5, exact, < 1 s)", [] {
    const auto t0 = Clock::now();
    int agree = 0;
    for (int n = 1; n <= 4; ++n)
      for (int l = 0; l <= 5; ++l)
        if (as_univariate(compute_N(PPartContext(Family::A, 1, n, {l})).poly) == oracle::rank1_ppart(n, l)) ++agree;
    const double s = seconds_since(t0);
    return Outcome{agree == 24 && s < 1.0, std::to_string(agree) + "/24 agree, " + fmt_seconds(s)};
  });

  criterion(2, "rank-1 closed form (exact, < 1 s)", [] {
    const auto t0 = Clock::now();
    int agree = 0;
    for (int n = 1; n <= 4; ++n)
      for (int l = 0; l <= 5; ++l)
        if (as_univariate(compute_N(PPartContext(Family::A, 1, n, {l})).poly) == oracle::rank1_closed_form(n, l))
          ++agree;
    const double s = seconds_since(t0);
    return Outcome{agree == 24 && s < 1.0, std::to_string(agree) + "/24 agree, " + fmt_seconds(s)};
  });

  criterion(3, "Coxeter relations of the action (A2, B2, G2, n<=3, 10 monomials, < 10 s)", [] {
    const auto t0 = Clock::now();
    int passed = 0, total = 0;
    for (const auto f : {Family::A, Family::B, Family::G})
      for (int n = 1; n <= 3; ++n) {
        ++total;
        if (check_coxeter(PPartContext(f, 2, n, {0, 0}), 10, 2024 + n).passed) ++passed;
      }
    const double s = seconds_since(t0);
    return Outcome{passed == total && s < 10.0,
                   std::to_string(passed) + "/" + std::to_string(total) + " systems, " + fmt_seconds(s)};
  });

  compute_grid();

  criterion(4, "polynomiality certificate on the grid (< 300 s)", [] {
    int ok = 0;
    std::string first;
    for (const auto& e : grid) {
      if (e.pp) ++ok;
      else if (first.empty()) first = case_name(e.ctx) + ": " + e.error;
    }
    Outcome o{ok == static_cast<int>(grid.size()) && grid_seconds < 300.0,
              std::to_string(ok) + "/" + std::to_string(grid.size()) + " exact, " + fmt_seconds(grid_seconds)};
    if (!first.empty()) o.detail += ", first failure " + first;
    return o;
  });

  criterion(5, "recurrence relations hold on the grid", [] {
    return over_grid([](const PPart& pp) { return check_recurrence(pp); });
  });

  criterion(6, "support inside the polytope on the grid; golden supports", [] {
    Outcome o = over_grid([](const PPart& pp) { return check_support(pp); });
    struct Fx {
      const char* file;
      Family f;
      int n;
      std::vector<int> ell;
    };
    int matched = 0;
    for (const auto& fx : {Fx{"A2_n3_ell0-0.json", Family::A, 3, {0, 0}}, Fx{"A2_n3_ell1-1.json", Family::A, 3, {1, 1}},
                           Fx{"B2_n2_ell0-0.json", Family::B, 2, {0, 0}}, Fx{"B2_n2_ell2-4.json", Family::B, 2, {2, 4}}}) {
      const PPartContext ctx(fx.f, 2, fx.n, fx.ell);
      const LaurentPoly golden = load_fixture(fx.file, fx.n);
      bool ok = compute_N(ctx).poly == golden;
      for (const auto& v : golden.support()) ok = ok && ctx.twisted().position(v) != PolytopePosition::Outside;
      for (const auto& v : ctx.twisted().vertices()) ok = ok && !golden.coefficient(v).is_zero();
      if (ok) ++matched;
    }
    o.passed = o.passed && matched == 4;
    o.detail += ", " + std::to_string(matched) + "/4 fixtures";
    return o;
  });

  criterion(7, "vertex coefficients equal the Gauss sum products; stable type A support is the vertex set", [] {
    Outcome o = over_grid([](const PPart& pp) { return check_stable(pp); });
    int stable = 0, exact = 0;
    for (const auto& e : grid) {
      if (!e.pp || e.ctx.roots().family() != Family::A) continue;
      if (is_stable_range(e.ctx).range != StableRange::Stable) continue;
      ++stable;
      const auto supp = e.pp->poly.support();
      const auto& verts = e.ctx.twisted().vertices();
      if (std::set<RootVector>(supp.begin(), supp.end()) == std::set<RootVector>(verts.begin(), verts.end())) ++exact;
    }
    o.passed = o.passed && stable == exact && stable > 0;
    o.detail += ", " + std::to_string(exact) + "/" + std::to_string(stable) + " stable type A supports exact";
    return o;
  });

  criterion(8, "f avoids the polytope interior (H = highest vertex + 4); golden modified supports", [] {
    Outcome o = over_grid(
        [](const PPart& pp) { return check_gap(pp, pp.ctx.twisted().max_vertex_height() + 4); });
    int matched = 0;
    struct Fx {
      const char* file;
      Family f;
      int n;
      std::vector<int> ell;
    };
    for (const auto& fx : {Fx{"A2_n3_ell0-0_f.json", Family::A, 3, {0, 0}}, Fx{"B2_n2_ell2-4_f.json", Family::B, 2, {2, 4}}}) {
      const PPartContext ctx(fx.f, 2, fx.n, fx.ell);
      const LaurentPoly golden = load_fixture(fx.file, fx.n);
      bool ok = compute_f_truncated(ctx, ctx.twisted().max_vertex_height() + 4) == golden;
      for (const auto& v : golden.support()) ok = ok && ctx.twisted().position(v) != PolytopePosition::Interior;
      if (ok) ++matched;
    }
    o.passed = o.passed && matched == 2;
    o.detail += ", " + std::to_string(matched) + "/2 fixtures";
    return o;
  });

  criterion(9, "decomposition round trip (A2, ell=(1,1), n in {2,3})", [] {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> small(-5, 5);
    int ok = 0, total = 0;
    for (int n = 2; n <= 3; ++n) {
      const PPartContext ctx(Family::A, 2, n, {1, 1});
      const auto regular = regular_subset(dominant_weights_theta(ctx.twisted()));
      for (int trial = 0; trial < 5; ++trial) {
        ++total;
        LaurentPoly combo = ctx.zero();
        std::map<std::vector<int>, GaussElement> chosen;
        for (const auto& xi : regular) {
          GaussElement m = GaussElement::constant(n, small(rng)) +
                           GaussElement::q_power(n, small(rng), small(rng)) * GaussElement::generator(n, 1);
          if (m.is_zero()) continue;
          combo += shift_ppart(ctx, xi.weight).scaled(m);
          chosen.emplace(xi.weight, m);
        }
        std::map<std::vector<int>, GaussElement> found;
        LaurentPoly rebuilt = ctx.zero();
        for (const auto& t : decompose(ctx, combo)) {
          found.emplace(t.xi.weight, t.multiplicity);
          rebuilt += shift_ppart(ctx, t.xi.weight).scaled(t.multiplicity);
        }
        if (found == chosen && rebuilt == combo) ++ok;
      }
    }
    return Outcome{ok == total, std::to_string(ok) + "/" + std::to_string(total) + " exact round trips"};
  });

  criterion(10, "solution space dimension equals #Theta+ (3 seeds each, 1e-8 threshold, < 60 s)", [] {
    const auto t0 = Clock::now();
    std::vector<PPartContext> cases;
    for (int n = 1; n <= 3; ++n) {
      for (int l = 0; l <= 3; ++l) cases.emplace_back(Family::A, 1, n, std::vector<int>{l});
      for (const auto& ell : binary_vectors(2)) cases.emplace_back(Family::A, 2, n, ell);
      cases.emplace_back(Family::B, 2, n, std::vector<int>{0, 0});
    }
    int ok = 0, runs = 0;
    std::string first;
    for (const auto& ctx : cases) {
      const int expected = static_cast<int>(regular_subset(dominant_weights_theta(ctx.twisted())).size());
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        ++runs;
        const int d = recurrence_space_dim(ctx, seed);
        if (d == expected) ++ok;
        else if (first.empty())
          first = case_name(ctx) + " seed " + std::to_string(seed) + ": " + std::to_string(d) + " vs " +
                  std::to_string(expected);
      }
    }
    const double s = seconds_since(t0);
    Outcome o{ok == runs && s < 60.0, std::to_string(ok) + "/" + std::to_string(runs) + " runs, " + fmt_seconds(s)};
    if (!first.empty()) o.detail += ", first mismatch " + first;
    return o;
  });

  criterion(11, "normalized linear solve reproduces N (ell=0, A2/B2/G2, n<=3, rel. error < 1e-9)", [] {
    double worst = 0;
    int ok = 0, total = 0;
    for (const auto f : {Family::A, Family::B, Family::G})
      for (int n = 1; n <= 3; ++n) {
        ++total;
        const NormalizedSolve s = solve_normalized(compute_N(PPartContext(f, 2, n, {0, 0})), 7);
        worst = std::max(worst, s.relative_error);
        if (s.nullity == 1 && s.relative_error < 1e-9) ++ok;
      }
    std::ostringstream os;
    os << ok << "/" << total << " systems, worst relative error " << std::scientific << std::setprecision(2) << worst;
    return Outcome{ok == total, os.str()};
  });

  criterion(12, "repeated CLI runs are byte-identical", [] {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(WMDS_SCRATCH_DIR) / "determinism";
    fs::create_directories(dir);
    const std::vector<std::string> commands = {
        "compute --family B --rank 2 --n 2 --ell 2,4",
        "compute --family A --rank 2 --n 3 --ell 0,0 --what f",
        "check --family A --rank 2 --n 2 --ell 1,1 --check recurrence,support,stable,gap,coxeter,shift,uniqueness "
        "--seed 13",
        "plot --family B --rank 2 --n 2 --ell 2,4 --what f --format svg",
        "plot --family A --rank 2 --n 3 --ell 0,0 --format tikz",
        "dimension --family A --rank 2 --n 3 --ell 1,0 --seed 4 --format json",
    };
    int same = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
      std::string outputs[2];
      bool ran = true;
      for (int rep = 0; rep < 2; ++rep) {
        const fs::path out = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep));
        const std::string cmd = std::string("\"") + WMDS_CLI_PATH + "\" " + commands[i] + " --out \"" + out.string() + "\"";
        if (std::system(cmd.c_str()) != 0) ran = false;
        outputs[rep] = read_file(out);
      }
      if (ran && !outputs[0].empty() && outputs[0] == outputs[1]) ++same;
    }
    return Outcome{same == static_cast<int>(commands.size()),
                   std::to_string(same) + "/" + std::to_string(commands.size()) + " commands identical"};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

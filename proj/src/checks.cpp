#include <algorithm>
#include <random>
#include <set>

#include "wmds/ppart.hpp"

namespace wmds {

namespace {

constexpr std::size_t kMaxStoredCounterexamples = 25;

GaussElement q_pow(const PPartContext& ctx, int e) { return GaussElement::q_power(ctx.n(), e); }

RootVector step(const RootVector& v, int k, int amount) {
  RootVector out = v;
  out[k] += amount;
  return out;
}

GaussElement evaluate_side(const LaurentPoly& poly, const std::vector<std::pair<RootVector, GaussElement>>& side,
                           int n) {
  GaussElement acc(n);
  for (const auto& [v, c] : side) {
    GaussElement a = poly.coefficient(v);
    if (!a.is_zero()) acc += c * a;
  }
  return acc;
}

// lambda such that the relation at (lambda, k) can involve a point of `pts`.
std::set<RootVector> relation_candidates(const PPartContext& ctx, const std::vector<RootVector>& pts) {
  std::set<RootVector> out;
  const auto& tw = ctx.twisted();
  for (const auto& s : pts)
    for (int k = 0; k < ctx.rank(); ++k) {
      const int m = ctx.nalpha_simple(k);
      for (int j = 0; j <= m; ++j) {
        out.insert(step(s, k, j));
        out.insert(tw.bullet_simple(k, step(s, k, -j)));
      }
    }
  return out;
}

}  // namespace

void CheckReport::fail(Counterexample c) {
  passed = false;
  ++stats["failures"];
  if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back(std::move(c));
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["passed"] = passed;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples) {
    nlohmann::ordered_json e;
    e["lambda"] = c.lambda;
    if (c.k >= 0) e["k"] = c.k + 1;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    j["counterexamples"].push_back(std::move(e));
  }
  j["stats"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : stats) j["stats"][k] = v;
  return j;
}

Relation main_relation(const PPartContext& ctx, const RootVector& lambda, int k) {
  const int n = ctx.n();
  const int m = ctx.nalpha_simple(k);
  const RecurrenceInstance ri = make_recurrence_instance(ctx.twisted(), m, lambda, k);
  const int d = ri.delta;
  Relation rel;
  if (remainder_mod(d, m) == 0) {
    rel.lhs = {{step(lambda, k, -m), -q_pow(ctx, 1 + m)}, {lambda, q_pow(ctx, 0)}};
    rel.rhs = {{ri.mu, -q_pow(ctx, 1 - d)}, {step(ri.mu, k, m), q_pow(ctx, -d - m)}};
  } else {
    const GaussElement g = g_star(n, -static_cast<long long>(ctx.roots().length2(k)) * d);
    const int nu = ri.nu;
    rel.lhs = {{step(lambda, k, -nu), g.shifted_q(1 + nu)}, {lambda, q_pow(ctx, 0)}};
    rel.rhs = {{ri.mu, g.shifted_q(1 - d)}, {step(ri.mu, k, nu), q_pow(ctx, -d - nu)}};
  }
  return rel;
}

namespace {

// Coefficient of x^t in  sum (q^{m+1} a_{l - m alpha} - a_l) x^l = sum_g a_g C_g(x),
// where C_g collects the three monomials that x^g contributes after the simple
// reflection. Only g = t + j alpha with delta(t) <= j <= delta(t) + m contribute.
Relation reflected_coefficient(const PPartContext& ctx, const RootVector& t, int k) {
  const int n = ctx.n();
  const int m = ctx.nalpha_simple(k);
  const int l = ctx.ell()[k];
  const auto& tw = ctx.twisted();
  Relation rel;
  rel.lhs = {{step(t, k, -m), q_pow(ctx, m + 1)}, {t, -q_pow(ctx, 0)}};
  const int d0 = tw.delta(k, t);
  for (int j = d0; j <= d0 + m; ++j) {
    const RootVector g = step(t, k, j);
    const int dg = tw.delta(k, g);
    const GaussElement gs = g_star(n, static_cast<long long>(ctx.roots().length2(k)) * dg);
    const int pre = m - l + dg;
    // exponent of x_k relative to sigma_k g + m alpha_k
    const int base = g[k] - ctx.roots().pairing(g, k) + m;
    const int ep = l + 1 - remainder_mod(dg, m);
    if (base + ep == t[k]) rel.rhs.emplace_back(g, q_pow(ctx, ep + pre) - q_pow(ctx, ep + pre - 1));
    if (base + l + 1 - m == t[k]) rel.rhs.emplace_back(g, -gs.shifted_q(l + 1 - m + pre));
    if (base + l + 1 == t[k]) rel.rhs.emplace_back(g, gs.shifted_q(l + 1 + pre));
  }
  return rel;
}

}  // namespace

std::pair<Relation, Relation> five_term_relations(const PPartContext& ctx, const RootVector& lambda, int k) {
  const RootVector mu = ctx.twisted().bullet_simple(k, lambda);
  return {reflected_coefficient(ctx, lambda, k), reflected_coefficient(ctx, step(mu, k, ctx.nalpha_simple(k)), k)};
}

CheckReport check_recurrence(const PPartContext& ctx, const LaurentPoly& poly, bool five_term) {
  CheckReport rep;
  rep.name = "recurrence";
  const int r = ctx.rank();
  const int n = ctx.n();
  long long relations = 0, nontrivial = 0;
  if (!poly.is_zero()) {
    const auto supp = poly.support();
    int pad = 0;
    for (int k = 0; k < r; ++k) pad = std::max(pad, ctx.nalpha_simple(k));
    RootVector lo = supp.front(), hi = supp.front();
    for (const auto& s : supp)
      for (int i = 0; i < r; ++i) {
        lo[i] = std::min(lo[i], s[i]);
        hi[i] = std::max(hi[i], s[i]);
      }
    std::set<RootVector> cand = relation_candidates(ctx, supp);
    RootVector cur(r);
    for (int i = 0; i < r; ++i) cur[i] = lo[i] - pad;
    while (true) {
      cand.insert(cur);
      int i = 0;
      while (i < r && cur[i] == hi[i] + pad) {
        cur[i] = lo[i] - pad;
        ++i;
      }
      if (i == r) break;
      ++cur[i];
    }

    for (const auto& lambda : cand)
      for (int k = 0; k < r; ++k) {
        const Relation rel = main_relation(ctx, lambda, k);
        const GaussElement lhs = evaluate_side(poly, rel.lhs, n);
        const GaussElement rhs = evaluate_side(poly, rel.rhs, n);
        ++relations;
        if (!lhs.is_zero() || !rhs.is_zero()) ++nontrivial;
        if (lhs != rhs) rep.fail({lambda, k, lhs.to_string(), rhs.to_string()});
        if (five_term) {
          auto [a, b] = five_term_relations(ctx, lambda, k);
          for (const Relation* f : {&a, &b}) {
            ++relations;
            const GaussElement fl = evaluate_side(poly, f->lhs, n);
            const GaussElement fr = evaluate_side(poly, f->rhs, n);
            if (fl != fr) rep.fail({lambda, k, "five-term: " + fl.to_string(), fr.to_string()});
          }
        }
      }
  }
  rep.stats["relations"] = relations;
  rep.stats["nontrivial"] = nontrivial;
  rep.stats["failures"] += 0;
  return rep;
}

CheckReport check_recurrence(const PPart& pp, bool five_term) { return check_recurrence(pp.ctx, pp.poly, five_term); }

CheckReport check_support(const PPart& pp) {
  CheckReport rep;
  rep.name = "support";
  const auto& tw = pp.ctx.twisted();
  long long points = 0;
  for (const auto& lambda : pp.poly.support()) {
    ++points;
    if (tw.position(lambda) == PolytopePosition::Outside)
      rep.fail({lambda, -1, pp.poly.coefficient(lambda).to_string(), "outside the polytope"});
  }
  std::set<RootVector> verts(tw.vertices().begin(), tw.vertices().end());
  for (const auto& v : verts)
    if (pp.poly.coefficient(v).is_zero()) rep.fail({v, -1, "0", "nonzero vertex coefficient"});
  rep.stats["support_points"] = points;
  rep.stats["vertices"] = static_cast<long long>(verts.size());
  rep.stats["failures"] += 0;
  return rep;
}

GaussElement stable_vertex_coeff(const PPartContext& ctx, const WeylElement& w) {
  const RootSystem& rs = ctx.roots();
  const int n = ctx.n();
  const auto& roots = rs.positive_roots();
  const auto& ell = ctx.ell();
  GaussElement acc = GaussElement::constant(n, 1);
  for (int idx : inversion_set(rs, ctx.weyl().inverse(w))) {
    const RootVector& a = roots[idx];
    const int len = rs.norm2(a);
    int num = 0;
    for (int i = 0; i < rs.rank(); ++i) num += a[i] * (ell[i] + 1) * rs.length2(i);
    if (num % len != 0) throw Error("non-integral pairing with theta");
    const int d = num / len;
    acc *= gauss_eval(n, len, d - 1, d);
  }
  return acc;
}

CheckReport check_stable(const PPart& pp) {
  CheckReport rep;
  rep.name = "stable";
  const PPartContext& ctx = pp.ctx;
  const auto& tw = ctx.twisted();
  for (const auto& w : ctx.weyl()) {
    const RootVector& v = tw.vertices()[w.id];
    const GaussElement expected = stable_vertex_coeff(ctx, ctx.weyl().inverse(w));
    const GaussElement actual = pp.poly.coefficient(v);
    if (actual != expected) rep.fail({v, -1, actual.to_string(), expected.to_string()});
  }
  rep.stats["vertices_checked"] = static_cast<long long>(ctx.weyl().size());
  const StableRangeVerdict verdict = is_stable_range(ctx);
  if (verdict.range == StableRange::Stable) {
    std::set<RootVector> verts(tw.vertices().begin(), tw.vertices().end());
    long long extra = 0;
    for (const auto& s : pp.poly.support())
      if (!verts.count(s)) {
        ++extra;
        rep.fail({s, -1, pp.poly.coefficient(s).to_string(), "0 (stable range)"});
      }
    rep.stats["stable_range"] = 1;
    rep.stats["non_vertex_support"] = extra;
  } else {
    rep.stats["stable_range"] = 0;
  }
  rep.stats["failures"] += 0;
  return rep;
}

CheckReport check_gap(const PPart& pp, int max_height) {
  CheckReport rep;
  rep.name = "gap";
  const auto& tw = pp.ctx.twisted();
  const LaurentPoly f = compute_f_truncated(pp, max_height);
  long long interior = 0;
  for (const auto& lambda : tw.lattice_points())
    if (tw.position(lambda) == PolytopePosition::Interior && height(lambda) <= max_height) ++interior;
  for (const auto& [e, c] : f.terms()) {
    RootVector lambda = e.to_vector(pp.ctx.rank());
    if (tw.position(lambda) == PolytopePosition::Interior) rep.fail({lambda, -1, c.to_string(), "0 (interior)"});
  }
  rep.stats["series_terms"] = static_cast<long long>(f.size());
  rep.stats["interior_points"] = interior;
  rep.stats["truncation"] = max_height;
  rep.stats["failures"] += 0;
  return rep;
}

CheckReport check_gap(const PPartContext& ctx, int max_height) { return check_gap(compute_N(ctx), max_height); }

namespace {

int coxeter_order(const RootSystem& rs, int i, int j) {
  if (i == j) return 1;
  switch (rs.cartan(i, j) * rs.cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw Error("unexpected Cartan entries");
}

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (int k : word) s += "s" + std::to_string(k + 1);
  return s;
}

}  // namespace

CheckReport check_coxeter(const PPartContext& ctx, int samples, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "coxeter";
  const int r = ctx.rank();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3);
  long long words = 0;
  for (int s = 0; s < samples; ++s) {
    RootVector beta(r);
    for (auto& b : beta) b = coord(rng);
    const Fraction f = to_fraction(LaurentPoly::monomial(r, Exponent(beta), GaussElement::constant(ctx.n(), 1)));
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        const int order = coxeter_order(ctx.roots(), i, j);
        std::vector<int> word;
        for (int t = 0; t < order; ++t) {
          word.push_back(i);
          word.push_back(j);
        }
        ++words;
        if (!fractions_equal(ctx, act_word(ctx, word, f), f))
          rep.fail({beta, i, "x^beta | " + word_string(word), "x^beta"});
      }
  }
  rep.stats["samples"] = samples;
  rep.stats["words"] = words;
  rep.stats["failures"] += 0;
  return rep;
}

CheckReport check_shift(const PPartContext& ctx, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "shift";
  const int n = ctx.n();
  const auto regular = regular_subset(dominant_weights_theta(ctx.twisted()));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3);
  LaurentPoly combo = ctx.zero();
  std::map<RootVector, GaussElement> expected;
  for (const auto& xi : regular) {
    const LaurentPoly shifted = shift_ppart(ctx, xi.weight);
    const CheckReport sub = check_recurrence(ctx, shifted);
    if (!sub.passed)
      rep.fail({xi.offset, -1, "shifted p-part for weight " + format_vector(xi.weight), "satisfies the recurrences"});
    GaussElement c = GaussElement::q_power(n, small(rng), small(rng));
    if (n > 1) c += GaussElement::generator(n, 1 + (rng() % (n - 1)));
    if (c.is_zero()) continue;
    combo += shifted.scaled(c);
    expected.emplace(xi.offset, c);
  }
  std::map<RootVector, GaussElement> got;
  try {
    for (auto& t : decompose(ctx, combo)) got.emplace(t.xi.offset, t.multiplicity);
  } catch (const NonzeroFinalRemainder& e) {
    rep.fail({RootVector(ctx.rank(), 0), -1, e.what(), "zero remainder"});
  }
  for (const auto& [off, c] : expected) {
    auto it = got.find(off);
    const std::string g = it == got.end() ? "0" : it->second.to_string();
    if (g != c.to_string()) rep.fail({off, -1, g, c.to_string()});
  }
  for (const auto& [off, c] : got)
    if (!expected.count(off)) rep.fail({off, -1, c.to_string(), "0"});
  rep.stats["regular_weights"] = static_cast<long long>(regular.size());
  rep.stats["failures"] += 0;
  return rep;
}

CheckReport check_uniqueness(const PPart& pp, std::uint64_t seed) {
  CheckReport rep;
  rep.name = "uniqueness";
  const PPartContext& ctx = pp.ctx;
  const long long expected = static_cast<long long>(regular_subset(dominant_weights_theta(ctx.twisted())).size());
  const int dim = recurrence_space_dim_vote(ctx, seed);
  if (dim != expected)
    rep.fail({RootVector(ctx.rank(), 0), -1, "dimension " + std::to_string(dim),
              "#regular dominant weights " + std::to_string(expected)});
  rep.stats["dimension"] = dim;
  rep.stats["regular_weights"] = expected;
  const bool untwisted = std::all_of(ctx.ell().begin(), ctx.ell().end(), [](int l) { return l == 0; });
  if (untwisted) {
    const NormalizedSolve s = solve_normalized(pp, seed);
    if (!(s.relative_error < 1e-9))
      rep.fail({RootVector(ctx.rank(), 0), -1, "relative error " + std::to_string(s.relative_error), "< 1e-9"});
    rep.stats["normalized_solve"] = 1;
  }
  rep.stats["failures"] += 0;
  return rep;
}

}  // namespace wmds

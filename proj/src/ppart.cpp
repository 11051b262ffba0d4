#include "wmds/ppart.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wmds {

namespace {

std::vector<Atom> multiset_difference(const std::vector<Atom>& a, const std::vector<Atom>& b) {
  std::vector<Atom> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

GaussElement q_pow(const PPartContext& ctx, int e) { return GaussElement::q_power(ctx.n(), e); }

}  // namespace

PPart compute_N(const PPartContext& ctx) {
  const WeylGroup& weyl = ctx.weyl();
  std::vector<Fraction> act(weyl.size());
  act[0] = to_fraction(ctx.one());
  for (const auto& w : weyl) {
    if (w.id == 0) continue;
    act[w.id] = act_simple(ctx, w.last_letter, act[w.parent]);
  }

  // Least common multiple of the atom multisets.
  std::map<Atom, int> need;
  for (const auto& f : act) {
    std::map<Atom, int> here;
    for (const auto& a : f.atoms) ++here[a];
    for (const auto& [a, c] : here) need[a] = std::max(need[a], c);
  }
  std::vector<Atom> common;
  for (const auto& [a, c] : need) common.insert(common.end(), c, a);

  LaurentPoly sum = ctx.zero();
  for (const auto& w : weyl) {
    const Fraction& f = act[w.id];
    LaurentPoly term = f.num.times_monomial(j_monomial(ctx, w));
    for (const auto& a : multiset_difference(common, f.atoms))
      term = term.times_binomial(ctx.atom_exponent(a.root), q_pow(ctx, a.a));
    sum += term;
  }

  // N = sum * D / (Delta * common)
  std::vector<Atom> den = delta_atoms(ctx);
  den.insert(den.end(), common.begin(), common.end());
  std::sort(den.begin(), den.end());
  const std::vector<Atom> dnum = d_atoms(ctx);
  std::vector<Atom> num_left = multiset_difference(dnum, den);
  std::vector<Atom> den_left = multiset_difference(den, dnum);

  LaurentPoly poly = std::move(sum);
  std::vector<Atom> pending;
  for (const auto& a : den_left) {
    auto q = try_divide_binomial(poly, ctx.atom_exponent(a.root), q_pow(ctx, a.a));
    if (q) poly = std::move(*q);
    else pending.push_back(a);
  }
  for (const auto& a : num_left) poly = poly.times_binomial(ctx.atom_exponent(a.root), q_pow(ctx, a.a));
  for (const auto& a : pending) poly = divide_binomial(poly, ctx.atom_exponent(a.root), q_pow(ctx, a.a));

  for (const auto& [e, c] : poly.terms())
    if (!e.nonnegative(ctx.rank()))
      throw NonzeroRemainder("p-part has a term with a negative exponent", poly);
  GaussElement a0 = poly.coefficient(Exponent());
  if (!a0.is_unit()) throw Error("constant term of the p-part is not a unit: " + a0.to_string());
  poly = poly.scaled(a0.unit_inverse());
  return {ctx, std::move(poly), std::move(a0)};
}

LaurentPoly compute_f_truncated(const PPart& pp, int max_height) {
  const PPartContext& ctx = pp.ctx;
  LaurentPoly f = pp.poly.truncated(max_height);
  for (const auto& a : delta_atoms(ctx))
    f = f.times_binomial(ctx.atom_exponent(a.root), q_pow(ctx, a.a), max_height);
  for (const auto& a : d_atoms(ctx))
    f = series_divide_binomial(f, ctx.atom_exponent(a.root), q_pow(ctx, a.a), max_height);
  return f;
}

LaurentPoly compute_f_truncated(const PPartContext& ctx, int max_height) {
  return compute_f_truncated(compute_N(ctx), max_height);
}

LaurentPoly shift_ppart(const PPartContext& ctx, const std::vector<int>& xi_weight) {
  const RootSystem& rs = ctx.roots();
  const int r = rs.rank();
  if (static_cast<int>(xi_weight.size()) != r) throw NotRegularDominant("weight has the wrong length");
  std::vector<int> ell(r);
  std::vector<int> diff(r);
  for (int i = 0; i < r; ++i) {
    if (xi_weight[i] < 1) throw NotRegularDominant("weight " + format_vector(xi_weight) + " is not regular dominant");
    ell[i] = xi_weight[i] - 1;
    diff[i] = ctx.twist().theta_weight[i] - xi_weight[i];
  }
  std::vector<Rational> off = rs.from_weight(diff);
  RootVector shift(r);
  for (int i = 0; i < r; ++i) {
    if (off[i].denominator() != 1 || off[i].numerator() < 0)
      throw NotRegularDominant("weight " + format_vector(xi_weight) + " is not a dominant weight below theta");
    shift[i] = static_cast<int>(off[i].numerator());
  }
  PPart sub = compute_N(ctx.with_ell(std::move(ell)));
  return sub.poly.shifted(Exponent(shift));
}

std::vector<DecompositionTerm> decompose(const PPartContext& ctx, const LaurentPoly& poly) {
  LaurentPoly rem = poly;
  std::vector<DecompositionTerm> out;
  for (const auto& xi : dominant_weights_theta(ctx.twisted())) {
    GaussElement c = rem.coefficient(xi.offset);
    if (c.is_zero()) continue;
    if (!xi.regular())
      throw NonzeroFinalRemainder("nonzero coefficient at theta - xi for the non-regular weight " +
                                  format_vector(xi.weight));
    rem -= shift_ppart(ctx, xi.weight).scaled(c);
    out.push_back({xi, std::move(c)});
  }
  if (!rem.is_zero())
    throw NonzeroFinalRemainder("decomposition left a nonzero remainder with " + std::to_string(rem.size()) +
                                " terms");
  return out;
}

const char* to_string(StableRange s) {
  switch (s) {
    case StableRange::Stable: return "stable";
    case StableRange::Unstable: return "unstable";
    case StableRange::Unknown: return "unknown";
  }
  return "unknown";
}

StableRangeVerdict is_stable_range(const PPartContext& ctx, bool probe) {
  if (ctx.roots().family() == Family::A) {
    int total = 0;
    for (int l : ctx.ell()) total += l + 1;
    return {ctx.n() >= total ? StableRange::Stable : StableRange::Unstable, "criterion"};
  }
  if (!probe) return {StableRange::Unknown, "none"};
  PPart pp = compute_N(ctx);
  std::set<RootVector> verts(ctx.twisted().vertices().begin(), ctx.twisted().vertices().end());
  auto supp = pp.poly.support();
  std::set<RootVector> s(supp.begin(), supp.end());
  return {s == verts ? StableRange::Stable : StableRange::Unstable, "empirical"};
}

LaurentPoly alternating_vertex_sum(const PPartContext& ctx) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& w : ctx.weyl())
    terms.emplace_back(Exponent(ctx.twisted().vertices()[w.id]), GaussElement::constant(1, w.sign));
  return LaurentPoly::from_terms(ctx.rank(), 1, std::move(terms));
}

LaurentPoly specialize_q_one(const LaurentPoly& poly) {
  if (poly.degree() != 1) throw DegreeMismatch("specialization at q = 1 needs degree 1 coefficients");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, c] : poly.terms()) terms.emplace_back(e, GaussElement::constant(1, c.coefficient_sum()));
  return LaurentPoly::from_terms(poly.rank(), 1, std::move(terms));
}

}  // namespace wmds

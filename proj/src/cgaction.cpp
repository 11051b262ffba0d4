#include "wmds/cgaction.hpp"

#include <algorithm>
#include <numeric>

namespace wmds {

PPartContext::PPartContext(Family family, int rank, int n, std::vector<int> ell, std::size_t weyl_cap) : n_(n) {
  if (n < 1) throw Error("metaplectic degree must be at least 1");
  if (n > GaussElement::kMaxDegree)
    throw Error("metaplectic degree above " + std::to_string(GaussElement::kMaxDegree) + " is not supported");
  if (rank > kMaxRank) throw InvalidFamilyRank("rank above " + std::to_string(kMaxRank) + " is not supported");
  auto rs = std::make_shared<RootSystem>(RootSystem::build(family, rank));
  auto weyl = std::make_shared<WeylGroup>(enumerate_weyl(*rs, weyl_cap));
  rs_ = rs;
  weyl_ = weyl;
  tw_ = std::make_shared<TwistedWeyl>(*rs_, *weyl_, make_twist(*rs_, std::move(ell)));
  init_roots();
}

void PPartContext::init_roots() {
  const auto& roots = rs_->positive_roots();
  nalpha_.clear();
  atom_exp_.clear();
  for (const auto& a : roots) {
    int na = n_ / std::gcd(n_, rs_->norm2(a));
    nalpha_.push_back(na);
    atom_exp_.push_back(Exponent(a).scaled(na));
  }
}

PPartContext PPartContext::with_ell(std::vector<int> ell) const {
  PPartContext c;
  c.n_ = n_;
  c.rs_ = rs_;
  c.weyl_ = weyl_;
  c.tw_ = std::make_shared<TwistedWeyl>(*rs_, *weyl_, make_twist(*rs_, std::move(ell)));
  c.nalpha_ = nalpha_;
  c.atom_exp_ = atom_exp_;
  return c;
}

Exponent PPartContext::simple_exponent(int k, int multiple) const {
  RootVector v(rank(), 0);
  v[k] = multiple;
  return Exponent(v);
}

Monomial change_of_vars(const PPartContext& ctx, int k, const Monomial& mono) {
  RootVector beta = mono.exponent.to_vector(ctx.rank());
  int c = ctx.roots().pairing(beta, k);
  return {mono.exponent - ctx.simple_exponent(k, c), mono.coeff.shifted_q(-c)};
}

AtomImage atom_transform(const PPartContext& ctx, int k, const Atom& atom) {
  const RootSystem& rs = ctx.roots();
  const RootVector& alpha = rs.positive_roots()[atom.root];
  const int na = ctx.nalpha(atom.root);
  RootVector image = rs.reflect(k, alpha);
  const int n = ctx.n();
  int idx = rs.root_index(image);
  if (idx >= 0) {
    int a = atom.a + na * (height(image) - height(alpha));
    return {{idx, a}, {Exponent(), GaussElement::constant(n, 1)}};
  }
  // alpha = alpha_k: 1 - q^b x^{-m alpha} = -q^b x^{-m alpha} (1 - q^{-b} x^{m alpha})
  int b = atom.a - 2 * na * height(alpha);
  return {{atom.root, -b}, {ctx.atom_exponent(atom.root).scaled(-1), GaussElement::q_power(n, b, -1)}};
}

namespace {

// Numerator of P_beta + Q_{sigma . beta} over (1 - q^{m-1} x_k^m).
LaurentPoly pq_numerator(const PPartContext& ctx, int k, int delta) {
  const int n = ctx.n();
  const int m = ctx.nalpha_simple(k);
  const int l = ctx.ell()[k];
  const int e = l + 1 - remainder_mod(delta, m);
  const GaussElement g = g_star(n, static_cast<long long>(ctx.roots().length2(k)) * delta);
  GaussElement p = GaussElement::q_power(n, e) - GaussElement::q_power(n, e - 1);
  std::vector<LaurentPoly::Term> terms;
  terms.emplace_back(ctx.simple_exponent(k, e), std::move(p));
  terms.emplace_back(ctx.simple_exponent(k, l + 1 - m), -g.shifted_q(l + 1 - m));
  terms.emplace_back(ctx.simple_exponent(k, l + 1), g.shifted_q(l + 1));
  return LaurentPoly::from_terms(ctx.rank(), n, std::move(terms));
}

}  // namespace

Fraction pq_factors(const PPartContext& ctx, int k, const RootVector& beta) {
  int delta = ctx.twisted().delta(k, beta);
  return {pq_numerator(ctx, k, delta), {Atom{ctx.roots().simple_root_index(k), ctx.nalpha_simple(k) - 1}}};
}

Fraction act_simple(const PPartContext& ctx, int k, const Fraction& f) {
  const int r = ctx.rank();
  const int n = ctx.n();
  // The bracket depends on beta only through delta_k(beta) mod m.
  const int m = ctx.nalpha_simple(k);
  std::vector<LaurentPoly> brackets(m);
  std::vector<bool> have(m, false);

  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.num.size() * 3);
  for (const auto& [e, c] : f.num.terms()) {
    RootVector beta = e.to_vector(r);
    int delta = ctx.twisted().delta(k, beta);
    int slot = remainder_mod(delta, m);
    if (!have[slot]) {
      brackets[slot] = pq_numerator(ctx, k, delta);
      have[slot] = true;
    }
    Monomial moved = change_of_vars(ctx, k, {e, c});
    for (const auto& [be, bc] : brackets[slot].terms()) terms.emplace_back(moved.exponent + be, moved.coeff * bc);
  }
  Fraction out{LaurentPoly::from_terms(r, n, std::move(terms)), {}};

  Monomial unit{Exponent(), GaussElement::constant(n, 1)};
  for (const auto& atom : f.atoms) {
    AtomImage img = atom_transform(ctx, k, atom);
    out.atoms.push_back(img.atom);
    unit.exponent = unit.exponent - img.unit.exponent;
    unit.coeff *= img.unit.coeff.unit_inverse();
  }
  out.atoms.push_back({ctx.roots().simple_root_index(k), m - 1});
  out.num = out.num.times_monomial(unit);
  std::sort(out.atoms.begin(), out.atoms.end());
  cancel_atoms(ctx, out);
  return out;
}

Fraction act_word(const PPartContext& ctx, const std::vector<int>& word, const Fraction& f) {
  Fraction cur = f;
  for (int k : word) {
    if (k < 0 || k >= ctx.rank()) throw Error("simple reflection index out of range");
    cur = act_simple(ctx, k, cur);
  }
  return cur;
}

LaurentPoly expand_atoms(const PPartContext& ctx, const std::vector<Atom>& atoms) {
  LaurentPoly p = ctx.one();
  for (const auto& a : atoms) p = p.times_binomial(ctx.atom_exponent(a.root), GaussElement::q_power(ctx.n(), a.a));
  return p;
}

void cancel_atoms(const PPartContext& ctx, Fraction& f) {
  std::vector<Atom> kept;
  for (const auto& a : f.atoms) {
    if (f.num.is_zero()) break;
    auto q = try_divide_binomial(f.num, ctx.atom_exponent(a.root), GaussElement::q_power(ctx.n(), a.a));
    if (q) {
      f.num = std::move(*q);
    } else {
      kept.push_back(a);
    }
  }
  if (f.num.is_zero()) kept.clear();
  f.atoms = std::move(kept);
}

bool fractions_equal(const PPartContext& ctx, const Fraction& a, const Fraction& b) {
  std::vector<Atom> only_a, only_b;
  std::set_difference(a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end(), std::back_inserter(only_a));
  std::set_difference(b.atoms.begin(), b.atoms.end(), a.atoms.begin(), a.atoms.end(), std::back_inserter(only_b));
  LaurentPoly lhs = a.num, rhs = b.num;
  for (const auto& t : only_b) lhs = lhs.times_binomial(ctx.atom_exponent(t.root), GaussElement::q_power(ctx.n(), t.a));
  for (const auto& t : only_a) rhs = rhs.times_binomial(ctx.atom_exponent(t.root), GaussElement::q_power(ctx.n(), t.a));
  return lhs == rhs;
}

Fraction to_fraction(const LaurentPoly& p) { return {p, {}}; }

Monomial j_monomial(const PPartContext& ctx, const WeylElement& w) {
  const auto& roots = ctx.roots().positive_roots();
  Exponent e;
  int qexp = 0;
  for (int idx : inversion_set(ctx.roots(), w)) {
    e = e + ctx.atom_exponent(idx);
    qexp += ctx.nalpha(idx) * height(roots[idx]);
  }
  return {e, GaussElement::q_power(ctx.n(), qexp, w.sign)};
}

LaurentPoly j_poly(const PPartContext& ctx, const WeylElement& w) {
  return LaurentPoly::monomial(ctx.rank(), j_monomial(ctx, w));
}

namespace {

std::vector<Atom> boundary_atoms(const PPartContext& ctx, int offset) {
  std::vector<Atom> out;
  const auto& roots = ctx.roots().positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    int idx = static_cast<int>(i);
    out.push_back({idx, ctx.nalpha(idx) * height(roots[i]) + offset});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Atom> delta_atoms(const PPartContext& ctx) { return boundary_atoms(ctx, 0); }
std::vector<Atom> d_atoms(const PPartContext& ctx) { return boundary_atoms(ctx, -1); }

BoundaryPolys boundary_polys(const PPartContext& ctx) {
  return {expand_atoms(ctx, delta_atoms(ctx)), expand_atoms(ctx, d_atoms(ctx))};
}

}  // namespace wmds

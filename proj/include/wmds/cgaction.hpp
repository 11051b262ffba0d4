#pragma once

// The metaplectic Weyl group action on rational functions in x, twisted by ell.

#include <memory>
#include <vector>

#include "wmds/coeffring.hpp"
#include "wmds/laurent.hpp"
#include "wmds/rootsys.hpp"

namespace wmds {

class PPartContext {
 public:
  PPartContext(Family family, int rank, int n, std::vector<int> ell,
               std::size_t weyl_cap = WeylGroup::kDefaultCap);

  /// Same root system and degree, different twisting parameter.
  PPartContext with_ell(std::vector<int> ell) const;

  const RootSystem& roots() const { return *rs_; }
  const WeylGroup& weyl() const { return *weyl_; }
  const TwistedWeyl& twisted() const { return *tw_; }
  const TwistContext& twist() const { return tw_->twist(); }
  const std::vector<int>& ell() const { return tw_->twist().ell; }
  int rank() const { return rs_->rank(); }
  int n() const { return n_; }

  /// n(alpha) = n / gcd(n, |alpha|^2), by positive-root index.
  int nalpha(int root) const { return nalpha_[root]; }
  int nalpha_simple(int k) const { return nalpha_[rs_->simple_root_index(k)]; }
  /// The exponent n(alpha) alpha.
  const Exponent& atom_exponent(int root) const { return atom_exp_[root]; }
  Exponent simple_exponent(int k, int multiple) const;

  LaurentPoly zero() const { return LaurentPoly(rank(), n_); }
  LaurentPoly one() const { return LaurentPoly::constant(rank(), GaussElement::constant(n_, 1)); }

 private:
  PPartContext() = default;
  void init_roots();

  int n_ = 1;
  std::shared_ptr<const RootSystem> rs_;
  std::shared_ptr<const WeylGroup> weyl_;
  std::shared_ptr<const TwistedWeyl> tw_;
  std::vector<int> nalpha_;
  std::vector<Exponent> atom_exp_;
};

/// x^beta at sigma_k x: q^{d(sigma_k beta - beta)} x^{sigma_k beta}.
Monomial change_of_vars(const PPartContext& ctx, int k, const Monomial& mono);

struct AtomImage {
  Atom atom;
  Monomial unit;
};

/// The factor of `atom` evaluated at sigma_k x, written as unit * (new factor).
AtomImage atom_transform(const PPartContext& ctx, int k, const Atom& atom);

/// P_{beta} + Q_{sigma_k . beta} as a fraction over the atom (alpha_k, n(alpha_k) - 1).
Fraction pq_factors(const PPartContext& ctx, int k, const RootVector& beta);

Fraction act_simple(const PPartContext& ctx, int k, const Fraction& f);
/// Applies the letters left to right: f | s_{word[0]} s_{word[1]} ...
Fraction act_word(const PPartContext& ctx, const std::vector<int>& word, const Fraction& f);

/// Expanded product of atom factors.
LaurentPoly expand_atoms(const PPartContext& ctx, const std::vector<Atom>& atoms);
/// Removes every atom that divides the numerator exactly.
void cancel_atoms(const PPartContext& ctx, Fraction& f);
bool fractions_equal(const PPartContext& ctx, const Fraction& a, const Fraction& b);
Fraction to_fraction(const LaurentPoly& p);

/// j(w, x) = sgn(w) prod_{alpha in Phi(w)} q^{n(alpha) d(alpha)} x^{n(alpha) alpha}.
Monomial j_monomial(const PPartContext& ctx, const WeylElement& w);
LaurentPoly j_poly(const PPartContext& ctx, const WeylElement& w);

/// Atoms of Delta (a = n(alpha) d(alpha)) and of D (a = n(alpha) d(alpha) - 1).
std::vector<Atom> delta_atoms(const PPartContext& ctx);
std::vector<Atom> d_atoms(const PPartContext& ctx);

struct BoundaryPolys {
  LaurentPoly delta;
  LaurentPoly d;
};
BoundaryPolys boundary_polys(const PPartContext& ctx);

}  // namespace wmds

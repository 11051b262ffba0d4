#pragma once

// Laurent polynomials in x_1..x_r with GaussElement coefficients.
//
// Exponents are root-lattice vectors in simple-root coordinates. Terms are kept
// sorted in the graded order: total height first, then lexicographic. Adding a
// fixed vector to every exponent preserves this order, which the binomial
// routines below exploit.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wmds/coeffring.hpp"
#include "wmds/errors.hpp"
#include "wmds/rootsys.hpp"

namespace wmds {

constexpr int kMaxRank = 8;

class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(const RootVector& v);

  int operator[](int i) const { return v_[i + 1]; }
  int height() const { return v_[0]; }
  RootVector to_vector(int rank) const;
  bool nonnegative(int rank) const;

  Exponent operator+(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;
  Exponent scaled(int c) const;
  auto operator<=>(const Exponent&) const = default;

 private:
  std::array<std::int32_t, kMaxRank + 1> v_{};  // v_[0] caches the height
};

struct Monomial {
  Exponent exponent;
  GaussElement coeff;
};

class LaurentPoly {
 public:
  using Term = std::pair<Exponent, GaussElement>;

  LaurentPoly() = default;
  LaurentPoly(int rank, int n);

  static LaurentPoly constant(int rank, const GaussElement& c);
  static LaurentPoly monomial(int rank, const Exponent& e, const GaussElement& c);
  static LaurentPoly monomial(int rank, const Monomial& m) { return monomial(rank, m.exponent, m.coeff); }
  /// Builds from unsorted terms, merging repeated exponents.
  static LaurentPoly from_terms(int rank, int n, std::vector<Term> terms);

  int rank() const { return rank_; }
  int degree() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.back(); }

  GaussElement coefficient(const Exponent& e) const;
  GaussElement coefficient(const RootVector& v) const { return coefficient(Exponent(v)); }
  std::vector<RootVector> support() const;
  int max_height() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& rhs) const = default;

  LaurentPoly scaled(const GaussElement& c) const;
  LaurentPoly times_monomial(const Monomial& m) const;
  LaurentPoly shifted(const Exponent& e) const;
  /// this * (1 - c x^gamma), optionally dropping terms above height `cap`.
  LaurentPoly times_binomial(const Exponent& gamma, const GaussElement& c,
                             std::optional<int> cap = std::nullopt) const;
  LaurentPoly truncated(int max_height) const;

  /// Evaluate at x_i = xs[i] under a specialization of the coefficients.
  std::complex<double> evaluate(const SpecializationMap& m,
                                const std::vector<std::complex<double>>& xs) const;

  /// {"k1,...,kr": "<coefficient>"} in graded order.
  nlohmann::ordered_json to_json() const;
  static LaurentPoly from_json(int rank, int n, const nlohmann::json& j);

 private:
  void check_compatible(const LaurentPoly& o) const;

  int rank_ = 1;
  int n_ = 1;
  std::vector<Term> terms_;
};

class NonzeroRemainder : public Error {
 public:
  NonzeroRemainder(const std::string& what, LaurentPoly remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

class BadConstantTerm : public Error {
 public:
  using Error::Error;
};

/// Exact quotient a / b. The leading coefficient of b in the graded order
/// must be a unit. Throws NonzeroRemainder when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// a / (1 - c x^gamma) for gamma of positive height and c a unit, exact.
LaurentPoly divide_binomial(const LaurentPoly& a, const Exponent& gamma, const GaussElement& c);
/// As divide_binomial, but only checks divisibility.
std::optional<LaurentPoly> try_divide_binomial(const LaurentPoly& a, const Exponent& gamma,
                                               const GaussElement& c);
/// Power-series quotient a / (1 - c x^gamma) truncated to height <= max_height.
LaurentPoly series_divide_binomial(const LaurentPoly& a, const Exponent& gamma, const GaussElement& c,
                                   int max_height);

/// Series inverse of b truncated to height <= max_height. b must have constant
/// term 1 and all other terms of positive height.
LaurentPoly truncated_inverse(const LaurentPoly& b, int max_height);

/// A denominator factor (1 - q^a x^{n(alpha) alpha}) for the positive root
/// with index `root`.
struct Atom {
  int root = 0;
  int a = 0;
  auto operator<=>(const Atom&) const = default;
};

/// num / prod(atoms); atoms is a sorted multiset.
struct Fraction {
  LaurentPoly num;
  std::vector<Atom> atoms;
};

}  // namespace wmds

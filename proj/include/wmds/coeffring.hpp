#pragma once

// Exact coefficient ring Z[q, q^{-1}][g_1, ..., g_{n-1}] / (g_s g_{n-s} - q).
//
// q stands for the norm |p| of the prime and g_s for the Gauss sum g_s(1, p).
// Elements are kept in the normal form where no monomial contains both g_s and
// g_{n-s} (s != n - s), and g_{n/2} appears at most to the first power.
//
// Internally a monomial stores one signed exponent per pair {s, n - s}:
// z > 0 means g_s^z and z < 0 means g_{n-s}^{-z}; when n is even the last slot
// holds the exponent (0 or 1) of g_{n/2}.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wmds/errors.hpp"

namespace wmds {

using Integer = boost::multiprecision::cpp_int;

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

struct SpecializationMap {
  std::complex<double> q_value;
  std::vector<std::complex<double>> g_values;  // g_values[s - 1] is the image of g_s

  int degree() const { return static_cast<int>(g_values.size()) + 1; }
};

class GaussElement {
 public:
  static constexpr int kMaxDegree = 24;
  static constexpr int kSlots = kMaxDegree / 2;

  struct Key {
    std::int32_t q = 0;
    std::array<std::int16_t, kSlots> z{};
    auto operator<=>(const Key&) const = default;
  };
  struct Term {
    Key key;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };
  /// A monomial q^{q_exp} prod g_s^{g[s-1]} c, not necessarily normal.
  struct RawTerm {
    int q_exp = 0;
    std::vector<int> g;  // length n - 1, nonnegative
    Integer coeff;
  };

  GaussElement() : GaussElement(1) {}
  explicit GaussElement(int n);

  static GaussElement constant(int n, const Integer& c);
  static GaussElement q_power(int n, int e, const Integer& c = 1);
  /// g_s with s reduced mod n; requires n not dividing s.
  static GaussElement generator(int n, long long s);
  static GaussElement normalize(int n, std::span<const RawTerm> raw);

  int degree() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// The exponent vector (e_1, ..., e_{n-1}) of a normal-form monomial.
  std::vector<int> g_exponents(const Key& key) const;

  /// Single term with coefficient +-1; such elements are invertible.
  bool is_unit() const;
  GaussElement unit_inverse() const;
  bool is_constant(long long c) const;

  GaussElement operator-() const;
  GaussElement& operator+=(const GaussElement& rhs);
  GaussElement& operator-=(const GaussElement& rhs);
  GaussElement& operator*=(const GaussElement& rhs);
  friend GaussElement operator+(GaussElement a, const GaussElement& b) { return a += b; }
  friend GaussElement operator-(GaussElement a, const GaussElement& b) { return a -= b; }
  friend GaussElement operator*(const GaussElement& a, const GaussElement& b);
  bool operator==(const GaussElement& rhs) const = default;

  /// Multiplication by q^e, cheaper than a general product.
  GaussElement shifted_q(int e) const;
  void shift_q_inplace(int e);

  /// Canonical text: terms ordered by (q exponent, g exponent vector),
  /// e.g. "-1 + q^2*g1".
  std::string to_string() const;
  static GaussElement parse(int n, std::string_view text);

  /// Sum of the integer coefficients; the value at q = 1 for n = 1.
  Integer coefficient_sum() const;

  // Monomial arithmetic on keys; returns the product key (q adjusted).
  Key multiply_keys(const Key& a, const Key& b) const;

 private:
  static void combine_sorted(std::vector<Term>& terms);
  int pair_slots() const { return (n_ - 1) / 2; }
  bool has_middle() const { return n_ % 2 == 0; }

  int n_ = 1;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const GaussElement& e);

/// g_t(p): -1 when n | t, otherwise the generator g_{t mod n}.
GaussElement gauss_symbol(int n, long long t);
/// g*_t(p): -1 when n | t, otherwise g_t(p) / q.
GaussElement g_star(int n, long long t);
/// g_t(p^k, p^l) for k, l >= 0.
GaussElement gauss_eval(int n, long long t, int k, int l);

std::complex<double> specialize(const GaussElement& e, const SpecializationMap& m);
/// Deterministic in the seed; q real in [2, 16], g_s g_{n-s} = q.
SpecializationMap random_specialization(int n, std::uint64_t seed);

}  // namespace wmds

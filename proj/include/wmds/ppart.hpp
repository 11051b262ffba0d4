#pragma once

// p-parts N(x; ell), the modified series f(x; ell), and checkers for their
// structural properties.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wmds/cgaction.hpp"
#include "wmds/laurent.hpp"
#include "wmds/rootsys.hpp"

namespace wmds {

class NotRegularDominant : public Error {
 public:
  using Error::Error;
};

class NonzeroFinalRemainder : public Error {
 public:
  using Error::Error;
};

struct PPart {
  PPartContext ctx;
  LaurentPoly poly;
  /// The raw constant coefficient divided out during normalization.
  GaussElement unit;
};

PPart compute_N(const PPartContext& ctx);

/// f = Delta N / D expanded as a power series, terms of height <= max_height.
LaurentPoly compute_f_truncated(const PPart& pp, int max_height);
LaurentPoly compute_f_truncated(const PPartContext& ctx, int max_height);

struct Counterexample {
  RootVector lambda;
  int k = -1;  // simple root index, or -1 when not applicable
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, long long> stats;

  void fail(Counterexample c);
  nlohmann::ordered_json to_json() const;
};

/// A linear relation sum lhs = sum rhs among coefficients a_lambda.
struct Relation {
  std::vector<std::pair<RootVector, GaussElement>> lhs;
  std::vector<std::pair<RootVector, GaussElement>> rhs;
};

/// The relation at (lambda, k) in the two-case form (delta divisible by
/// n(alpha_k) or not).
Relation main_relation(const PPartContext& ctx, const RootVector& lambda, int k);
/// The two five-term relations at (lambda, k): the coefficients of x^lambda and
/// x^{mu + m alpha} in the reflection identity for N. Their combination is
/// main_relation.
std::pair<Relation, Relation> five_term_relations(const PPartContext& ctx, const RootVector& lambda, int k);

/// Coefficient relations along every simple root; optionally the two
/// five-term relations they are assembled from.
CheckReport check_recurrence(const PPart& pp, bool five_term = false);
CheckReport check_recurrence(const PPartContext& ctx, const LaurentPoly& poly, bool five_term = false);

CheckReport check_support(const PPart& pp);

/// prod over alpha in Phi(w^{-1}) of g_{|alpha|^2}(p^{d-1}, p^d), d = <theta, alpha>.
GaussElement stable_vertex_coeff(const PPartContext& ctx, const WeylElement& w);
CheckReport check_stable(const PPart& pp);

/// Nonzero coefficients of f up to height max_height avoid the interior of the polytope.
CheckReport check_gap(const PPart& pp, int max_height);
CheckReport check_gap(const PPartContext& ctx, int max_height);

/// (s_i s_j)^{m_ij} acts trivially on `samples` random monomials, for all i <= j.
CheckReport check_coxeter(const PPartContext& ctx, int samples, std::uint64_t seed);

/// N(x; xi) x^{theta - xi}, where N(x; xi) uses the twisting parameter xi - rho.
LaurentPoly shift_ppart(const PPartContext& ctx, const std::vector<int>& xi_weight);

struct DecompositionTerm {
  DominantWeight xi;
  GaussElement multiplicity;
};
/// Writes poly as a combination of shifted p-parts, peeling from theta downwards.
std::vector<DecompositionTerm> decompose(const PPartContext& ctx, const LaurentPoly& poly);

/// Shifted p-parts satisfy the recurrences for ctx, and random combinations
/// of them decompose back to their multiplicities.
CheckReport check_shift(const PPartContext& ctx, std::uint64_t seed);

/// Numeric dimension of the space of coefficient vectors on the lattice
/// points of the polytope satisfying all the recurrences.
int recurrence_space_dim(const PPartContext& ctx, std::uint64_t seed);
/// Majority over seeds seed, seed + 1, ..., seed + trials - 1.
int recurrence_space_dim_vote(const PPartContext& ctx, std::uint64_t seed, int trials = 3);

struct NormalizedSolve {
  int nullity = 0;
  double relative_error = 0;
};
/// Solves the recurrences with a_0 = 1 numerically and compares with N.
NormalizedSolve solve_normalized(const PPart& pp, std::uint64_t seed);

CheckReport check_uniqueness(const PPart& pp, std::uint64_t seed);

enum class StableRange { Stable, Unstable, Unknown };
const char* to_string(StableRange s);

struct StableRangeVerdict {
  StableRange range = StableRange::Unknown;
  std::string provenance;  // "criterion", "empirical" or "none"
};
StableRangeVerdict is_stable_range(const PPartContext& ctx, bool probe = false);

/// sum_w sgn(w) x^{theta - w theta}, with integer coefficients of degree 1.
LaurentPoly alternating_vertex_sum(const PPartContext& ctx);
/// For n = 1: the coefficients of N summed over powers of q.
LaurentPoly specialize_q_one(const LaurentPoly& poly);

}  // namespace wmds

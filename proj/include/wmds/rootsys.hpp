#pragma once

// Root systems, Weyl groups and the twisted ("bullet") action.
//
// Conventions used throughout the library:
//   * simple roots are indexed 0..r-1 (rendered 1..r for people);
//   * c(i,j) = <alpha_i, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j);
//   * sigma_j(alpha_i) = alpha_i - c(i,j) alpha_j;
//   * the invariant form is scaled so that short roots have squared length 1.
// Lattice vectors are stored in simple-root coordinates.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wmds/errors.hpp"

namespace wmds {

using RootVector = std::vector<int>;
using Rational = boost::rational<std::int64_t>;

enum class Family { A, B, C, D, E, F, G };

Family parse_family(const std::string& name);
char family_letter(Family f);

class InvalidFamilyRank : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

/// Dense r x r integer matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim) : dim_(dim), data_(std::size_t(dim) * dim, 0) {}
  static SquareMatrix identity(int dim);

  int dim() const { return dim_; }
  int& operator()(int i, int j) { return data_[std::size_t(i) * dim_ + j]; }
  int operator()(int i, int j) const { return data_[std::size_t(i) * dim_ + j]; }

  RootVector apply(const RootVector& v) const;
  SquareMatrix operator*(const SquareMatrix& rhs) const;
  auto operator<=>(const SquareMatrix&) const = default;

 private:
  int dim_ = 0;
  std::vector<int> data_;
};

class RootSystem {
 public:
  /// Builds the irreducible reduced root system of the given type.
  /// D3 is accepted and yields A3 with relabelled nodes.
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  int cartan(int i, int j) const { return cartan_(i, j); }
  /// Twice the inner product (alpha_i, alpha_j); always an integer.
  int gram2(int i, int j) const { return gram2_(i, j); }
  /// Squared length of alpha_i (1, 2 or 3).
  int length2(int i) const { return gram2_(i, i) / 2; }

  const std::vector<RootVector>& positive_roots() const { return positive_; }
  /// Index into positive_roots(), or -1.
  int root_index(const RootVector& v) const;
  int simple_root_index(int k) const { return simple_index_[k]; }

  /// <lambda, alpha_j> for lambda in root coordinates.
  int pairing(const RootVector& lambda, int j) const;
  /// (lambda, lambda); integral on the root lattice under our scaling.
  int norm2(const RootVector& lambda) const;
  /// 2 (lambda, mu).
  int inner2(const RootVector& lambda, const RootVector& mu) const;
  RootVector reflect(int j, const RootVector& lambda) const;
  const SquareMatrix& reflection_matrix(int j) const { return reflections_[j]; }

  /// Weight coordinates (<lambda, alpha_j>)_j of a root-lattice vector.
  std::vector<int> to_weight(const RootVector& lambda) const;
  /// Root coordinates of the weight with the given fundamental-weight coordinates.
  std::vector<Rational> from_weight(const std::vector<int>& weight) const;

 private:
  Family family_ = Family::A;
  int rank_ = 0;
  SquareMatrix cartan_;
  SquareMatrix gram2_;
  std::vector<RootVector> positive_;
  std::map<RootVector, int> index_;
  std::vector<int> simple_index_;
  std::vector<SquareMatrix> reflections_;
  // (C^T)^{-1}, maps weight coordinates to root coordinates.
  std::vector<std::vector<Rational>> weight_to_root_;
};

struct WeylElement {
  int id = 0;
  SquareMatrix matrix;  // acts on root coordinates
  int length = 0;
  std::vector<int> word;  // a reduced word, 0-based simple indices, w = s_{word[0]} s_{word[1]} ...
  int sign = 1;
  int parent = -1;      // element obtained by dropping the last letter
  int last_letter = -1;

  /// Right descents {i : l(w s_i) < l(w)}.
  std::vector<int> right_descents(const RootSystem& rs) const;
  /// Left descents {i : l(s_i w) < l(w)}.
  std::vector<int> left_descents(const RootSystem& rs) const;
};

class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 2000;

  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_[longest_]; }
  const WeylElement& inverse(const WeylElement& w) const { return elements_[inverse_[w.id]]; }
  /// The element with the given matrix; throws if absent.
  const WeylElement& find(const SquareMatrix& m) const;
  const WeylElement& multiply(const WeylElement& a, const WeylElement& b) const;

 private:
  friend WeylGroup enumerate_weyl(const RootSystem&, std::size_t);
  std::vector<WeylElement> elements_;
  std::map<SquareMatrix, int> lookup_;
  std::vector<int> inverse_;
  std::size_t longest_ = 0;
};

/// Breadth-first enumeration by right multiplication with simple reflections.
/// Identity first; elements appear in non-decreasing length.
WeylGroup enumerate_weyl(const RootSystem& rs, std::size_t cap = WeylGroup::kDefaultCap);

/// Phi(w) = {alpha > 0 : w alpha < 0}, as sorted indices into positive_roots().
std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w);

/// The twisting parameter ell together with theta = sum (l_i + 1) varpi_i.
struct TwistContext {
  std::vector<int> ell;
  std::vector<int> theta_weight;
  std::vector<Rational> theta_root;
};

TwistContext make_twist(const RootSystem& rs, std::vector<int> ell);

/// Remainder of a modulo m in [0, m), for every integer a.
int remainder_mod(long long a, int m);

/// Height d(lambda).
int height(const RootVector& lambda);

enum class PolytopePosition { Outside, Boundary, Interior };
const char* to_string(PolytopePosition p);

struct DominantWeight {
  std::vector<int> weight;  // fundamental-weight coordinates
  RootVector offset;        // theta - weight, in root coordinates
  bool regular() const;
};

/// The bullet action w . lambda = w(lambda - theta) + theta for a fixed theta,
/// with the vertices theta - w theta of the polytope Pi_theta cached.
class TwistedWeyl {
 public:
  TwistedWeyl(const RootSystem& rs, const WeylGroup& weyl, TwistContext tc);

  const RootSystem& roots() const { return *rs_; }
  const WeylGroup& weyl() const { return *weyl_; }
  const TwistContext& twist() const { return tc_; }

  RootVector bullet(const WeylElement& w, const RootVector& lambda) const;
  RootVector bullet_simple(int k, const RootVector& lambda) const;
  /// delta_k(lambda) = l_k + 1 - <lambda, alpha_k>.
  int delta(int k, const RootVector& lambda) const;

  /// theta - w theta, indexed by WeylElement::id; vertex 0 is the origin.
  const std::vector<RootVector>& vertices() const { return vertices_; }
  const RootVector& top_vertex() const { return vertices_[weyl_->longest().id]; }
  int max_vertex_height() const;

  PolytopePosition position(const RootVector& lambda) const;
  /// All lattice points of Pi_theta.
  std::vector<RootVector> lattice_points() const;

 private:
  const RootSystem* rs_;
  const WeylGroup* weyl_;
  TwistContext tc_;
  std::vector<RootVector> vertices_;
};

RootVector bullet(const TwistedWeyl& tw, const WeylElement& w, const RootVector& lambda);
int delta(const TwistedWeyl& tw, int k, const RootVector& lambda);
std::vector<RootVector> theta_vertices(const TwistedWeyl& tw);
PolytopePosition polytope_position(const TwistedWeyl& tw, const RootVector& lambda);

/// Theta: dominant weights mu with theta - mu in the nonnegative root cone,
/// ordered by the height of theta - mu (so theta comes first).
std::vector<DominantWeight> dominant_weights_theta(const TwistedWeyl& tw);
/// Theta^+: the regular members of Theta, order preserved.
std::vector<DominantWeight> regular_subset(const std::vector<DominantWeight>& theta);

/// Data of a single recurrence instance at (lambda, k).
struct RecurrenceInstance {
  RootVector lambda;
  int k = 0;
  int m = 1;
  int delta = 0;
  int nu = 0;
  RootVector mu;
};

RecurrenceInstance make_recurrence_instance(const TwistedWeyl& tw, int m, const RootVector& lambda,
                                            int k);

std::string format_vector(const std::vector<int>& v);
RootVector parse_vector(const std::string& text);

}  // namespace wmds

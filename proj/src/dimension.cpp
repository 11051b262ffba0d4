#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <Eigen/Dense>

#include "wmds/ppart.hpp"

namespace wmds {

namespace {

constexpr double kRankTolerance = 1e-8;

struct LinearSystem {
  std::vector<RootVector> points;
  Eigen::MatrixXcd matrix;  // in the unknowns b = a / scale
  Eigen::VectorXd scale;
};

// All relations restricted to unknowns on the lattice points of the polytope.
LinearSystem build_system(const PPartContext& ctx, const SpecializationMap& spec) {
  LinearSystem sys;
  sys.points = ctx.twisted().lattice_points();
  std::map<RootVector, int> index;
  for (std::size_t i = 0; i < sys.points.size(); ++i) index.emplace(sys.points[i], static_cast<int>(i));

  std::set<RootVector> cand;
  const auto& tw = ctx.twisted();
  for (const auto& s : sys.points)
    for (int k = 0; k < ctx.rank(); ++k)
      for (int j = 0; j <= ctx.nalpha_simple(k); ++j) {
        RootVector up = s, down = s;
        up[k] += j;
        down[k] -= j;
        cand.insert(up);
        cand.insert(tw.bullet_simple(k, down));
      }

  std::vector<std::map<int, std::complex<double>>> rows;
  for (const auto& lambda : cand)
    for (int k = 0; k < ctx.rank(); ++k) {
      const Relation rel = main_relation(ctx, lambda, k);
      std::map<int, std::complex<double>> row;
      auto add = [&](const std::vector<std::pair<RootVector, GaussElement>>& side, double sign) {
        for (const auto& [v, c] : side) {
          auto it = index.find(v);
          if (it != index.end()) row[it->second] += sign * specialize(c, spec);
        }
      };
      add(rel.lhs, 1.0);
      add(rel.rhs, -1.0);
      if (std::any_of(row.begin(), row.end(), [](const auto& e) { return std::abs(e.second) > 0; }))
        rows.push_back(std::move(row));
    }

  // Coefficients grow roughly like |q|^height; rescale unknowns and rows so
  // that the relative rank threshold is meaningful.
  const Eigen::Index cols = static_cast<Eigen::Index>(sys.points.size());
  sys.scale.resize(cols);
  for (Eigen::Index c = 0; c < cols; ++c) sys.scale(c) = std::pow(std::abs(spec.q_value), height(sys.points[c]));
  sys.matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) sys.matrix(static_cast<Eigen::Index>(r), c) = v * sys.scale(c);
  for (Eigen::Index r = 0; r < sys.matrix.rows(); ++r) sys.matrix.row(r).normalize();
  return sys;
}

int numeric_rank(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  if (top == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > kRankTolerance * top) ++rank;
  return rank;
}

}  // namespace

int recurrence_space_dim(const PPartContext& ctx, std::uint64_t seed) {
  const LinearSystem sys = build_system(ctx, random_specialization(ctx.n(), seed));
  return static_cast<int>(sys.points.size()) - numeric_rank(sys.matrix);
}

int recurrence_space_dim_vote(const PPartContext& ctx, std::uint64_t seed, int trials) {
  std::map<int, int> votes;
  for (int t = 0; t < trials; ++t) ++votes[recurrence_space_dim(ctx, seed + static_cast<std::uint64_t>(t))];
  auto best = std::max_element(votes.begin(), votes.end(),
                               [](const auto& a, const auto& b) { return a.second < b.second; });
  return best->first;
}

NormalizedSolve solve_normalized(const PPart& pp, std::uint64_t seed) {
  const PPartContext& ctx = pp.ctx;
  const SpecializationMap spec = random_specialization(ctx.n(), seed);
  const LinearSystem sys = build_system(ctx, spec);
  const Eigen::Index rows = sys.matrix.rows(), cols = sys.matrix.cols();

  auto origin = std::find(sys.points.begin(), sys.points.end(), RootVector(ctx.rank(), 0));
  if (origin == sys.points.end()) throw Error("origin is not a lattice point of the polytope");
  const Eigen::Index zero = origin - sys.points.begin();

  // Solve in rescaled unknowns, then equilibrate once more using the first
  // solution's magnitudes.
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(cols);
  Eigen::VectorXcd x;
  for (int pass = 0; pass < 2; ++pass) {
    Eigen::MatrixXcd a(rows + 1, cols);
    a.topRows(rows) = sys.matrix * scale.asDiagonal();
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double nr = a.row(r).norm();
      if (nr > 0) a.row(r) /= nr;
    }
    a.row(rows).setZero();
    a(rows, zero) = 1.0;
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(rows + 1);
    b(rows) = 1.0 / (sys.scale(zero) * scale(zero));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(kRankTolerance);
    const Eigen::VectorXcd sol = svd.solve(b);
    x = (sys.scale.array() * scale.array()).matrix().cast<std::complex<double>>().cwiseProduct(sol);
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double mag = std::abs(x(c)) / sys.scale(c);
      scale(c) = mag > 0 ? mag : 1.0;
    }
  }

  Eigen::VectorXcd y(cols);
  for (Eigen::Index i = 0; i < cols; ++i) y(i) = specialize(pp.poly.coefficient(sys.points[i]), spec);

  NormalizedSolve out;
  out.nullity = static_cast<int>(cols) - numeric_rank(sys.matrix);
  out.relative_error = (x - y).norm() / y.norm();
  return out;
}

}  // namespace wmds

#include "wmds/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace wmds {

Family parse_family(const std::string& name) {
  if (name.size() == 1) {
    switch (name[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
      default: break;
    }
  }
  throw InvalidFamilyRank("unknown root system family '" + name + "'");
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

SquareMatrix SquareMatrix::identity(int dim) {
  SquareMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RootVector SquareMatrix::apply(const RootVector& v) const {
  RootVector out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    int acc = 0;
    for (int j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  SquareMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

namespace {

void validate(Family f, int r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B:
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok)
    throw InvalidFamilyRank(std::string("unsupported root system ") + family_letter(f) +
                            std::to_string(r));
}

// Twice the Gram matrix, short roots of squared length 1.
SquareMatrix gram2_matrix(Family f, int r) {
  SquareMatrix g(r);
  auto link = [&](int i, int j, int v) { g(i, j) = g(j, i) = v; };
  switch (f) {
    case Family::A:
      for (int i = 0; i < r; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < r; ++i) g(i, i) = (i + 1 < r) ? 4 : 2;
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < r; ++i) g(i, i) = (i + 1 < r) ? 2 : 4;
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 2, r - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < r; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 3, r - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < r; ++i) g(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g(0, 0) = g(1, 1) = 4;
      g(2, 2) = g(3, 3) = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g(0, 0) = 2;
      g(1, 1) = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) throw Error("singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col].numerator() == 0) continue;
      const Rational f = a[i][col];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  validate(family, rank);
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.gram2_ = gram2_matrix(family, rank);
  rs.cartan_ = SquareMatrix(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan_(i, j) = 2 * rs.gram2_(i, j) / rs.gram2_(j, j);

  for (int j = 0; j < rank; ++j) {
    SquareMatrix s = SquareMatrix::identity(rank);
    // column i of s_j is e_i - c(i,j) e_j
    for (int i = 0; i < rank; ++i) s(j, i) -= rs.cartan_(i, j);
    rs.reflections_.push_back(std::move(s));
  }

  // Positive roots by height, via alpha_i-strings.
  std::vector<RootVector> layer;
  for (int i = 0; i < rank; ++i) {
    RootVector e(rank, 0);
    e[i] = 1;
    layer.push_back(e);
  }
  while (!layer.empty()) {
    for (const auto& beta : layer) {
      rs.index_.emplace(beta, static_cast<int>(rs.positive_.size()));
      rs.positive_.push_back(beta);
    }
    std::vector<RootVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank; ++i) {
        RootVector down = beta;
        int p = 0;
        while (true) {
          down[i] -= 1;
          if (!rs.index_.count(down)) break;
          ++p;
        }
        const bool is_simple_i = height(beta) == 1 && beta[i] == 1;
        if (is_simple_i) continue;
        const int q = p - rs.pairing(beta, i);
        if (q > 0) {
          RootVector up = beta;
          up[i] += 1;
          if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  for (int i = 0; i < rank; ++i) {
    RootVector e(rank, 0);
    e[i] = 1;
    rs.simple_index_.push_back(rs.index_.at(e));
  }

  std::vector<std::vector<Rational>> ct(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) ct[i][j] = rs.cartan_(j, i);
  rs.weight_to_root_ = invert(ct);
  return rs;
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

int RootSystem::root_index(const RootVector& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::pairing(const RootVector& lambda, int j) const {
  int acc = 0;
  for (int i = 0; i < rank_; ++i) acc += lambda[i] * cartan_(i, j);
  return acc;
}

int RootSystem::inner2(const RootVector& lambda, const RootVector& mu) const {
  int acc = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) acc += lambda[i] * gram2_(i, j) * mu[j];
  return acc;
}

int RootSystem::norm2(const RootVector& lambda) const { return inner2(lambda, lambda) / 2; }

RootVector RootSystem::reflect(int j, const RootVector& lambda) const {
  RootVector out = lambda;
  out[j] -= pairing(lambda, j);
  return out;
}

std::vector<int> RootSystem::to_weight(const RootVector& lambda) const {
  std::vector<int> w(rank_);
  for (int j = 0; j < rank_; ++j) w[j] = pairing(lambda, j);
  return w;
}

std::vector<Rational> RootSystem::from_weight(const std::vector<int>& weight) const {
  std::vector<Rational> out(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += weight_to_root_[i][j] * weight[j];
  return out;
}

namespace {

bool is_negative(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
}

RootVector simple_root(int rank, int k) {
  RootVector e(rank, 0);
  e[k] = 1;
  return e;
}

}  // namespace

std::vector<int> WeylElement::right_descents(const RootSystem& rs) const {
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (is_negative(matrix.apply(simple_root(rs.rank(), i)))) out.push_back(i);
  return out;
}

std::vector<int> WeylElement::left_descents(const RootSystem& rs) const {
  // l(s_i w) < l(w)  <=>  w^{-1} alpha_i < 0  <=>  w beta = -alpha_i for some beta > 0
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i) {
    RootVector neg = simple_root(rs.rank(), i);
    neg[i] = -1;
    for (const auto& beta : rs.positive_roots())
      if (matrix.apply(beta) == neg) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

const WeylElement& WeylGroup::find(const SquareMatrix& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) throw Error("matrix is not an element of the Weyl group");
  return elements_[it->second];
}

const WeylElement& WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  return find(a.matrix * b.matrix);
}

WeylGroup enumerate_weyl(const RootSystem& rs, std::size_t cap) {
  const int r = rs.rank();
  WeylGroup g;
  WeylElement e;
  e.matrix = SquareMatrix::identity(r);
  g.lookup_.emplace(e.matrix, 0);
  g.elements_.push_back(std::move(e));
  for (std::size_t cur = 0; cur < g.elements_.size(); ++cur) {
    for (int k = 0; k < r; ++k) {
      SquareMatrix m = g.elements_[cur].matrix * rs.reflection_matrix(k);
      if (g.lookup_.count(m)) continue;
      if (g.elements_.size() >= cap)
        throw GroupTooLarge("Weyl group of " + rs.name() + " exceeds the cap of " + std::to_string(cap));
      WeylElement w;
      w.id = static_cast<int>(g.elements_.size());
      w.matrix = std::move(m);
      w.length = g.elements_[cur].length + 1;
      w.word = g.elements_[cur].word;
      w.word.push_back(k);
      w.sign = (w.length % 2 == 0) ? 1 : -1;
      w.parent = static_cast<int>(cur);
      w.last_letter = k;
      g.lookup_.emplace(w.matrix, w.id);
      g.elements_.push_back(std::move(w));
    }
  }
  g.inverse_.resize(g.elements_.size());
  for (const auto& w : g.elements_) {
    SquareMatrix inv = SquareMatrix::identity(r);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) inv = inv * rs.reflection_matrix(*it);
    g.inverse_[w.id] = g.lookup_.at(inv);
    if (w.length > g.elements_[g.longest_].length) g.longest_ = w.id;
  }
  return g;
}

std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  const auto& roots = rs.positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (is_negative(w.matrix.apply(roots[i]))) out.push_back(static_cast<int>(i));
  return out;
}

TwistContext make_twist(const RootSystem& rs, std::vector<int> ell) {
  if (static_cast<int>(ell.size()) != rs.rank())
    throw Error("twisting parameter has " + std::to_string(ell.size()) + " entries, expected " +
                std::to_string(rs.rank()));
  TwistContext tc;
  for (int l : ell) {
    if (l < 0) throw Error("twisting parameter entries must be nonnegative");
    tc.theta_weight.push_back(l + 1);
  }
  tc.ell = std::move(ell);
  tc.theta_root = rs.from_weight(tc.theta_weight);
  return tc;
}

int remainder_mod(long long a, int m) {
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

int height(const RootVector& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

const char* to_string(PolytopePosition p) {
  switch (p) {
    case PolytopePosition::Outside: return "Outside";
    case PolytopePosition::Boundary: return "Boundary";
    case PolytopePosition::Interior: return "Interior";
  }
  return "?";
}

bool DominantWeight::regular() const {
  return std::all_of(weight.begin(), weight.end(), [](int x) { return x >= 1; });
}

TwistedWeyl::TwistedWeyl(const RootSystem& rs, const WeylGroup& weyl, TwistContext tc)
    : rs_(&rs), weyl_(&weyl), tc_(std::move(tc)) {
  const int r = rs.rank();
  vertices_.reserve(weyl.size());
  for (const auto& w : weyl) {
    RootVector v(r);
    for (int i = 0; i < r; ++i) {
      Rational acc = tc_.theta_root[i];
      for (int j = 0; j < r; ++j) acc -= tc_.theta_root[j] * w.matrix(i, j);
      if (acc.denominator() != 1) throw Error("theta - w theta is not integral");
      v[i] = static_cast<int>(acc.numerator());
    }
    vertices_.push_back(std::move(v));
  }
}

RootVector TwistedWeyl::bullet(const WeylElement& w, const RootVector& lambda) const {
  RootVector out = w.matrix.apply(lambda);
  const auto& v = vertices_[w.id];
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
  return out;
}

RootVector TwistedWeyl::bullet_simple(int k, const RootVector& lambda) const {
  RootVector out = rs_->reflect(k, lambda);
  out[k] += tc_.ell[k] + 1;
  return out;
}

int TwistedWeyl::delta(int k, const RootVector& lambda) const {
  return tc_.ell[k] + 1 - rs_->pairing(lambda, k);
}

int TwistedWeyl::max_vertex_height() const {
  int best = 0;
  for (const auto& v : vertices_) best = std::max(best, height(v));
  return best;
}

PolytopePosition TwistedWeyl::position(const RootVector& lambda) const {
  // (w varpi_i, lambda - (theta - w theta)) is a positive multiple of the
  // i-th root coordinate of w^{-1} . lambda, so scan the bullet orbit.
  bool interior = true;
  for (const auto& u : *weyl_) {
    const RootVector v = bullet(u, lambda);
    for (int x : v) {
      if (x < 0) return PolytopePosition::Outside;
      if (x == 0) interior = false;
    }
  }
  return interior ? PolytopePosition::Interior : PolytopePosition::Boundary;
}

std::vector<RootVector> TwistedWeyl::lattice_points() const {
  const int r = rs_->rank();
  RootVector hi(r, 0);
  for (const auto& v : vertices_)
    for (int i = 0; i < r; ++i) hi[i] = std::max(hi[i], v[i]);
  std::vector<RootVector> out;
  RootVector cur(r, 0);
  while (true) {
    if (position(cur) != PolytopePosition::Outside) out.push_back(cur);
    int i = 0;
    while (i < r && cur[i] == hi[i]) cur[i++] = 0;
    if (i == r) break;
    ++cur[i];
  }
  return out;
}

RootVector bullet(const TwistedWeyl& tw, const WeylElement& w, const RootVector& lambda) {
  return tw.bullet(w, lambda);
}

int delta(const TwistedWeyl& tw, int k, const RootVector& lambda) { return tw.delta(k, lambda); }

std::vector<RootVector> theta_vertices(const TwistedWeyl& tw) { return tw.vertices(); }

PolytopePosition polytope_position(const TwistedWeyl& tw, const RootVector& lambda) {
  return tw.position(lambda);
}

std::vector<DominantWeight> dominant_weights_theta(const TwistedWeyl& tw) {
  const RootSystem& rs = tw.roots();
  const int r = rs.rank();
  RootVector hi(r, 0);
  for (const auto& v : tw.vertices())
    for (int i = 0; i < r; ++i) hi[i] = std::max(hi[i], v[i]);
  std::vector<DominantWeight> out;
  RootVector k(r, 0);
  while (true) {
    DominantWeight dw;
    dw.weight.resize(r);
    bool dominant = true;
    for (int j = 0; j < r && dominant; ++j) {
      dw.weight[j] = tw.twist().theta_weight[j] - rs.pairing(k, j);
      dominant = dw.weight[j] >= 0;
    }
    if (dominant) {
      dw.offset = k;
      out.push_back(std::move(dw));
    }
    int i = 0;
    while (i < r && k[i] == hi[i]) k[i++] = 0;
    if (i == r) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end(), [](const DominantWeight& a, const DominantWeight& b) {
    const int ha = height(a.offset), hb = height(b.offset);
    if (ha != hb) return ha < hb;
    return a.offset < b.offset;
  });
  return out;
}

std::vector<DominantWeight> regular_subset(const std::vector<DominantWeight>& theta) {
  std::vector<DominantWeight> out;
  std::copy_if(theta.begin(), theta.end(), std::back_inserter(out),
               [](const DominantWeight& d) { return d.regular(); });
  return out;
}

RecurrenceInstance make_recurrence_instance(const TwistedWeyl& tw, int m, const RootVector& lambda,
                                            int k) {
  RecurrenceInstance ri;
  ri.lambda = lambda;
  ri.k = k;
  ri.m = m;
  ri.delta = tw.delta(k, lambda);
  ri.nu = m - remainder_mod(ri.delta, m);
  ri.mu = tw.bullet_simple(k, lambda);
  return ri;
}

std::string format_vector(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

RootVector parse_vector(const std::string& text) {
  RootVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw Error("malformed integer vector '" + text + "'");
    }
    if (pos != item.size()) throw Error("malformed integer vector '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty integer vector");
  return out;
}

}  // namespace wmds

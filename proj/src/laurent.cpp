#include "wmds/laurent.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace wmds {

Exponent::Exponent(const RootVector& v) {
  if (v.size() > static_cast<std::size_t>(kMaxRank)) throw Error("exponent rank exceeds " + std::to_string(kMaxRank));
  int h = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v_[i + 1] = v[i];
    h += v[i];
  }
  v_[0] = h;
}

RootVector Exponent::to_vector(int rank) const { return RootVector(v_.begin() + 1, v_.begin() + 1 + rank); }

bool Exponent::nonnegative(int rank) const {
  return std::all_of(v_.begin() + 1, v_.begin() + 1 + rank, [](int x) { return x >= 0; });
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[i] + o.v_[i];
  return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
  Exponent r;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[i] - o.v_[i];
  return r;
}

Exponent Exponent::scaled(int c) const {
  Exponent r;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[i] * c;
  return r;
}

LaurentPoly::LaurentPoly(int rank, int n) : rank_(rank), n_(n) {
  if (rank < 1 || rank > kMaxRank) throw Error("unsupported rank " + std::to_string(rank));
}

LaurentPoly LaurentPoly::constant(int rank, const GaussElement& c) { return monomial(rank, Exponent(), c); }

LaurentPoly LaurentPoly::monomial(int rank, const Exponent& e, const GaussElement& c) {
  LaurentPoly p(rank, c.degree());
  if (!c.is_zero()) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(int rank, int n, std::vector<Term> terms) {
  LaurentPoly p(rank, n);
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (t.second.degree() != n) throw DegreeMismatch("coefficient degree differs from polynomial degree");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw Error("rank mismatch in Laurent polynomial arithmetic");
  if (n_ != o.n_) throw DegreeMismatch("degree mismatch in Laurent polynomial arithmetic");
}

GaussElement LaurentPoly::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return GaussElement(n_);
}

std::vector<RootVector> LaurentPoly::support() const {
  std::vector<RootVector> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first.to_vector(rank_));
  return out;
}

int LaurentPoly::max_height() const {
  if (terms_.empty()) throw Error("max_height of the zero polynomial");
  return terms_.back().first.height();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// out = a + sign * b, both sorted.
void merge_into(std::vector<LaurentPoly::Term>& out, const std::vector<LaurentPoly::Term>& a,
                const std::vector<LaurentPoly::Term>& b, bool subtract) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      GaussElement c = a[i].second;
      if (subtract) c -= b[j].second; else c += b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_compatible(rhs);
  std::vector<Term> out;
  merge_into(out, terms_, rhs.terms_, false);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_compatible(rhs);
  std::vector<Term> out;
  merge_into(out, terms_, rhs.terms_, true);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.emplace_back(x.first + y.first, x.second * y.second);
  return LaurentPoly::from_terms(a.rank_, a.n_, std::move(prod));
}

LaurentPoly LaurentPoly::scaled(const GaussElement& c) const {
  LaurentPoly r(rank_, n_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    GaussElement v = t.second * c;
    if (!v.is_zero()) r.terms_.emplace_back(t.first, std::move(v));
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first = t.first + e;
  return r;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m) const { return scaled(m.coeff).shifted(m.exponent); }

LaurentPoly LaurentPoly::times_binomial(const Exponent& gamma, const GaussElement& c, std::optional<int> cap) const {
  LaurentPoly moved(rank_, n_);
  moved.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e = t.first + gamma;
    if (cap && e.height() > *cap) continue;
    GaussElement v = t.second * c;
    if (!v.is_zero()) moved.terms_.emplace_back(e, std::move(v));
  }
  LaurentPoly r(rank_, n_);
  if (cap) {
    LaurentPoly base = truncated(*cap);
    merge_into(r.terms_, base.terms_, moved.terms_, true);
  } else {
    merge_into(r.terms_, terms_, moved.terms_, true);
  }
  return r;
}

LaurentPoly LaurentPoly::truncated(int max_height) const {
  LaurentPoly r(rank_, n_);
  for (const auto& t : terms_) {
    if (t.first.height() > max_height) break;
    r.terms_.push_back(t);
  }
  return r;
}

namespace {

std::complex<double> int_power(std::complex<double> x, int e) {
  if (e < 0) return 1.0 / int_power(x, -e);
  std::complex<double> r = 1.0;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::complex<double> LaurentPoly::evaluate(const SpecializationMap& m,
                                           const std::vector<std::complex<double>>& xs) const {
  if (xs.size() != static_cast<std::size_t>(rank_)) throw Error("evaluation point has wrong length");
  std::complex<double> total = 0.0;
  for (const auto& t : terms_) {
    std::complex<double> v = specialize(t.second, m);
    for (int i = 0; i < rank_; ++i) v *= int_power(xs[i], t.first[i]);
    total += v;
  }
  return total;
}

nlohmann::ordered_json LaurentPoly::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& t : terms_) j[format_vector(t.first.to_vector(rank_))] = t.second.to_string();
  return j;
}

LaurentPoly LaurentPoly::from_json(int rank, int n, const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
  std::vector<Term> terms;
  for (auto it = j.begin(); it != j.end(); ++it) {
    RootVector v;
    try {
      v = parse_vector(it.key());
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    if (v.size() != static_cast<std::size_t>(rank)) throw ParseError("exponent '" + it.key() + "' has wrong length");
    if (!it.value().is_string()) throw ParseError("coefficient for '" + it.key() + "' must be a string");
    terms.emplace_back(Exponent(v), GaussElement::parse(n, it.value().get<std::string>()));
  }
  return from_terms(rank, n, std::move(terms));
}

// ---------------------------------------------------------------------------
// Division

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (a.rank() != b.rank()) throw Error("rank mismatch in division");
  const auto& [lead_e, lead_c] = b.leading();
  if (!lead_c.is_unit()) throw Error("leading coefficient of divisor is not a unit: " + lead_c.to_string());
  const GaussElement inv = lead_c.unit_inverse();
  LaurentPoly zero(a.rank(), a.degree());
  if (a.is_zero()) return zero;

  // The coefficient ring has no zero divisors, so the lowest term of a product
  // is the product of lowest terms; this bounds the quotient from below.
  const Exponent floor = a.terms().front().first - b.terms().front().first;
  std::map<Exponent, GaussElement> rem;
  for (const auto& t : a.terms()) rem.emplace(t.first, t.second);
  std::vector<LaurentPoly::Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Exponent e = top->first - lead_e;
    if (e < floor) break;
    GaussElement c = top->second * inv;
    for (const auto& [be, bc] : b.terms()) {
      auto [it, inserted] = rem.try_emplace(e + be, GaussElement(a.degree()));
      it->second -= c * bc;
      if (it->second.is_zero()) rem.erase(it);
    }
    quot.emplace_back(e, std::move(c));
  }
  if (!rem.empty()) {
    std::vector<LaurentPoly::Term> r(rem.begin(), rem.end());
    throw NonzeroRemainder("exact division left a nonzero remainder",
                           LaurentPoly::from_terms(a.rank(), a.degree(), std::move(r)));
  }
  return LaurentPoly::from_terms(a.rank(), a.degree(), std::move(quot));
}

namespace {

// Quotient recurrence q_e = a_e + c q_{e - gamma}, run in increasing order.
// Quotient exponents beyond `limit` are not stored; returns whether any
// nonzero value was met there.
bool binomial_recurrence(const LaurentPoly& a, const Exponent& gamma, const GaussElement& c,
                         const std::function<bool(const Exponent&)>& keep, std::vector<LaurentPoly::Term>& out,
                         bool stop_on_reject) {
  std::deque<LaurentPoly::Term> pending;
  const auto& at = a.terms();
  std::size_t i = 0;
  bool rejected = false;
  while (i < at.size() || !pending.empty()) {
    Exponent e;
    GaussElement v(a.degree());
    if (pending.empty() || (i < at.size() && at[i].first < pending.front().first)) {
      e = at[i].first;
      v = at[i].second;
      ++i;
    } else if (i == at.size() || pending.front().first < at[i].first) {
      e = pending.front().first;
      v = std::move(pending.front().second);
      pending.pop_front();
    } else {
      e = at[i].first;
      v = at[i].second + pending.front().second;
      pending.pop_front();
      ++i;
    }
    if (v.is_zero()) continue;
    if (!keep(e)) {
      rejected = true;
      if (stop_on_reject) return true;
      continue;
    }
    pending.emplace_back(e + gamma, v * c);
    out.emplace_back(e, std::move(v));
  }
  return rejected;
}

void check_binomial(const LaurentPoly& a, const Exponent& gamma, const GaussElement& c) {
  if (gamma.height() <= 0) throw Error("binomial division needs an exponent of positive height");
  if (c.degree() != a.degree()) throw DegreeMismatch("binomial coefficient degree mismatch");
}

}  // namespace

std::optional<LaurentPoly> try_divide_binomial(const LaurentPoly& a, const Exponent& gamma, const GaussElement& c) {
  check_binomial(a, gamma, c);
  if (a.is_zero()) return a;
  const Exponent limit = a.leading().first - gamma;
  std::vector<LaurentPoly::Term> out;
  bool bad = binomial_recurrence(a, gamma, c, [&](const Exponent& e) { return !(limit < e); }, out, true);
  if (bad) return std::nullopt;
  return LaurentPoly::from_terms(a.rank(), a.degree(), std::move(out));
}

LaurentPoly divide_binomial(const LaurentPoly& a, const Exponent& gamma, const GaussElement& c) {
  auto q = try_divide_binomial(a, gamma, c);
  if (!q) {
    const Exponent limit = a.leading().first - gamma;
    std::vector<LaurentPoly::Term> out;
    binomial_recurrence(a, gamma, c, [&](const Exponent& e) { return !(limit < e); }, out, false);
    LaurentPoly partial = LaurentPoly::from_terms(a.rank(), a.degree(), std::move(out));
    throw NonzeroRemainder("binomial division left a nonzero remainder", a - partial.times_binomial(gamma, c));
  }
  return *q;
}

LaurentPoly series_divide_binomial(const LaurentPoly& a, const Exponent& gamma, const GaussElement& c,
                                   int max_height) {
  check_binomial(a, gamma, c);
  std::vector<LaurentPoly::Term> out;
  binomial_recurrence(a, gamma, c, [&](const Exponent& e) { return e.height() <= max_height; }, out, false);
  return LaurentPoly::from_terms(a.rank(), a.degree(), std::move(out));
}

LaurentPoly truncated_inverse(const LaurentPoly& b, int max_height) {
  const int n = b.degree();
  if (b.is_zero() || !b.coefficient(Exponent()).is_constant(1))
    throw BadConstantTerm("series inverse needs constant term 1");
  std::vector<LaurentPoly::Term> rest;
  for (const auto& t : b.terms()) {
    if (t.first == Exponent()) continue;
    if (t.first.height() <= 0) throw BadConstantTerm("series inverse needs all other terms of positive height");
    rest.push_back(t);
  }
  // Exponents reachable as sums of the nonconstant support, up to max_height.
  std::set<Exponent> reach{Exponent()};
  std::vector<Exponent> frontier{Exponent()};
  while (!frontier.empty()) {
    std::vector<Exponent> next;
    for (const auto& e : frontier)
      for (const auto& t : rest) {
        Exponent f = e + t.first;
        if (f.height() <= max_height && reach.insert(f).second) next.push_back(f);
      }
    frontier = std::move(next);
  }
  std::map<Exponent, GaussElement> c;
  for (const auto& e : reach) {
    if (e.height() > max_height) continue;
    if (e == Exponent()) {
      c.emplace(e, GaussElement::constant(n, 1));
      continue;
    }
    GaussElement v(n);
    for (const auto& t : rest) {
      auto it = c.find(e - t.first);
      if (it != c.end()) v -= t.second * it->second;
    }
    if (!v.is_zero()) c.emplace(e, std::move(v));
  }
  std::vector<LaurentPoly::Term> out(c.begin(), c.end());
  return LaurentPoly::from_terms(b.rank(), n, std::move(out));
}

}  // namespace wmds

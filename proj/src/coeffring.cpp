#include "wmds/coeffring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

namespace wmds {

GaussElement::GaussElement(int n) : n_(n) {
  if (n < 1 || n > kMaxDegree)
    throw Error("metaplectic degree " + std::to_string(n) + " outside the supported range 1.." +
                std::to_string(kMaxDegree));
}

GaussElement GaussElement::constant(int n, const Integer& c) { return q_power(n, 0, c); }

GaussElement GaussElement::q_power(int n, int e, const Integer& c) {
  GaussElement out(n);
  if (c != 0) {
    Term t;
    t.key.q = e;
    t.coeff = c;
    out.terms_.push_back(std::move(t));
  }
  return out;
}

GaussElement GaussElement::generator(int n, long long s) {
  GaussElement out(n);
  const int t = static_cast<int>(((s % n) + n) % n);
  if (t == 0) throw Error("g_s is not a generator when n divides s");
  Term term;
  term.coeff = 1;
  if (t < n - t)
    term.key.z[t - 1] = 1;
  else if (t > n - t)
    term.key.z[n - t - 1] = -1;
  else
    term.key.z[out.pair_slots()] = 1;
  out.terms_.push_back(std::move(term));
  return out;
}

GaussElement GaussElement::normalize(int n, std::span<const RawTerm> raw) {
  GaussElement out(n);
  for (const auto& r : raw) {
    if (static_cast<int>(r.g.size()) != n - 1)
      throw DegreeMismatch("raw Gauss monomial has " + std::to_string(r.g.size()) +
                           " exponents, expected " + std::to_string(n - 1));
    if (r.coeff == 0) continue;
    Term t;
    t.coeff = r.coeff;
    t.key.q = r.q_exp;
    for (int i = 0; i < out.pair_slots(); ++i) {
      const int a = r.g[i], b = r.g[n - 2 - i];
      if (a < 0 || b < 0) throw Error("negative Gauss-sum exponent");
      t.key.q += std::min(a, b);
      t.key.z[i] = static_cast<std::int16_t>(a - b);
    }
    if (out.has_middle()) {
      const int e = r.g[n / 2 - 1];
      if (e < 0) throw Error("negative Gauss-sum exponent");
      t.key.q += e / 2;
      t.key.z[out.pair_slots()] = static_cast<std::int16_t>(e % 2);
    }
    out.terms_.push_back(std::move(t));
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return a.key < b.key; });
  combine_sorted(out.terms_);
  return out;
}

void GaussElement::combine_sorted(std::vector<Term>& terms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].key == terms[i].key) {
      terms[i].coeff += terms[j].coeff;
      ++j;
    }
    if (terms[i].coeff != 0) {
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<int> GaussElement::g_exponents(const Key& key) const {
  std::vector<int> e(n_ - 1, 0);
  for (int i = 0; i < pair_slots(); ++i) {
    if (key.z[i] > 0)
      e[i] = key.z[i];
    else if (key.z[i] < 0)
      e[n_ - 2 - i] = -key.z[i];
  }
  if (has_middle()) e[n_ / 2 - 1] = key.z[pair_slots()];
  return e;
}

GaussElement::Key GaussElement::multiply_keys(const Key& a, const Key& b) const {
  Key out;
  out.q = a.q + b.q;
  for (int i = 0; i < pair_slots(); ++i) {
    const int za = a.z[i], zb = b.z[i];
    if ((za > 0 && zb < 0) || (za < 0 && zb > 0)) out.q += std::min(std::abs(za), std::abs(zb));
    out.z[i] = static_cast<std::int16_t>(za + zb);
  }
  if (has_middle()) {
    const int s = pair_slots();
    const int z = a.z[s] + b.z[s];
    out.q += z / 2;
    out.z[s] = static_cast<std::int16_t>(z % 2);
  }
  return out;
}

bool GaussElement::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

bool GaussElement::is_constant(long long c) const {
  if (c == 0) return terms_.empty();
  return terms_.size() == 1 && terms_[0].key == Key{} && terms_[0].coeff == c;
}

GaussElement GaussElement::unit_inverse() const {
  if (!is_unit()) throw Error("element " + to_string() + " is not a unit monomial");
  GaussElement out(n_);
  Term t;
  t.coeff = terms_[0].coeff;
  const Key& k = terms_[0].key;
  t.key.q = -k.q;
  for (int i = 0; i < pair_slots(); ++i) {
    t.key.z[i] = static_cast<std::int16_t>(-k.z[i]);
    t.key.q -= std::abs(k.z[i]);
  }
  if (has_middle()) {
    t.key.z[pair_slots()] = k.z[pair_slots()];
    t.key.q -= k.z[pair_slots()];
  }
  out.terms_.push_back(std::move(t));
  return out;
}

GaussElement GaussElement::operator-() const {
  GaussElement out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

void check_degrees(int a, int b) {
  if (a != b)
    throw DegreeMismatch("Gauss elements of degrees " + std::to_string(a) + " and " +
                         std::to_string(b) + " cannot be combined");
}

}  // namespace

GaussElement& GaussElement::operator+=(const GaussElement& rhs) {
  check_degrees(n_, rhs.n_);
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->key < a->key) {
      merged.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) merged.push_back(Term{a->key, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

GaussElement& GaussElement::operator-=(const GaussElement& rhs) { return *this += -rhs; }

GaussElement operator*(const GaussElement& a, const GaussElement& b) {
  check_degrees(a.n_, b.n_);
  GaussElement out(a.n_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) out.terms_.push_back({a.multiply_keys(ta.key, tb.key), ta.coeff * tb.coeff});
  if (out.terms_.size() > 1) {
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const GaussElement::Term& x, const GaussElement::Term& y) { return x.key < y.key; });
    GaussElement::combine_sorted(out.terms_);
  }
  return out;
}

GaussElement& GaussElement::operator*=(const GaussElement& rhs) {
  *this = *this * rhs;
  return *this;
}

GaussElement GaussElement::shifted_q(int e) const {
  GaussElement out = *this;
  out.shift_q_inplace(e);
  return out;
}

void GaussElement::shift_q_inplace(int e) {
  for (auto& t : terms_) t.key.q += e;
}

Integer GaussElement::coefficient_sum() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

std::string GaussElement::to_string() const {
  if (terms_.empty()) return "0";
  struct Rendered {
    int q;
    std::vector<int> g;
    const Integer* c;
  };
  std::vector<Rendered> items;
  for (const auto& t : terms_) items.push_back({t.key.q, g_exponents(t.key), &t.coeff});
  std::sort(items.begin(), items.end(), [](const Rendered& a, const Rendered& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.g < b.g;
  });
  std::string out;
  bool first = true;
  for (const auto& it : items) {
    std::string factors;
    auto add = [&](const std::string& f) {
      if (!factors.empty()) factors += '*';
      factors += f;
    };
    if (it.q == 1)
      add("q");
    else if (it.q != 0)
      add("q^" + std::to_string(it.q));
    for (std::size_t s = 0; s < it.g.size(); ++s) {
      if (it.g[s] == 0) continue;
      std::string f = "g" + std::to_string(s + 1);
      if (it.g[s] != 1) f += "^" + std::to_string(it.g[s]);
      add(f);
    }
    const bool negative = *it.c < 0;
    const Integer mag = negative ? Integer(-*it.c) : *it.c;
    std::string body;
    if (factors.empty())
      body = mag.str();
    else if (mag == 1)
      body = factors;
    else
      body = mag.str() + "*" + factors;
    if (first)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(int n, std::string_view text) : n_(n), text_(text) {}

  GaussElement run() {
    std::vector<GaussElement::RawTerm> raw;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      skip();
      raw.push_back(term(negative));
      skip();
      if (pos_ == text_.size()) break;
      const char op = text_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return GaussElement::normalize(n_, raw);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse Gauss element '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  int signed_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    const int v = std::stoi(digits());
    return neg ? -v : v;
  }

  GaussElement::RawTerm term(bool negative) {
    GaussElement::RawTerm t;
    t.g.assign(n_ - 1, 0);
    t.coeff = 1;
    bool any = false;
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= Integer(digits());
      } else if (c == 'q') {
        ++pos_;
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = signed_int();
        }
        t.q_exp += e;
      } else if (c == 'g') {
        ++pos_;
        const int s = std::stoi(digits());
        if (s < 1 || s >= n_) fail("Gauss symbol index out of range");
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = std::stoi(digits());
        }
        t.g[s - 1] += e;
      } else {
        fail("expected a factor");
      }
      any = true;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  int n_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussElement GaussElement::parse(int n, std::string_view text) { return TermParser(n, text).run(); }

std::ostream& operator<<(std::ostream& os, const GaussElement& e) { return os << e.to_string(); }

GaussElement gauss_symbol(int n, long long t) {
  if (t % n == 0) return GaussElement::constant(n, -1);
  return GaussElement::generator(n, t);
}

GaussElement g_star(int n, long long t) {
  if (t % n == 0) return GaussElement::constant(n, -1);
  return GaussElement::generator(n, t).shifted_q(-1);
}

GaussElement gauss_eval(int n, long long t, int k, int l) {
  if (k < 0 || l < 0) throw Error("gauss_eval needs nonnegative exponents");
  if (l == k + 1) return gauss_symbol(n, t * l).shifted_q(k);
  if ((t * l) % n == 0 && k >= l) {
    if (l == 0) return GaussElement::constant(n, 1);
    return GaussElement::q_power(n, l) - GaussElement::q_power(n, l - 1);
  }
  return GaussElement(n);
}

std::complex<double> specialize(const GaussElement& e, const SpecializationMap& m) {
  if (m.degree() != e.degree())
    throw DegreeMismatch("specialization of degree " + std::to_string(m.degree()) +
                         " applied to an element of degree " + std::to_string(e.degree()));
  std::complex<double> acc = 0;
  for (const auto& t : e.terms()) {
    std::complex<double> v = std::pow(m.q_value, t.key.q);
    const auto g = e.g_exponents(t.key);
    for (std::size_t s = 0; s < g.size(); ++s)
      if (g[s]) v *= std::pow(m.g_values[s], g[s]);
    acc += t.coeff.convert_to<double>() * v;
  }
  return acc;
}

SpecializationMap random_specialization(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> qdist(2.0, 16.0);
  std::uniform_real_distribution<double> udist(-1.0, 1.0);
  SpecializationMap m;
  m.q_value = qdist(rng);
  const double root = std::sqrt(m.q_value.real());
  m.g_values.assign(n - 1, 0);
  for (int s = 1; 2 * s < n; ++s) {
    const double u = udist(rng);
    m.g_values[s - 1] = std::polar(root, std::numbers::pi * u);
    m.g_values[n - s - 1] = std::polar(root, -std::numbers::pi * u);
  }
  if (n % 2 == 0) m.g_values[n / 2 - 1] = (rng() & 1) ? -root : root;
  return m;
}

}  // namespace wmds

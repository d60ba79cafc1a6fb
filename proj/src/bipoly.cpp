#include "arbor/bipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

namespace arbor {

BiPoly::BiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
  BiPoly p;
  p.add_term(c, i, j);
  return p;
}

BiPoly BiPoly::from_a(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term(p.coeff(i), i, 0);
  return r;
}

BiPoly BiPoly::from_b(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term(p.coeff(i), 0, i);
  return r;
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Rational& c, int i, int j) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool BiPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.first >= 0 && t.first.second >= 0; });
}

int BiPoly::min_a() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.first);
  return terms_.empty() ? 0 : m;
}

int BiPoly::max_a() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e.first);
  return terms_.empty() ? 0 : m;
}

int BiPoly::min_b() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.second);
  return terms_.empty() ? 0 : m;
}

int BiPoly::max_b() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e.second);
  return terms_.empty() ? 0 : m;
}

namespace {

Rational rpow(const Rational& x, int e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    return rpow(Rational(1) / x, -e);
  }
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Rational BiPoly::operator()(const Rational& a, const Rational& b) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * rpow(a, e.first) * rpow(b, e.second);
  return acc;
}

UniPoly BiPoly::at_b(const Rational& b) const {
  std::vector<Rational> v;
  for (const auto& [e, c] : terms_) {
    if (e.first < 0) throw NonPolynomialError("negative exponent in at_b");
    if (static_cast<std::size_t>(e.first) >= v.size()) v.resize(static_cast<std::size_t>(e.first) + 1);
    v[static_cast<std::size_t>(e.first)] += c * rpow(b, e.second);
  }
  return UniPoly(std::move(v));
}

UniPoly BiPoly::at_a(const Rational& a) const { return swapped().at_b(a); }

UniPoly BiPoly::coeff_b(int j) const {
  std::vector<Rational> v;
  for (const auto& [e, c] : terms_) {
    if (e.second != j) continue;
    if (e.first < 0) throw NonPolynomialError("negative exponent in coeff_b");
    if (static_cast<std::size_t>(e.first) >= v.size()) v.resize(static_cast<std::size_t>(e.first) + 1);
    v[static_cast<std::size_t>(e.first)] = c;
  }
  return UniPoly(std::move(v));
}

BiPoly BiPoly::shifted(int da, int db) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.first + da, e.second + db}, c);
  return r;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(c1 * c2, e1.first + e2.first, e1.second + e2.second);
  terms_ = std::move(r.terms_);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly result(1);
  BiPoly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

namespace {

// Powers 0..k of p, cached.
std::vector<BiPoly> powers(const BiPoly& p, int k) {
  std::vector<BiPoly> v{BiPoly(1)};
  for (int i = 1; i <= k; ++i) v.push_back(v.back() * p);
  return v;
}

}  // namespace

RationalFunction2 substitute(const BiPoly& p, const RationalFunction2& a, const RationalFunction2& b) {
  if (p.is_zero()) return {BiPoly(), BiPoly(1)};
  // With lo <= every exponent <= hi, a^i = an^(i-lo) ad^(hi-i) / (an^-lo ad^hi).
  const int lo_a = std::min(p.min_a(), 0), hi_a = std::max(p.max_a(), 0);
  const int lo_b = std::min(p.min_b(), 0), hi_b = std::max(p.max_b(), 0);
  const auto an = powers(a.num, hi_a - lo_a), ad = powers(a.den, hi_a - lo_a);
  const auto bn = powers(b.num, hi_b - lo_b), bd = powers(b.den, hi_b - lo_b);
  RationalFunction2 out;
  for (const auto& [e, c] : p.terms()) {
    const auto i = static_cast<std::size_t>(e.first - lo_a), j = static_cast<std::size_t>(e.second - lo_b);
    out.num += c * an[i] * ad[static_cast<std::size_t>(hi_a - e.first)] * bn[j] *
               bd[static_cast<std::size_t>(hi_b - e.second)];
  }
  out.den = an[static_cast<std::size_t>(-lo_a)] * ad[static_cast<std::size_t>(hi_a)] *
            bn[static_cast<std::size_t>(-lo_b)] * bd[static_cast<std::size_t>(hi_b)];
  return out;
}

BiPoly compose(const BiPoly& p, const BiPoly& a, const BiPoly& b) {
  if (!p.is_polynomial()) throw NonPolynomialError("compose needs nonnegative exponents");
  const auto ap = powers(a, std::max(p.max_a(), 0));
  const auto bp = powers(b, std::max(p.max_b(), 0));
  BiPoly out;
  for (const auto& [e, c] : p.terms())
    out += c * ap[static_cast<std::size_t>(e.first)] * bp[static_cast<std::size_t>(e.second)];
  return out;
}

BiPoly divide_exact(const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.is_zero()) return {};
  // Monomials are units: strip them, divide the remaining polynomials.
  const int sa = num.min_a() - den.min_a(), sb = num.min_b() - den.min_b();
  BiPoly rem = num.shifted(-num.min_a(), -num.min_b());
  const BiPoly d = den.shifted(-den.min_a(), -den.min_b());
  // Graded order: total degree, then A-degree.
  auto leading = [](const BiPoly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
      const auto& e = it->first;
      const auto& b = best->first;
      if (e.first + e.second > b.first + b.second ||
          (e.first + e.second == b.first + b.second && e.first > b.first))
        best = it;
    }
    return *best;
  };
  const auto [dl, dc] = leading(d);
  BiPoly q;
  while (!rem.is_zero()) {
    const auto [rl, rc] = leading(rem);
    const int i = rl.first - dl.first, j = rl.second - dl.second;
    if (i < 0 || j < 0) throw NonPolynomialError("inexact polynomial division");
    const BiPoly t = BiPoly::monomial(rc / dc, i, j);
    q += t;
    rem -= t * d;
  }
  return q.shifted(sa, sb);
}

std::string to_string(const BiPoly& p, const std::string& a, const std::string& b) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational m = abs(c);
    const bool bare = e.first == 0 && e.second == 0;
    if (bare || m != 1) os << m.get_str();
    bool need_star = !bare && m != 1;
    auto var = [&](const std::string& name, int k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << name;
      if (k != 1) os << "^" << k;
      need_star = true;
    };
    var(a, e.first);
    var(b, e.second);
  }
  return os.str();
}

}  // namespace arbor

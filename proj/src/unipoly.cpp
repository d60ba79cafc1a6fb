#include "arbor/unipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arbor {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::variable() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::shifted(const Rational& shift) const {
  return compose(UniPoly(std::vector<Rational>{shift, 1}));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator-(UniPoly a) { return a *= Rational(-1); }

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Rational lead = b.leading();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return UniPoly::constant(1);
  UniPoly q = divmod(p, gcd(p, p.derivative())).first;
  return q * (Rational(1) / q.leading());
}

UniPoly binom_poly(const UniPoly& a, unsigned l) {
  UniPoly r = UniPoly::constant(1);
  for (unsigned i = 1; i <= l; ++i) r *= a + UniPoly::constant(static_cast<long>(i) - 1);
  return r * make_rational(1, factorial(l));
}

UniPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  std::set<Rational> seen;
  for (const auto& [x, y] : points) {
    if (!seen.insert(x).second) throw std::invalid_argument("repeated interpolation abscissa");
  }
  // Newton divided differences.
  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
      if (i == level) break;
    }
  }
  UniPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result *= UniPoly(std::vector<Rational>{-points[i].first, 1});
    result += UniPoly::constant(dd[i]);
  }
  return result;
}

namespace {

int sign(const Rational& q) { return sgn(q); }

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

std::size_t sign_variations(const std::vector<UniPoly>& chain, const Rational& at) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign(q(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_roots_in(const UniPoly& p, const Rational& a, const Rational& b, bool include_a,
                           bool include_b) {
  if (p.is_zero()) throw std::domain_error("Sturm count of the zero polynomial");
  if (b < a) return 0;
  const UniPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  if (a == b) return (include_a && include_b && q(a) == 0) ? 1 : 0;
  const auto chain = sturm_chain(q);
  // For a square-free q, V(a) - V(b) counts the roots in (a, b].
  std::size_t count = sign_variations(chain, a) - sign_variations(chain, b);
  if (include_a && q(a) == 0) ++count;
  if (!include_b && q(b) == 0) --count;
  return count;
}

std::string to_string(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace arbor

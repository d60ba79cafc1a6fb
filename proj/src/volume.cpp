#include "arbor/volume.hpp"

#include <stdexcept>

namespace arbor {

BiPoly truncate(const BiPoly& p, int n) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    const int l = e.first, kp1 = e.second;
    if (kp1 < 1) throw std::invalid_argument("truncation needs a positive V exponent");
    if (l >= n) continue;
    const int k = kp1 - 1;
    out.add_term(c, l, kp1);
    // minus sum_j (n-l)^(k-j)/(k-j)! V^(j+1) E^n
    Integer pw = 1;
    for (int d = 0; d <= k; ++d) {
      out.add_term(-c * make_rational(pw, factorial(static_cast<unsigned long>(d))), n, k - d + 1);
      pw *= n - l;
    }
  }
  return out;
}

BiPoly laplace_poly(const Arbor& t) {
  const int n = t.size();
  BiPoly acc = truncate(BiPoly::monomial(1, 0, t.root_multiplicity()), n);
  for (const auto& c : t.children()) acc *= laplace_poly(c);
  return truncate(acc, n);
}

Rational PiecewisePoly::operator()(const Rational& h) const {
  if (h < 0 || h > static_cast<long>(pieces.size())) return 0;
  mpz_class i = h.get_num() / h.get_den();
  if (i == static_cast<long>(pieces.size())) i -= 1;
  return pieces[i.get_ui()](h);
}

Rational PiecewisePoly::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    // antiderivative evaluated on [i, i+1]
    std::vector<Rational> a(static_cast<std::size_t>(p.degree() + 2));
    for (int d = 0; d <= p.degree(); ++d) a[static_cast<std::size_t>(d + 1)] = p.coeff(d) / (d + 1);
    const UniPoly prim(std::move(a));
    total += prim(static_cast<long>(i + 1)) - prim(static_cast<long>(i));
  }
  return total;
}

bool PiecewisePoly::continuous() const {
  for (std::size_t i = 1; i < pieces.size(); ++i)
    if (pieces[i - 1](static_cast<long>(i)) != pieces[i](static_cast<long>(i))) return false;
  return true;
}

namespace {

// (h - l)^k / k!
UniPoly shifted_power(int l, int k) {
  return pow(UniPoly{-l, 1}, static_cast<unsigned>(k)) * make_rational(1, factorial(static_cast<unsigned long>(k)));
}

}  // namespace

PiecewisePoly volume_function(const Arbor& t) {
  const int n = t.size();
  const BiPoly l = laplace_poly(t);
  PiecewisePoly f;
  f.pieces.resize(static_cast<std::size_t>(n));
  UniPoly beyond;
  for (const auto& [e, c] : l.terms()) {
    const UniPoly term = shifted_power(e.first, e.second - 1) * c;
    for (int i = std::max(e.first, 0); i < n; ++i) f.pieces[static_cast<std::size_t>(i)] += term;
    beyond += term;
  }
  if (!beyond.is_zero()) throw std::logic_error("volume function does not vanish beyond h = n");
  return f;
}

Rational laplace_v_coefficient(const BiPoly& l, int p) {
  Rational acc = 0;
  for (const auto& [e, c] : l.terms()) {
    // c v^-K e^(-l v): the v^p term comes from (-l v)^(p+K)/(p+K)!
    const int q = p + e.second;
    if (q < 0) continue;
    Integer pw = 1;
    for (int i = 0; i < q; ++i) pw *= -e.first;
    acc += c * make_rational(pw, factorial(static_cast<unsigned long>(q)));
  }
  return acc;
}

Rational volume(const Arbor& t) {
  const Rational by_integral = volume_function(t).integral();
  const BiPoly l = laplace_poly(t);
  for (int p = -l.max_b(); p < 0; ++p)
    if (laplace_v_coefficient(l, p) != 0) throw std::logic_error("Laplace transform has a pole at v = 0");
  if (laplace_v_coefficient(l, 0) != by_integral)
    throw std::logic_error("volume by integration and by the v -> 0 limit disagree");
  return by_integral;
}

}  // namespace arbor

#include "arbor/json_io.hpp"

#include <algorithm>

namespace arbor {

json integer_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return json(z.get_si());
  return json(z.get_str());
}

json rational_json(const Rational& q) { return json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

json unipoly_json(const UniPoly& p, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(rational_json(c));
  return {{"var", var}, {"coeffs", coeffs}};
}

json bipoly_json(const BiPoly& p, const std::string& a, const std::string& b) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json::array({e.first, e.second, integer_json(c.get_num()), integer_json(c.get_den())}));
  return {{"vars", json::array({a, b})}, {"terms", terms}};
}

json triangle_matrix_json(const BiPoly& p) {
  json rows = json::array();
  if (p.is_zero()) return rows;
  const int da = std::max(p.max_a(), 0), db = std::max(p.max_b(), 0);
  for (int i = 0; i <= da; ++i) {
    json row = json::array();
    for (int j = 0; j <= db; ++j) {
      const Rational c = p.coeff(i, j);
      row.push_back(c.get_den() == 1 ? integer_json(c.get_num()) : json(c.get_str()));
    }
    rows.push_back(row);
  }
  return rows;
}

json points_json(const std::vector<LatticePoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(p);
  return out;
}

}  // namespace arbor

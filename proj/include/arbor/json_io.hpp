#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "arbor/bipoly.hpp"
#include "arbor/polytope.hpp"
#include "arbor/rational.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json integer_json(const Integer& z);
/// [num, den]
json rational_json(const Rational& q);
/// {"var": v, "coeffs": [[num, den], ...]}
json unipoly_json(const UniPoly& p, const std::string& var);
/// {"vars": [a, b], "terms": [[i, j, num, den], ...]}
json bipoly_json(const BiPoly& p, const std::string& a, const std::string& b);
/// Dense matrix, entry [i][j] = coefficient of X^i Y^j.
json triangle_matrix_json(const BiPoly& p);
json points_json(const std::vector<LatticePoint>& pts);

}  // namespace arbor

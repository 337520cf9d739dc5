#pragma once

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "sschur/superalgebra.hpp"

namespace sschur {

// "t1*x1^3"; the empty monomial renders as "".
std::string to_string(const SuperMonomial& m);
// "-1 t4 | 1 t1*x3 | 1/6 t1*x1^3"; the zero polynomial renders as "0".
std::string to_string(const SuperPolynomial& f);

// Inverse of to_string(SuperPolynomial). Theta factors may appear in any
// order; the reordering sign is absorbed into the coefficient.
SuperPolynomial parse_polynomial(std::string_view text);

// [{"coeff":"p/q","theta":[...increasing],"x":[...non-increasing]}, ...]
nlohmann::json to_json(const SuperPolynomial& f);
SuperPolynomial polynomial_from_json(const nlohmann::json& j);

using Expansion = std::map<SuperPartition, Rational>;

// One "(L): c" line per entry in canonical order, or "0" when empty.
std::string to_string(const Expansion& e);
nlohmann::json to_json(const Expansion& e);
Expansion expansion_from_json(const nlohmann::json& j);

}  // namespace sschur

#pragma once

#include "json.hpp"

#include "dessin/algebra/laurent.hpp"

namespace dessin::algebra {

/// {"alphabet":[...], "terms":[{"e":[...],"c":"num/den"}, ...]} with terms in
/// lexicographic exponent order.
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const GaussPoly& p);

/// Inverse of to_json; throws std::invalid_argument on malformed input.
Poly poly_from_json(const nlohmann::json& j);
GaussPoly gauss_poly_from_json(const nlohmann::json& j);

}  // namespace dessin::algebra

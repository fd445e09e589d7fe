#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessin/algebra/series.hpp"
#include "dessin/npoint.hpp"
#include "dessin/report.hpp"

namespace dessin::closed {

using algebra::Poly;
using algebra::Rational;
using algebra::Series;

/// N_{n,k} = C(n,k)·C(n,k−1)/n for 1 ≤ k ≤ n.
Rational narayana(int n, int k);
/// Σ_k N_{n,k} q^k over the alphabet {q}.
Poly narayana_poly(int n);
/// C_n = C(2n,n)/(n+1).
Rational catalan(int n);

/// Δ(y) = 1 − 2s(u+v)y + s²(u−v)²y² as a series in `variable`, valid
/// through `order`.
Series delta_series(const std::string& variable, int order);
/// G_{0,1} as a series in y = 1/x through y^order.
Series g01_series(int order);

enum class ClosedForm { G01, G02, G03, G11 };
std::optional<ClosedForm> parse_closed_form(std::string_view name);
std::string to_string(ClosedForm f);

/// Expansion of a closed form through total inverse-x degree `order`.
NPointSeries dessin_closed_series(ClosedForm which, int order);

enum class IdentityName { narayana_gf, a132812_gf, central_binomial_gf, typeB_gf, typeD_gf };
std::optional<IdentityName> parse_identity(std::string_view name);
std::string to_string(IdentityName name);
const std::vector<IdentityName>& all_identities();

/// Expands both sides of a generating-function identity through `order`.
VerificationReport gf_identity_check(IdentityName name, int order);

enum class Theory { WK, hermitian, even_coupling, dessin };
enum class PointCount { one, two, three, one_genus_one };
struct CatalogKey {
    Theory theory;
    PointCount points;
};
std::optional<CatalogKey> parse_catalog_key(std::string_view text);  // "hermitian/one"
std::string to_string(const CatalogKey& key);
const std::vector<CatalogKey>& all_catalog_keys();

/// Expands a catalogued closed form and compares with its coefficient law.
VerificationReport catalog_check(const CatalogKey& key, int order);

}  // namespace dessin::closed

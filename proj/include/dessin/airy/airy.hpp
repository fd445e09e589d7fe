#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessin/algebra/laurent.hpp"
#include "dessin/algebra/series.hpp"
#include "dessin/report.hpp"

namespace dessin::airy {

using algebra::GaussPoly;
using algebra::GaussSeries;
using algebra::Rational;

enum class Branch { plus, minus };
std::string to_string(Branch b);
std::optional<Branch> parse_branch(std::string_view text);

/// Normalization of y: `display` is y² = ±ξ²(4√(uv)s ± ξ²)/(s(√u±√v)² + ξ²)²;
/// `curve` is the spectral curve itself, i.e. display/(2s).
enum class Normalization { display, curve };

/// Local alphabet (qs, qa, qb, p): s = qs², √u = qa², √v = qb², and p the
/// branch's √u ± √v, kept independent so 1/p stays a monomial.
const algebra::AlphabetPtr& local_alphabet();

/// Branch point x± = s(√u ± √v)² with ξ± = (x − x±)^(1/2).
struct BranchPointData {
    Branch branch;
    GaussPoly x_value;  // qs²(qa² ± qb²)²
    GaussPoly x_value_p;  // qs²p²

    static BranchPointData at(Branch b);
};

/// y as an odd series in ξ through `order`; the minus branch takes
/// (−√v)^(1/2) = i·qb.
GaussSeries y_branch_series(Branch branch, int order, Normalization norm = Normalization::display);

/// Coefficient of ξ^k in y_branch_series.
GaussPoly times(Branch branch, int k, Normalization norm = Normalization::display);

/// T(n,k) = 2·C(n,k)²·C(2n+2,n)/C(2n+2,2k+1); throws unless 0 ≤ k ≤ n and
/// the value is a positive integer.
Rational t_number(int n, int k);

struct TRow {
    int n = 0;
    std::vector<Rational> values;
};
TRow t_row(int n);

enum class LocalIdentity { bergman_pp, sqrt_product, bergman_mixed };
std::string to_string(LocalIdentity id);
std::optional<LocalIdentity> parse_local_identity(std::string_view text);
std::vector<LocalIdentity> all_local_identities();

/// Exact truncated-series check of one local identity through `order`
/// (order ≥ 2).
VerificationReport local_identity_check(LocalIdentity id, int order);

/// y² of the branch series against the displayed y², through 2·order.
VerificationReport y_square_check(Branch branch, int order);

/// dz1dz2/(z1−z2)² with z = ξ/(4sab + ξ²)^(1/2) expanded in ξ1, ξ2 against
/// 1/(ξ1−ξ2)² + Σ(n+2)(−t)^(n+1)ΣT(n,k)ξ1^(2k)ξ2^(2n−2k), t = 1/(16sab),
/// through total ξ-degree `degree`.
VerificationReport bergman_local_check(int degree = 10);

/// Every T(n,k), n ≤ max_n, is a positive integer and rows are symmetric.
VerificationReport t_integrality_check(int max_n = 20);

}  // namespace dessin::airy

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dessin/algebra/laurent.hpp"
#include "dessin/report.hpp"
#include "json.hpp"

namespace dessin {

/// Canonical dessin coefficient alphabet.
const algebra::AlphabetPtr& suv_alphabet();

/// Inverse-x slot names y0, y1, ... (y_i = 1/x_i).
std::vector<std::string> slot_names(int n, int first = 0);

/// Truncated expansion of G_{g,n}: the entry for the index tuple
/// (a_1,…,a_n) is the coefficient of ∏ x_i^(−a_i−1); only tuples with
/// Σ(a_i+1) ≤ order are present, zero coefficients are omitted.
struct NPointSeries {
    int genus = 0;
    int n = 0;
    int order = 0;
    std::map<std::vector<int>, algebra::Poly> coefficients;

    algebra::Poly coefficient(const std::vector<int>& a) const;

    /// Σ c_a ∏ y_i^(a_i+1) over alphabet (s,u,v) + slots.
    algebra::Poly to_polynomial(const std::vector<std::string>& slots) const;
    /// Reads such a polynomial back; terms of total slot degree above
    /// `order` are dropped, slot exponents below 2 are rejected.
    static NPointSeries from_polynomial(int genus, int n, int order, const algebra::Poly& p,
                                        const std::vector<std::string>& slots);

    /// Restriction to a smaller order.
    NPointSeries truncated(int new_order) const;

    /// First tuple whose coefficient is not invariant under slot permutation.
    std::optional<std::vector<int>> symmetry_defect() const;

    nlohmann::json to_json() const;
    static NPointSeries from_json(const nlohmann::json& j);
};

/// Compares two series coefficientwise over their common order; fills the
/// report's counters and first discrepancy.
void compare_series(const NPointSeries& expected, const NPointSeries& actual, VerificationReport& report);

/// All tuples of positive integers of length n with Σ(a_i+1) ≤ order.
std::vector<std::vector<int>> index_tuples(int n, int order);

std::string tuple_string(const std::vector<int>& a);

}  // namespace dessin

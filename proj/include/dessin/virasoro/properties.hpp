#pragma once

#include <vector>

#include "dessin/report.hpp"
#include "dessin/virasoro/correlators.hpp"

namespace dessin::virasoro {

/// All sorted partitions of n into positive parts.
std::vector<std::vector<int>> partitions(int n);

/// Largest-part and smallest-part elimination agree for Σa ≤ max_sum.
VerificationReport strategy_independence_suite(int max_sum = 12, int max_genus = 2);
/// D_g(A) is s^{Σa} times a polynomial in (u, v).
VerificationReport s_degree_law_suite(CorrelatorTable& table, int max_sum = 14, int max_genus = 3);
/// Nonzero D_g(A) is homogeneous in (u, v) of degree Σa − |A| + 2 − 2g.
VerificationReport total_degree_law_suite(CorrelatorTable& table, int max_sum = 14, int max_genus = 3);
/// uv divides D_g(A).
VerificationReport uv_divisibility_suite(CorrelatorTable& table, int max_sum = 14, int max_genus = 3);
/// D_g(A) is fixed by u ↔ v.
VerificationReport uv_symmetry_suite(CorrelatorTable& table, int max_sum = 14, int max_genus = 3);
/// D_g({n}) = 0 whenever 2g > n − 1.
VerificationReport vanishing_bound_suite(CorrelatorTable& table, int max_n = 14);
/// Σ_g n·D_g({n}) equals the KP closed form.
VerificationReport kp_oracle_suite(CorrelatorTable& table, int max_n = 12);
/// The operator form reproduces G_{0,3}, G_{1,1}, G_{1,2}.
VerificationReport operator_form_suite(CorrelatorTable& table, int order = 8);

}  // namespace dessin::virasoro

#pragma once

#include <cstdint>

#include "dessin/report.hpp"

namespace dessin::algebra {

/// Randomized algebraic-law suites; deterministic for a given seed.
VerificationReport ring_law_suite(int cases, std::uint64_t seed);
VerificationReport series_sqrt_suite(int cases, std::uint64_t seed);
VerificationReport series_inverse_suite(int cases, std::uint64_t seed);
VerificationReport residue_linearity_suite(int cases, std::uint64_t seed);
VerificationReport substitution_homomorphism_suite(int cases, std::uint64_t seed);

}  // namespace dessin::algebra

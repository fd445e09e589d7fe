#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessin/algebra/laurent.hpp"
#include "dessin/algebra/series.hpp"

namespace dessin::algebra {

/// Multivariate power series represented as polynomials truncated in total
/// degree over a set of grading symbols (the remaining symbols are
/// coefficients).
class Grading {
public:
    Grading(AlphabetPtr alphabet, const std::vector<std::string>& graded, int max_degree);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    int max_degree() const { return max_degree_; }
    int degree(const Exponents& e) const { return Poly::partial_degree(e, slots_); }

    Poly truncate(const Poly& p) const;
    /// Product dropping every term of graded degree above max_degree.
    Poly mul(const Poly& a, const Poly& b) const;
    /// Lifts a univariate series (whose variable is one of the graded
    /// symbols) to a truncated polynomial; the series must be valid through
    /// max_degree.
    Poly lift(const Series& s) const;

private:
    AlphabetPtr alphabet_;
    std::vector<std::size_t> slots_;
    int max_degree_;
};

/// Exact quotient p / (x − y); nullopt when (x − y) does not divide p.
std::optional<Poly> divide_by_difference(const Poly& p, const std::string& x, const std::string& y);

}  // namespace dessin::algebra

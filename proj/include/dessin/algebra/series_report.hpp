#pragma once

#include <string>

#include "dessin/algebra/series.hpp"
#include "dessin/report.hpp"

namespace dessin::algebra {

/// Checks expected and actual coefficientwise for exponents from the lower
/// of the two valuations through `through` (both series must be valid
/// there).
template <class C>
void compare_series(VerificationReport& report, const TruncatedSeries<C>& expected,
                    const TruncatedSeries<C>& actual, int through, const std::string& label) {
    if (expected.order() < through || actual.order() < through) {
        report.fail(label + ": truncation", "order >= " + std::to_string(through),
                    std::to_string(std::min(expected.order(), actual.order())));
        return;
    }
    const int lo = std::min(expected.valuation(), actual.valuation());
    for (int e = lo; e <= through; ++e) {
        const auto x = expected.coefficient(e);
        const auto y = actual.coefficient(e);
        report.check(x == y, [&] {
            return Discrepancy{label + ": " + expected.variable() + "^" + std::to_string(e), x.str(), y.str()};
        });
    }
}

}  // namespace dessin::algebra

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dessin/algebra/laurent.hpp"
#include "dessin/algebra/series.hpp"
#include "dessin/npoint.hpp"
#include "dessin/report.hpp"
#include "dessin/virasoro/correlators.hpp"
#include "json.hpp"

namespace dessin::eo {

using algebra::Poly;
using algebra::Series;

/// The dessin curve x = s(αz²−β)/(z²−1), y = −(α−β)z/(2s(αz²−β)) with
/// α = (a−b)², β = (a+b)², u = a², v = b².
struct SpectralCurveData {
    Poly a, b, alpha, beta;  // over (a, b)

    /// `swapped` replaces b by −b, which exchanges α and β.
    static SpectralCurveData dessin(bool swapped = false);
};

/// Residue charts: z itself, or t = 1/z.
enum class Chart { zero, infinity };
std::string to_string(Chart c);

/// Alphabet (a, b, z1, …, zn) of a form with n slots.
algebra::AlphabetPtr form_alphabet(int n);

/// W_{g,n} = w·dz1⋯dzn with w a Laurent polynomial over form_alphabet(n).
struct EOForm {
    int g = 0;
    int n = 0;
    Poly coeff;

    nlohmann::json to_json() const;
};

/// W_{0,2} = dz1dz2/(z1−z2)², expanded around a chart point.
struct BergmanKernel {
    std::string str() const { return "dz1*dz2/(z1-z2)^2"; }
    /// w_{0,2}(±z, spectator) as a series in the chart variable through
    /// `order`; at infinity the factor t^(−2) from dz is included, i.e.
    /// 1/(1 ∓ spectator·t)².
    Series expand(Chart chart, const std::string& spectator, int sign, const algebra::AlphabetPtr& coefficients,
                  int order) const;
    /// w_{0,2}(z, −z) = 1/(4z²), with the dz² factor in the infinity chart.
    Series diagonal(Chart chart, const algebra::AlphabetPtr& coefficients) const;
};

BergmanKernel bergman_kernel();

/// The recursion kernel K(z1, z) = (αz²−β)(z²−1)²/(2(α−β)²z(z1²−z²)) as a
/// Laurent series in the chart variable ("z" or "t"), exact through
/// exponent pos_degree_bound, so residues against factors with a pole of
/// order ≤ pos_degree_bound + 1 are exact. At infinity the series is
/// K(z1, 1/t)·(−t²), which has a simple pole. Coefficients over (a, b, z1).
Series recursion_kernel_expansion(Chart at, int pos_degree_bound,
                                  const SpectralCurveData& curve = SpectralCurveData::dessin());

/// Memoized Eynard–Orantin recursion on one curve.
class EOEngine {
public:
    explicit EOEngine(SpectralCurveData curve = SpectralCurveData::dessin());

    /// w_{g,n} for 2g−2+n > 0; throws on an odd or asymmetric result.
    const EOForm& omega(int g, int n);

private:
    Poly compute(int g, int n);

    SpectralCurveData curve_;
    std::map<std::pair<int, int>, std::unique_ptr<EOForm>> forms_;
    std::recursive_mutex lock_;
};

/// w_{g,n} on the dessin curve from a shared engine.
const EOForm& eo_omega(int g, int n);

/// z(x) = √((1−sβ/x)/(1−sα/x)) as a series in y = 1/x over (s, a, b).
Series z_of_x_series(int order);

/// G_{g,n} from w_{g,n}(z(x1),…)·∏ dz_i/dx_i, rewritten in (s, u, v).
/// Throws when a or b survive with odd exponents.
NPointSeries to_x_series(int g, int n, int order, EOEngine& engine);
NPointSeries to_x_series(int g, int n, int order);

/// to_x_series against the Virasoro recursion, coefficient by coefficient.
VerificationReport verify_main_theorem(int g, int n, int order, virasoro::CorrelatorTable& table);
VerificationReport verify_main_theorem(int g, int n, int order);

/// Stable (g, n) with 2g−2+n ≤ max_chi.
std::vector<std::pair<int, int>> stable_range(int max_chi);

VerificationReport evenness_suite(int max_chi = 4);
VerificationReport symmetry_suite(int max_chi = 4);
VerificationReport s_freeness_suite(int max_chi = 4);
/// The recursion on the curve with α ↔ β reproduces
/// (−1)^n ∏ z_i^(−2)·w_{g,n}(1/z_1, …, 1/z_n).
VerificationReport chart_consistency_suite(int max_chi = 4);
/// 4s²y²x² = x² − 2s(u+v)x + s²(u−v)² at both charts through `order`.
VerificationReport curve_identity_check(int order = 20);

}  // namespace dessin::eo

#include "dessin/airy/airy.hpp"

#include <stdexcept>

#include "dessin/algebra/graded.hpp"
#include "dessin/algebra/series_report.hpp"

namespace dessin::airy {

using algebra::GaussianRational;
using algebra::Poly;
using algebra::Series;

std::string to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

std::optional<Branch> parse_branch(std::string_view text) {
    if (text == "plus")
        return Branch::plus;
    if (text == "minus")
        return Branch::minus;
    return std::nullopt;
}

const algebra::AlphabetPtr& local_alphabet() {
    static const auto alpha = algebra::make_alphabet({"qs", "qa", "qb", "p"});
    return alpha;
}

namespace {

GaussPoly gvar(const char* name, int k = 1) { return GaussPoly::variable(local_alphabet(), name, k); }
GaussPoly gconst(const GaussianRational& c) { return GaussPoly::constant(local_alphabet(), c); }
int sign_of(Branch b) { return b == Branch::plus ? 1 : -1; }

}  // namespace

BranchPointData BranchPointData::at(Branch b) {
    const GaussPoly root = gvar("qa", 2) + gvar("qb", 2) * GaussianRational(sign_of(b));
    return {b, gvar("qs", 2) * root.pow(2), gvar("qs", 2) * gvar("p", 2)};
}

GaussSeries y_branch_series(Branch branch, int order, Normalization norm) {
    if (order < 1)
        throw std::invalid_argument("y_branch_series: order must be at least 1");
    const int sigma = sign_of(branch);
    const std::string var = "xi";
    // (1 + 4X)^(1/2) = 1 + 2 Σ_m (−1)^m/(m+1)·C(2m,m)·X^(m+1), X = ±ξ²/(16 qa²qb²qs²)
    const GaussPoly x_coeff = (gvar("qa", 2) * gvar("qb", 2) * gvar("qs", 2) * GaussianRational(16 * sigma)).inverse();
    GaussSeries root = GaussSeries::constant(var, gconst(1), order);
    for (int m = 0; 2 * m + 2 <= order; ++m) {
        const Rational c = Rational(2 * (m % 2 == 0 ? 1 : -1)) * algebra::binomial(2 * m, m) / Rational(m + 1);
        root = root + GaussSeries::monomial(var, x_coeff.pow(m + 1) * GaussianRational(c), 2 * m + 2);
    }
    // 1/(1 + Y) = Σ (−1)^n Y^n, Y = ξ²/(qs²p²)
    const GaussPoly y_coeff = (gvar("qs", 2) * gvar("p", 2)).inverse();
    GaussSeries geo = GaussSeries::constant(var, gconst(1), order);
    for (int n = 1; 2 * n <= order; ++n)
        geo = geo + GaussSeries::monomial(var, (-y_coeff).pow(n), 2 * n);
    // 2·qa·(±qb)^…·qs/(qs²p²), with (−√v)^(1/2) = i·qb
    const GaussPoly qb = branch == Branch::plus ? gvar("qb") : gvar("qb") * GaussianRational::i();
    GaussPoly prefactor = gvar("qa") * qb * gvar("qs") * y_coeff * GaussianRational(2);
    if (norm == Normalization::curve)
        prefactor = prefactor * (gvar("qs", 2) * GaussianRational(2)).inverse();
    return GaussSeries::multiply(GaussSeries::monomial(var, prefactor, 1), GaussSeries::multiply(root, geo, order),
                                 order);
}

GaussPoly times(Branch branch, int k, Normalization norm) {
    if (k < 1)
        throw std::invalid_argument("times: k must be at least 1");
    return y_branch_series(branch, k, norm).coefficient(k);
}

Rational t_number(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("t_number: need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    const Rational value = Rational(2) * algebra::binomial(n, k).pow(2) * algebra::binomial(2 * n + 2, n) /
                           algebra::binomial(2 * n + 2, 2 * k + 1);
    if (!value.is_integer() || value.sign() <= 0)
        throw std::logic_error("t_number: T(" + std::to_string(n) + "," + std::to_string(k) + ") = " + value.str() +
                               " is not a positive integer");
    return value;
}

TRow t_row(int n) {
    TRow row{n, {}};
    for (int k = 0; k <= n; ++k)
        row.values.push_back(t_number(n, k));
    return row;
}

std::string to_string(LocalIdentity id) {
    switch (id) {
    case LocalIdentity::bergman_pp: return "bergman-pp";
    case LocalIdentity::sqrt_product: return "sqrt-product";
    case LocalIdentity::bergman_mixed: return "bergman-mixed";
    }
    return "?";
}

std::optional<LocalIdentity> parse_local_identity(std::string_view text) {
    for (auto id : all_local_identities())
        if (to_string(id) == text)
            return id;
    return std::nullopt;
}

std::vector<LocalIdentity> all_local_identities() {
    return {LocalIdentity::bergman_pp, LocalIdentity::sqrt_product, LocalIdentity::bergman_mixed};
}

namespace {

VerificationReport make_report(std::string name, int order) {
    VerificationReport r;
    r.suite = "airy";
    r.name = std::move(name);
    r.parameters = {{"order", order}};
    r.order = order;
    return r;
}

/// Σ_k T(n,k)·x^(ek)·y^(e(n−k)) over an alphabet containing x and y.
Poly t_form(const algebra::AlphabetPtr& alpha, const std::string& x, const std::string& y, int n, int e) {
    Poly out(alpha);
    for (int k = 0; k <= n; ++k)
        out += Poly::variable(alpha, x, e * k) * Poly::variable(alpha, y, e * (n - k)) * t_number(n, k);
    return out;
}

void sqrt_product(VerificationReport& r, int order) {
    const auto alpha = algebra::make_alphabet({"a", "b"});
    const Poly a = Poly::variable(alpha, "a"), b = Poly::variable(alpha, "b"), one = Poly::constant(alpha, Rational(1));
    auto mono = [&](const Poly& c, int k) { return Series::monomial("x", c, k); };
    const Series lhs = mono(one, 0) - Series::multiply(mono(one, 0) - mono(a, 1), mono(one, 0) - mono(b, 1), order)
                                          .sqrt(order);
    Series rhs = mono((a + b) * Rational(1, 2), 1);
    for (int n = 0; n + 2 <= order; ++n)
        rhs = rhs + mono((b - a).pow(2) * t_form(alpha, "a", "b", n, 1) * (Rational(1, 8) / Rational(4).pow(n)), n + 2);
    compare_series(r, lhs, rhs.truncated(order), order, "x");
}

/// Shared pieces in the t-series over (x, y).
struct PPData {
    algebra::AlphabetPtr alpha = algebra::make_alphabet({"x", "y"});
    Poly x = Poly::variable(alpha, "x"), y = Poly::variable(alpha, "y");
    Poly one = Poly::constant(alpha, Rational(1));
    Series mono(const Poly& c, int k) const { return Series::monomial("t", c, k); }
};

void bergman_pp(VerificationReport& r, int order) {
    const PPData d;
    const Series ra = (d.mono(d.one, 0) + d.mono(d.x * d.x * Rational(4), 1)).sqrt(order);
    const Series rb = (d.mono(d.one, 0) + d.mono(d.y * d.y * Rational(4), 1)).sqrt(order);
    // S = Σ_n (n+2)(−t)^(n+1) Σ_k T(n,k) x^(2k) y^(2n−2k)
    Series sum("t", d.alpha, order);
    for (int n = 0; n + 1 <= order; ++n)
        sum = sum + d.mono(t_form(d.alpha, "x", "y", n, 2) * Rational((n + 2) * (n % 2 == 0 ? -1 : 1)), n + 1);
    const Poly diff2 = (d.x - d.y).pow(2);
    const Series den = rb * d.x - ra * d.y;
    const Series lhs = Series::multiply(Series::multiply(den * den, ra * rb, order),
                                        d.mono(d.one, 0) + sum * diff2, order);
    compare_series(r, Series::constant("t", diff2, order), lhs, order, "t");
    // printed low-order terms −2t + 3(2x²+2y²)t² − 4(5x⁴+6x²y²+5y⁴)t³
    const std::vector<Poly> printed{d.one * Rational(-2), (d.x * d.x + d.y * d.y) * Rational(6),
                                    (d.x.pow(4) * Rational(5) + d.x.pow(2) * d.y.pow(2) * Rational(6) +
                                     d.y.pow(4) * Rational(5)) *
                                        Rational(-4)};
    for (int k = 1; k <= std::min(order, 3); ++k) {
        const Poly c = sum.coefficient(k);
        const Poly& want = printed[static_cast<std::size_t>(k) - 1];
        r.check(c == want, [&] { return Discrepancy{"printed t^" + std::to_string(k), want.str(), c.str()}; });
    }
    // 1 − √((1+4tx²)(1+4ty²)) = −2(x²+y²)t + 2(x²−y²)² Σ (−1)^n t^(n+2) Σ T x^(2k) y^(2n−2k)
    Series expected = d.mono((d.x * d.x + d.y * d.y) * Rational(-2), 1);
    for (int n = 0; n + 2 <= order; ++n)
        expected = expected + d.mono((d.x * d.x - d.y * d.y).pow(2) * t_form(d.alpha, "x", "y", n, 2) *
                                         Rational(2 * (n % 2 == 0 ? 1 : -1)),
                                     n + 2);
    compare_series(r, expected.truncated(order), d.mono(d.one, 0) - ra * rb, order, "t");
}

void bergman_mixed(VerificationReport& r, int order) {
    const PPData d;
    const Series ra = (d.mono(d.one, 0) + d.mono(d.x * d.x * Rational(4), 1)).sqrt(order);
    const Series rb = (d.mono(d.one, 0) + d.mono(d.y * d.y * Rational(4), 1)).sqrt(order);
    const Series rab = Series::multiply(ra, rb, order);
    const Series cross = d.mono(d.x * d.y * Rational(4), 1);
    const Series lhs = Series::multiply(rab, Series::multiply(rab + cross, rab + cross, order), order).inverse(order);
    const Series c = d.mono(d.one, 0) + d.mono((d.x * d.x + d.y * d.y) * Rational(4), 1);
    const Series c2inv = Series::multiply(c, c, order).inverse(order);
    const Series middle =
        Series::multiply(Series::multiply(rab - cross, rab - cross, order), Series::multiply(rab, c * c, order).inverse(order),
                         order);
    compare_series(r, lhs, middle, order, "t");
    const Series rhs = Series::multiply(rab, c2inv, order) - Series::multiply(d.mono(d.x * d.y * Rational(8), 1), c2inv, order) +
                       Series::multiply(Series::multiply(d.mono(d.x.pow(2) * d.y.pow(2) * Rational(16), 2), rab.inverse(order), order),
                                        c2inv, order);
    compare_series(r, lhs, rhs, order, "t");
}

}  // namespace

VerificationReport local_identity_check(LocalIdentity id, int order) {
    auto r = make_report(to_string(id), order);
    ReportTimer timer(r);
    if (order < 2)
        throw std::invalid_argument("local_identity_check: order must be at least 2");
    switch (id) {
    case LocalIdentity::sqrt_product: sqrt_product(r, order); break;
    case LocalIdentity::bergman_pp: bergman_pp(r, order); break;
    case LocalIdentity::bergman_mixed: bergman_mixed(r, order); break;
    }
    return r;
}

VerificationReport y_square_check(Branch branch, int order) {
    auto r = make_report("y-square-" + to_string(branch), order);
    ReportTimer timer(r);
    const int sigma = sign_of(branch);
    const int through = 2 * order;
    const GaussSeries y = y_branch_series(branch, through);
    const GaussSeries den = GaussSeries::constant("xi", gvar("qs", 2) * gvar("p", 2)) +
                            GaussSeries::monomial("xi", gconst(1), 2);
    const GaussSeries lhs = GaussSeries::multiply(GaussSeries::multiply(y, y, through), den * den, through);
    const GaussSeries rhs =
        (GaussSeries::monomial("xi", gvar("qa", 2) * gvar("qb", 2) * gvar("qs", 2) * GaussianRational(4 * sigma), 2) +
         GaussSeries::monomial("xi", gconst(1), 4))
            .truncated(through);
    compare_series(r, rhs, lhs, through, "xi");
    // odd in ξ
    for (const auto& [k, c] : y.coefficients())
        r.check(k % 2 != 0, [&] { return Discrepancy{"xi^" + std::to_string(k), "odd exponent", c.str()}; });
    return r;
}

VerificationReport bergman_local_check(int degree) {
    auto r = make_report("bergman-local", degree);
    ReportTimer timer(r);
    const auto coeffs = algebra::make_alphabet({"qa", "qb", "qs"});
    const auto alpha = algebra::make_alphabet({"qa", "qb", "qs", "x", "y"});
    const algebra::Grading grading(alpha, {"x", "y"}, degree);
    const Poly c = Poly::variable(coeffs, "qa", 2) * Poly::variable(coeffs, "qb", 2) *
                   Poly::variable(coeffs, "qs", 2) * Rational(4);
    const Poly one = Poly::constant(coeffs, Rational(1));
    // z = ξ/(2 qa qb qs)·(1 + ξ²/c)^(−1/2)
    auto z_series = [&](const std::string& var) {
        const Series inner = Series::constant(var, one) + Series::monomial(var, c.inverse(), 2);
        const Poly lead = (Poly::variable(coeffs, "qa") * Poly::variable(coeffs, "qb") *
                           Poly::variable(coeffs, "qs") * Rational(2))
                              .inverse();
        return Series::monomial(var, lead, 1) * inner.power(Rational(-1, 2), degree);
    };
    const Series zx = z_series("x"), zy = z_series("y");
    const Poly z1 = grading.lift(zx.truncated(degree)), z2 = grading.lift(zy.truncated(degree));
    const Poly d1 = grading.lift(zx.derivative()), d2 = grading.lift(zy.derivative());
    const Poly x = Poly::variable(alpha, "x"), y = Poly::variable(alpha, "y");
    const Poly diff2 = (x - y).pow(2);
    // t = 1/(16 qa² qb² qs²)
    const Poly t = (c * Rational(4)).inverse().embed(alpha);
    Poly sum(alpha);
    for (int n = 0; 2 * n + 2 <= degree; ++n)
        sum += t_form(alpha, "x", "y", n, 2) * t.pow(n + 1) * Rational((n + 2) * (n % 2 == 0 ? -1 : 1));
    const Poly lhs = grading.mul(diff2, grading.mul(d1, d2));
    const Poly zdiff = z1 - z2;
    const Poly rhs = grading.mul(grading.mul(zdiff, zdiff), Poly::constant(alpha, Rational(1)) + grading.mul(diff2, sum));
    const Poly defect = lhs - rhs;
    r.check(defect.is_zero(), [&] { return Discrepancy{"total xi-degree <= " + std::to_string(degree), "0", defect.str()}; });
    r.checked_count = static_cast<std::int64_t>(lhs.size());
    return r;
}

VerificationReport t_integrality_check(int max_n) {
    auto r = make_report("t-integrality", max_n);
    r.parameters = {{"max_n", max_n}};
    ReportTimer timer(r);
    const std::vector<std::vector<long>> printed{{1}, {2, 2}, {5, 6, 5}};
    for (int n = 0; n <= max_n; ++n) {
        TRow row;
        try {
            row = t_row(n);
        } catch (const std::logic_error& e) {
            r.fail("row " + std::to_string(n), "positive integers", e.what());
            continue;
        }
        for (int k = 0; k <= n; ++k) {
            const auto& v = row.values[static_cast<std::size_t>(k)];
            const auto& w = row.values[static_cast<std::size_t>(n - k)];
            r.check(v == w, [&] {
                return Discrepancy{"T(" + std::to_string(n) + "," + std::to_string(k) + ")", w.str(), v.str()};
            });
            if (n < static_cast<int>(printed.size())) {
                const Rational p(printed[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
                r.check(v == p, [&] {
                    return Discrepancy{"T(" + std::to_string(n) + "," + std::to_string(k) + ")", p.str(), v.str()};
                });
            }
        }
    }
    return r;
}

}  // namespace dessin::airy

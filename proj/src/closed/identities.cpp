#include <stdexcept>

#include "dessin/algebra/series_report.hpp"
#include "dessin/closed/closed_forms.hpp"

namespace dessin::closed {

using algebra::binomial;

namespace {

const algebra::AlphabetPtr& uv_alphabet() {
    static const auto a = algebra::make_alphabet({"u", "v"});
    return a;
}

Poly uv_monomial(int i, int j, const Rational& c) { return Poly::monomial(uv_alphabet(), {i, j}, c); }

/// 1 − 2(u+v)z + (u−v)²z².
Series delta_z(int order) {
    const auto& a = uv_alphabet();
    const Poly u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    return Series::from_coefficients("z", a, 0,
                                     {Poly::constant(a, Rational(1)), (u + v) * Rational(-2), (u - v) * (u - v)},
                                     order);
}

Series from_terms(const std::string& var, const algebra::AlphabetPtr& a, std::map<int, Poly> terms, int order) {
    Series out(var, a, order);
    for (auto& [e, c] : terms)
        if (e <= order)
            out = out + Series::monomial(var, c, e);
    return out.truncated(order);
}

VerificationReport narayana_gf(int order) {
    VerificationReport r;
    const auto& a = uv_alphabet();
    const Poly u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    const Series lhs = (Series::from_coefficients("z", a, 0, {Poly::constant(a, Rational(1)), -(u + v)}, order) -
                        delta_z(order).sqrt()) *
                       Rational(1, 2);
    std::map<int, Poly> terms;
    for (int n = 1; n + 1 <= order; ++n) {
        Poly c(a);
        for (int k = 1; k <= n; ++k)
            c += uv_monomial(n + 1 - k, k, binomial(n, k) * binomial(n, k - 1) / Rational(n));
        terms.emplace(n + 1, c);
    }
    algebra::compare_series(r, from_terms("z", a, terms, order), lhs, order, "narayana series");
    return r;
}

VerificationReport a132812_gf(int order) {
    VerificationReport r;
    const auto& a = uv_alphabet();
    const Poly u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    const Series linear = Series::from_coefficients("z", a, 0, {Poly::constant(a, Rational(1)), -(u + v)}, order);
    const Series lhs = (linear * delta_z(order).power(Rational(-1, 2)) -
                        Series::constant("z", Poly::constant(a, Rational(1)))) *
                       Rational(1, 2);
    std::map<int, Poly> terms;
    for (int n = 1; n + 1 <= order; ++n) {
        Poly c(a);
        for (int k = 1; k <= n; ++k)
            c += uv_monomial(n + 1 - k, k, binomial(n, k) * binomial(n, k - 1));
        terms.emplace(n + 1, c);
    }
    algebra::compare_series(r, from_terms("z", a, terms, order), lhs, order, "A132812 series");
    return r;
}

Series central_binomial_series(int order) {
    const auto& a = uv_alphabet();
    std::map<int, Poly> terms;
    for (int n = 0; n <= order; ++n) {
        Poly c(a);
        for (int k = 0; k <= n; ++k)
            c += uv_monomial(n - k, k, binomial(n, k) * binomial(n, k));
        terms.emplace(n, c);
    }
    return from_terms("z", a, terms, order);
}

VerificationReport central_binomial_gf(int order) {
    VerificationReport r;
    algebra::compare_series(r, central_binomial_series(order), delta_z(order).power(Rational(-1, 2)), order,
                            "central binomial series");
    return r;
}

VerificationReport typeB_gf(int order) {
    VerificationReport r;
    // rows N(B_n, q) = Σ C(n,k)² q^k
    const auto qa = algebra::make_alphabet({"q"});
    for (int n = 0; n <= order; ++n) {
        Poly row(qa);
        for (int k = 0; k <= n; ++k)
            row.add_term({k}, binomial(n, k) * binomial(n, k));
        const Rational at_one = row.substitute("q", Poly::constant(qa, Rational(1))).constant_term();
        r.check(at_one == binomial(2 * n, n), [&] {
            return Discrepancy{"N(B_" + std::to_string(n) + ",1)", binomial(2 * n, n).str(), at_one.str()};
        });
    }
    // Σ x^n Σ C(n,k)² y^k = (1 − 2x − 2xy + x² − 2x²y + x²y²)^(−1/2)
    const auto ya = algebra::make_alphabet({"y"});
    const Poly y = Poly::variable(ya, "y");
    const Poly one = Poly::constant(ya, Rational(1));
    const Series quad = Series::from_coefficients(
        "x", ya, 0, {one, (one + y) * Rational(-2), one - y * Rational(2) + y * y}, order);
    std::map<int, Poly> terms;
    for (int n = 0; n <= order; ++n) {
        Poly c(ya);
        for (int k = 0; k <= n; ++k)
            c.add_term({k}, binomial(n, k) * binomial(n, k));
        terms.emplace(n, c);
    }
    algebra::compare_series(r, from_terms("x", ya, terms, order), quad.power(Rational(-1, 2)), order,
                            "bivariate type B series");
    // Σ s^n y^(n+1) Σ C(n,k)² u^(n−k) v^k = y·Δ(y)^(−1/2), y = 1/x
    const auto& a = suv_alphabet();
    std::map<int, Poly> dessin_terms;
    for (int n = 0; n + 1 <= order; ++n) {
        Poly c(a);
        for (int k = 0; k <= n; ++k)
            c.add_term({n, n - k, k}, binomial(n, k) * binomial(n, k));
        dessin_terms.emplace(n + 1, c);
    }
    const Series closed = delta_series("y", order).power(Rational(-1, 2)).shifted(1).truncated(order);
    algebra::compare_series(r, from_terms("y", a, dessin_terms, order), closed, order, "type B spectral series");
    return r;
}

VerificationReport typeD_gf(int order) {
    VerificationReport r;
    const auto& a = suv_alphabet();
    const Poly s = Poly::variable(a, "s"), u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    const Poly one = Poly::constant(a, Rational(1));
    // (1) Σ s^n y^(n+1) N(D_n; u, v), with the n = 0 term taken as 1
    std::map<int, Poly> d_terms;
    for (int n = 0; n + 1 <= order; ++n) {
        Poly c(a);
        if (n == 0) {
            c = one;
        } else {
            c.add_term({n, n, 0}, Rational(1));
            c.add_term({n, 0, n}, Rational(1));
            for (int k = 1; k <= n - 1; ++k)
                c.add_term({n, n - k, k}, binomial(n, k) * binomial(n, k) -
                                              Rational(n, n - 1) * binomial(n - 1, k - 1) * binomial(n - 1, k));
        }
        d_terms.emplace(n + 1, c);
    }
    const Series series_d = from_terms("y", a, d_terms, order);
    // (2) type B series − Σ_{n≥1} (n+1) s^(n+1) y^(n+2) (1/n) Σ C(n,k−1) C(n,k) u^(n+1−k) v^k
    std::map<int, Poly> b_terms, n_terms;
    for (int n = 0; n + 1 <= order; ++n) {
        Poly c(a);
        for (int k = 0; k <= n; ++k)
            c.add_term({n, n - k, k}, binomial(n, k) * binomial(n, k));
        b_terms.emplace(n + 1, c);
    }
    for (int n = 1; n + 2 <= order; ++n) {
        Poly c(a);
        for (int k = 1; k <= n; ++k)
            c.add_term({n + 1, n + 1 - k, k}, Rational(n + 1) * binomial(n, k - 1) * binomial(n, k) / Rational(n));
        n_terms.emplace(n + 2, c);
    }
    const Series series_split = from_terms("y", a, b_terms, order) - from_terms("y", a, n_terms, order);
    // (3) y/√Δ + s·d/dx G01, with d/dx = −y²·d/dy
    const Series inv_root = delta_series("y", order).power(Rational(-1, 2));
    const Series g01 = g01_series(order + 1);
    const Series series_deriv =
        inv_root.shifted(1).truncated(order) - (g01.derivative().shifted(2) * s).truncated(order);
    // (4) s(u+v)y²/2 + y(2 − s(u+v)y + s²(u−v)²y²)/(2√Δ)
    const Series numer =
        Series::from_coefficients("y", a, 0, {one * Rational(2), -(s * (u + v)), s * s * (u - v) * (u - v)}, order);
    const Series closed = (Series::monomial("y", s * (u + v) * Rational(1, 2), 2) +
                           (numer * inv_root).shifted(1) * Rational(1, 2))
                              .truncated(order);
    algebra::compare_series(r, series_d, series_split, order, "type D rows vs split");
    algebra::compare_series(r, series_split, series_deriv, order, "split vs derivative form");
    algebra::compare_series(r, series_deriv, closed, order, "derivative form vs closed form");
    return r;
}

}  // namespace

std::optional<IdentityName> parse_identity(std::string_view name) {
    for (auto id : all_identities())
        if (to_string(id) == name)
            return id;
    return std::nullopt;
}

std::string to_string(IdentityName name) {
    switch (name) {
    case IdentityName::narayana_gf:
        return "narayana-gf";
    case IdentityName::a132812_gf:
        return "a132812-gf";
    case IdentityName::central_binomial_gf:
        return "central-binomial-gf";
    case IdentityName::typeB_gf:
        return "typeB-gf";
    case IdentityName::typeD_gf:
        return "typeD-gf";
    }
    return "?";
}

const std::vector<IdentityName>& all_identities() {
    static const std::vector<IdentityName> names{IdentityName::narayana_gf, IdentityName::a132812_gf,
                                                 IdentityName::central_binomial_gf, IdentityName::typeB_gf,
                                                 IdentityName::typeD_gf};
    return names;
}

VerificationReport gf_identity_check(IdentityName name, int order) {
    if (order < 2)
        throw std::invalid_argument("gf_identity_check: order must be at least 2");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    switch (name) {
    case IdentityName::narayana_gf:
        r = narayana_gf(order);
        break;
    case IdentityName::a132812_gf:
        r = a132812_gf(order);
        break;
    case IdentityName::central_binomial_gf:
        r = central_binomial_gf(order);
        break;
    case IdentityName::typeB_gf:
        r = typeB_gf(order);
        break;
    case IdentityName::typeD_gf:
        r = typeD_gf(order);
        break;
    }
    r.suite = "identity";
    r.name = to_string(name);
    r.order = order;
    r.parameters = {{"name", r.name}, {"order", order}};
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace dessin::closed

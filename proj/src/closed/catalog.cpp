#include <stdexcept>

#include "dessin/algebra/series_report.hpp"
#include "dessin/closed/closed_forms.hpp"

namespace dessin::closed {

using algebra::binomial;
using algebra::double_factorial_odd;
using algebra::factorial;

namespace {

Series sum_terms(const std::string& var, const algebra::AlphabetPtr& a, const std::map<int, Poly>& terms,
                 int order) {
    Series out(var, a, order);
    for (const auto& [e, c] : terms)
        if (e <= order)
            out = out + Series::monomial(var, c.embed(a), e);
    return out.truncated(order);
}

void add(std::map<int, Poly>& terms, const algebra::AlphabetPtr& a, int e, const Poly& c) {
    auto it = terms.try_emplace(e, a).first;
    it->second += c;
}

/// (2m+1)!/(m!)²
Rational odd_central(int m) { return factorial(2 * m + 1) / (factorial(m) * factorial(m)); }

/// One-variable square root (1 − c·t)^(1/2) with c a coefficient polynomial.
Series unit_linear(const std::string& var, const Poly& c, int order) {
    const auto& a = c.alphabet_ptr();
    return Series::from_coefficients(var, a, 0, {Poly::constant(a, Rational(1)), -c}, order);
}

VerificationReport wk_one(int order) {
    // G = z − g0/z − z(1 − 2g0/z²)^(1/2) in w = 1/z, as a series in g0
    VerificationReport r;
    const auto a = algebra::make_alphabet({"w"});
    const Poly w = Poly::variable(a, "w");
    const Series root = unit_linear("g0", w * w * Rational(2), order).sqrt();
    const Series g = Series::constant("g0", w.pow(-1)) - Series::monomial("g0", w, 1) - root * w.pow(-1);
    std::map<int, Poly> law;
    for (int n = 0; n + 2 <= order; ++n) {
        const Rational c = double_factorial_odd(n) / factorial(n + 2);
        const Rational catalan_form = binomial(2 * n + 2, n + 1) / Rational(n + 2) / Rational(2).pow(n + 1);
        r.check(c == catalan_form, [&] {
            return Discrepancy{"n=" + std::to_string(n) + " double-factorial vs Catalan", c.str(), catalan_form.str()};
        });
        add(law, a, n + 2, w.pow(2 * n + 3) * c);
    }
    algebra::compare_series(r, sum_terms("g0", a, law, order), g, order, "WK one-point");
    return r;
}

VerificationReport wk_two(int order) {
    // (w1²+w2²)(R1R2 − 1) − 4g0 w1²w2² R1R2 = (w2²−w1²)² Σ c_kl g0^(k+l+1) w1^2k w2^2l
    VerificationReport r;
    const auto a = algebra::make_alphabet({"w1", "w2"});
    const Poly w1 = Poly::variable(a, "w1"), w2 = Poly::variable(a, "w2");
    const Series R1 = unit_linear("g0", w1 * w1 * Rational(2), order).power(Rational(-1, 2));
    const Series R2 = unit_linear("g0", w2 * w2 * Rational(2), order).power(Rational(-1, 2));
    const Series one = Series::constant("g0", Poly::constant(a, Rational(1)));
    const Series R = R1 * R2;
    const Series lhs = (R - one) * (w1 * w1 + w2 * w2) - (R * (w1 * w1 * w2 * w2 * Rational(4))).shifted(1);
    std::map<int, Poly> law;
    for (int k = 0; k < order; ++k)
        for (int l = 0; k + l + 1 <= order; ++l) {
            const Rational c = double_factorial_odd(k) * double_factorial_odd(l) /
                               (factorial(k) * factorial(l) * Rational(k + l + 1));
            add(law, a, k + l + 1, w1.pow(2 * k) * w2.pow(2 * l) * c);
        }
    const Poly gap = (w2 * w2 - w1 * w1).pow(2);
    algebra::compare_series(r, sum_terms("g0", a, law, order) * gap, lhs.truncated(order), order, "WK two-point");
    return r;
}

VerificationReport hermitian_one(int order) {
    // G = (x − √(x²−4t))/2 = (1 − (1 − 4t w²)^(1/2)) / (2w), w = 1/x
    VerificationReport r;
    const auto a = algebra::make_alphabet({"w"});
    const Poly w = Poly::variable(a, "w");
    const Series root = unit_linear("t", w * w * Rational(4), order).sqrt();
    const Series g = (Series::constant("t", Poly::constant(a, Rational(1))) - root) * (w.pow(-1) * Rational(1, 2));
    for (int e = 0; e <= order; ++e) {
        const Poly c = g.coefficient(e);
        // ⟨p_m⟩ sits at w^(m+1); only m = 2(e−1) may appear, with C_{e−1}
        for (const auto& [exps, x] : c.terms()) {
            const int m = exps[0] - 1;
            const bool ok = e >= 1 && m == 2 * (e - 1) && x == catalan(e - 1);
            r.check(ok, [&] {
                return Discrepancy{"t^" + std::to_string(e) + " x^-" + std::to_string(m + 1),
                                   m % 2 ? "0" : catalan(m / 2).str(), x.str()};
            });
        }
        if (e >= 1) {
            const Rational got = c.coefficient({2 * e - 1});
            r.check(got == catalan(e - 1), [&] {
                return Discrepancy{"<p_" + std::to_string(2 * e - 2) + ">", catalan(e - 1).str(), got.str()};
            });
        }
    }
    return r;
}

VerificationReport hermitian_two(int order) {
    // 2(y1−y2)² G02 = y1²y2² [(1 − 4t y1 y2)/√((1−4t y1²)(1−4t y2²)) − 1]
    VerificationReport r;
    const auto a = algebra::make_alphabet({"y1", "y2"});
    const Poly y1 = Poly::variable(a, "y1"), y2 = Poly::variable(a, "y2");
    const Series inv = (unit_linear("t", y1 * y1 * Rational(4), order) * unit_linear("t", y2 * y2 * Rational(4), order))
                           .power(Rational(-1, 2));
    const Series numer = unit_linear("t", y1 * y2 * Rational(4), order);
    const Series lhs =
        (numer * inv - Series::constant("t", Poly::constant(a, Rational(1)))) * (y1 * y1 * y2 * y2);
    std::map<int, Poly> law;
    for (int m = 0; m <= order; ++m)
        for (int n = 0; m + n + 1 <= order; ++n) {
            const Rational c = odd_central(m) * odd_central(n);
            add(law, a, m + n + 1, y1.pow(2 * m + 2) * y2.pow(2 * n + 2) * (c / Rational(m + n + 1)));
            if (m + n + 2 <= order)
                add(law, a, m + n + 2, y1.pow(2 * m + 3) * y2.pow(2 * n + 3) * (c * Rational(4) / Rational(m + n + 2)));
        }
    const Poly gap = (y1 - y2).pow(2) * Rational(2);
    algebra::compare_series(r, sum_terms("t", a, law, order) * gap, lhs.truncated(order), order, "Hermitian two-point");
    return r;
}

VerificationReport even_one(int order) {
    // G = (1 − 2t w − (1 − 4t w)^(1/2)) / 4
    VerificationReport r;
    const auto a = algebra::make_alphabet({"w"});
    const Poly w = Poly::variable(a, "w");
    const Series g = (unit_linear("t", w * Rational(2), order) - unit_linear("t", w * Rational(4), order).sqrt()) *
                     Rational(1, 4);
    std::map<int, Poly> law, double_law;
    for (int n = 2; n <= order; ++n) {
        add(law, a, n, w.pow(n) * (factorial(2 * n - 2) / (factorial(n - 1) * factorial(n)) * Rational(1, 2)));
        add(double_law, a, n,
            w.pow(n) * (double_factorial_odd(n - 2) / factorial(n) * Rational(2).pow(n) * Rational(1, 4)));
    }
    algebra::compare_series(r, sum_terms("t", a, law, order), g, order, "even-coupling one-point");
    algebra::compare_series(r, sum_terms("t", a, double_law, order), g, order, "even-coupling (2n-3)!! form");
    return r;
}

VerificationReport even_two(int order) {
    // 2(y1−y2)² G02 = y1²y2² [(1 − 2t y1 − 2t y2)/√((1−4t y1)(1−4t y2)) − 1]
    VerificationReport r;
    const auto a = algebra::make_alphabet({"y1", "y2"});
    const Poly y1 = Poly::variable(a, "y1"), y2 = Poly::variable(a, "y2");
    const Series inv =
        (unit_linear("t", y1 * Rational(4), order) * unit_linear("t", y2 * Rational(4), order)).power(Rational(-1, 2));
    const Series numer = unit_linear("t", (y1 + y2) * Rational(2), order);
    const Series lhs =
        (numer * inv - Series::constant("t", Poly::constant(a, Rational(1)))) * (y1 * y1 * y2 * y2);
    const Poly gap = (y1 - y2).pow(2) * Rational(2);
    std::map<int, Poly> series_law, correlator_law;
    for (int l = 2; l <= order; ++l)
        for (int m = 0; m <= l - 2; ++m) {
            const int n = l - 2 - m;
            add(series_law, a, l,
                y1.pow(m + 2) * y2.pow(n + 2) * (odd_central(m) * odd_central(n) * Rational(2) / Rational(l)));
        }
    // ⟨p_2m p_2n⟩ = (1/2)·(2m)!/((m−1)!m!)·(2n)!/((n−1)!n!)·t^(m+n)/(m+n), placed at y1^(m+1) y2^(n+1)
    auto d = [](int m) { return factorial(2 * m) / (factorial(m - 1) * factorial(m)); };
    for (int m = 1; m < order; ++m)
        for (int n = 1; m + n <= order; ++n)
            add(correlator_law, a, m + n,
                y1.pow(m + 1) * y2.pow(n + 1) * (d(m) * d(n) * Rational(1, 2) / Rational(m + n)));
    algebra::compare_series(r, sum_terms("t", a, series_law, order) * gap, lhs.truncated(order), order,
                            "even-coupling two-point series");
    algebra::compare_series(r, sum_terms("t", a, correlator_law, order) * gap, lhs.truncated(order), order,
                            "even-coupling two-point correlators");
    return r;
}

VerificationReport dessin_one(int order) {
    VerificationReport r;
    const NPointSeries g = dessin_closed_series(ClosedForm::G01, order);
    for (int n = 1; n + 1 <= order; ++n) {
        Poly law(suv_alphabet());
        for (int k = 1; k <= n; ++k)
            law.add_term({n, n + 1 - k, k}, narayana(n, k));
        const Poly got = g.coefficient({n});
        r.check(got == law, [&] { return Discrepancy{"x^-" + std::to_string(n + 1), law.str(), got.str()}; });
    }
    return r;
}

VerificationReport dessin_two(int order) {
    // rows a1 = 1 and a1 = 2 of G02 against their Narayana-type laws
    VerificationReport r;
    const NPointSeries g = dessin_closed_series(ClosedForm::G02, order);
    if (auto bad = g.symmetry_defect())
        r.fail("symmetry " + tuple_string(*bad), "symmetric", "asymmetric");
    for (int n = 1; n + 3 <= order; ++n) {
        Poly law(suv_alphabet());
        for (int k = 1; k <= n; ++k)
            law.add_term({n + 1, n + 1 - k, k}, binomial(n, k) * binomial(n, k - 1));
        const Poly got = g.coefficient({1, n});
        r.check(got == law, [&] { return Discrepancy{tuple_string({1, n}), law.str(), got.str()}; });
    }
    for (int n = 2; n + 3 <= order; ++n) {  // x2^-n term ↔ a2 = n−1
        Poly law(suv_alphabet());
        for (int k = 1; k <= n; ++k)
            law.add_term({n + 1, n + 1 - k, k},
                         (binomial(n, k) * binomial(n, k - 1) - binomial(n - 1, k - 1) * binomial(n - 1, k - 1)) *
                             Rational(2));
        const Poly got = g.coefficient({2, n - 1});
        r.check(got == law, [&] { return Discrepancy{tuple_string({2, n - 1}), law.str(), got.str()}; });
    }
    return r;
}

VerificationReport dessin_three(int order) {
    VerificationReport r;
    const NPointSeries g = dessin_closed_series(ClosedForm::G03, order);
    if (auto bad = g.symmetry_defect())
        r.fail("symmetry " + tuple_string(*bad), "symmetric", "asymmetric");
    const Poly lead = Poly::monomial(suv_alphabet(), {3, 1, 1}, Rational(2));
    const Poly got = g.coefficient({1, 1, 1});
    r.check(got == lead, [&] { return Discrepancy{"(1,1,1)", lead.str(), got.str()}; });
    return r;
}

VerificationReport dessin_g11(int order) {
    // printed terms, each carrying the factor uv of the closed form
    VerificationReport r;
    const NPointSeries g = dessin_closed_series(ClosedForm::G11, order);
    const auto& a = suv_alphabet();
    const Poly s = Poly::variable(a, "s"), u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    const std::vector<Poly> printed{
        s.pow(3),
        (u + v) * s.pow(4) * Rational(5),
        (u * u * Rational(15) + u * v * Rational(40) + v * v * Rational(15)) * s.pow(5),
        (u + v) * (u * u + u * v * Rational(4) + v * v) * s.pow(6) * Rational(35),
    };
    for (std::size_t i = 0; i < printed.size() && static_cast<int>(i) + 4 <= order; ++i) {
        const Poly want = printed[i] * u * v;
        const Poly got = g.coefficient({static_cast<int>(i) + 3});
        r.check(got == want, [&] { return Discrepancy{"x^-" + std::to_string(i + 4), want.str(), got.str()}; });
    }
    return r;
}

}  // namespace

std::optional<CatalogKey> parse_catalog_key(std::string_view text) {
    for (const auto& key : all_catalog_keys())
        if (to_string(key) == text)
            return key;
    return std::nullopt;
}

std::string to_string(const CatalogKey& key) {
    std::string theory;
    switch (key.theory) {
    case Theory::WK:
        theory = "WK";
        break;
    case Theory::hermitian:
        theory = "hermitian";
        break;
    case Theory::even_coupling:
        theory = "even-coupling";
        break;
    case Theory::dessin:
        theory = "dessin";
        break;
    }
    std::string points;
    switch (key.points) {
    case PointCount::one:
        points = "one";
        break;
    case PointCount::two:
        points = "two";
        break;
    case PointCount::three:
        points = "three";
        break;
    case PointCount::one_genus_one:
        points = "one-genus-one";
        break;
    }
    return theory + "/" + points;
}

const std::vector<CatalogKey>& all_catalog_keys() {
    static const std::vector<CatalogKey> keys{
        {Theory::WK, PointCount::one},           {Theory::WK, PointCount::two},
        {Theory::hermitian, PointCount::one},    {Theory::hermitian, PointCount::two},
        {Theory::even_coupling, PointCount::one}, {Theory::even_coupling, PointCount::two},
        {Theory::dessin, PointCount::one},       {Theory::dessin, PointCount::two},
        {Theory::dessin, PointCount::three},     {Theory::dessin, PointCount::one_genus_one},
    };
    return keys;
}

VerificationReport catalog_check(const CatalogKey& key, int order) {
    if (order < 1)
        throw std::invalid_argument("catalog_check: order must be positive");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    switch (key.theory) {
    case Theory::WK:
        if (key.points == PointCount::one)
            r = wk_one(order);
        else if (key.points == PointCount::two)
            r = wk_two(order);
        else
            throw std::invalid_argument("catalog: no closed form for " + to_string(key));
        break;
    case Theory::hermitian:
        if (key.points == PointCount::one)
            r = hermitian_one(order);
        else if (key.points == PointCount::two)
            r = hermitian_two(order);
        else
            throw std::invalid_argument("catalog: no closed form for " + to_string(key));
        break;
    case Theory::even_coupling:
        if (key.points == PointCount::one)
            r = even_one(order);
        else if (key.points == PointCount::two)
            r = even_two(order);
        else
            throw std::invalid_argument("catalog: no closed form for " + to_string(key));
        break;
    case Theory::dessin:
        switch (key.points) {
        case PointCount::one:
            r = dessin_one(order);
            break;
        case PointCount::two:
            r = dessin_two(order);
            break;
        case PointCount::three:
            r = dessin_three(order);
            break;
        case PointCount::one_genus_one:
            r = dessin_g11(order);
            break;
        }
        break;
    }
    r.suite = "catalog";
    r.name = to_string(key);
    r.order = order;
    r.parameters = {{"key", r.name}, {"order", order}};
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace dessin::closed

#include <algorithm>

#include "dessin/eo/eo.hpp"

namespace dessin::eo {

using algebra::Rational;

std::vector<std::pair<int, int>> stable_range(int max_chi) {
    std::vector<std::pair<int, int>> out;
    for (int chi = 1; chi <= max_chi; ++chi)
        for (int g = 0; 2 * g - 1 <= chi; ++g) {
            const int n = chi + 2 - 2 * g;
            if (n >= 1)
                out.emplace_back(g, n);
        }
    return out;
}

namespace {

std::string label(int g, int n) { return "w_{" + std::to_string(g) + "," + std::to_string(n) + "}"; }

VerificationReport make_report(std::string name, int max_chi) {
    VerificationReport r;
    r.suite = "eo";
    r.name = std::move(name);
    r.parameters = {{"max_chi", max_chi}};
    return r;
}

}  // namespace

VerificationReport evenness_suite(int max_chi) {
    auto r = make_report("evenness", max_chi);
    ReportTimer timer(r);
    for (auto [g, n] : stable_range(max_chi)) {
        const Poly& w = eo_omega(g, n).coeff;
        for (const auto& [e, c] : w.terms())
            for (int i = 0; i < n; ++i) {
                const int k = e[static_cast<std::size_t>(i) + 2];
                r.check(k % 2 == 0, [&] {
                    return Discrepancy{label(g, n) + " z" + std::to_string(i + 1), "even exponent",
                                       std::to_string(k)};
                });
            }
    }
    return r;
}

VerificationReport symmetry_suite(int max_chi) {
    auto r = make_report("symmetry", max_chi);
    ReportTimer timer(r);
    for (auto [g, n] : stable_range(max_chi)) {
        const Poly& w = eo_omega(g, n).coeff;
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            perm[static_cast<std::size_t>(i)] = i + 1;
        // every permutation of the slot exponents
        do {
            Poly p(w.alphabet_ptr());
            for (const auto& [e, c] : w.terms()) {
                algebra::Exponents f(e);
                for (int i = 0; i < n; ++i)
                    f[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) + 1] = e[static_cast<std::size_t>(i) + 2];
                p.add_term(f, c);
            }
            r.check(p == w, [&] { return Discrepancy{label(g, n) + " " + tuple_string(perm), w.str(), p.str()}; });
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return r;
}

VerificationReport s_freeness_suite(int max_chi) {
    auto r = make_report("s-freeness", max_chi);
    ReportTimer timer(r);
    for (auto [g, n] : stable_range(max_chi)) {
        const Poly& w = eo_omega(g, n).coeff;
        const bool free = !algebra::symbol_index(w.alphabet(), "s") || (w.degree("s") == 0 && w.min_degree("s") == 0);
        r.check(free, [&] { return Discrepancy{label(g, n), "no s", w.str()}; });
    }
    return r;
}

VerificationReport chart_consistency_suite(int max_chi) {
    auto r = make_report("chart-consistency", max_chi);
    ReportTimer timer(r);
    EOEngine swapped(SpectralCurveData::dessin(true));
    for (auto [g, n] : stable_range(max_chi)) {
        Poly expected = eo_omega(g, n).coeff;
        for (int i = 1; i <= n; ++i) {
            const std::string zi = "z" + std::to_string(i);
            expected = expected.transform_symbol(zi, -1, 1) * Poly::variable(expected.alphabet_ptr(), zi, -2);
        }
        if (n % 2 != 0)
            expected = -expected;
        const Poly& actual = swapped.omega(g, n).coeff;
        r.check(expected == actual, [&] { return Discrepancy{label(g, n), expected.str(), actual.str()}; });
    }
    return r;
}

VerificationReport curve_identity_check(int order) {
    VerificationReport r;
    r.suite = "eo";
    r.name = "curve-identity";
    r.parameters = {{"order", order}};
    r.order = order;
    ReportTimer timer(r);
    // α and β as independent symbols keep 1/(αz²−β) Laurent at both charts
    const auto alpha = algebra::make_alphabet({"s", "al", "be"});
    const Poly s = Poly::variable(alpha, "s"), al = Poly::variable(alpha, "al"), be = Poly::variable(alpha, "be");
    const Poly one = Poly::constant(alpha, Rational(1));
    for (Chart chart : {Chart::zero, Chart::infinity}) {
        const std::string var = chart == Chart::zero ? "z" : "t";
        auto mono = [&](const Poly& c, int k) { return Series::monomial(var, c, k); };
        const Series geo = (mono(one, 0) - mono(one, 2)).inverse(order);
        // zero: x = s(αz²−β)/(z²−1), y = −(α−β)z/(2s(αz²−β)); infinity: z = 1/t
        const Series x = chart == Chart::zero ? -Series::multiply(mono(s * al, 2) - mono(s * be, 0), geo, order)
                                              : Series::multiply(mono(s * al, 0) - mono(s * be, 2), geo, order);
        const Series front = chart == Chart::zero ? mono(al, 2) - mono(be, 0) : mono(al, 0) - mono(be, 2);
        const Poly scale = (al - be) * (s * Rational(2)).inverse() * Rational(-1);
        const Series y = Series::multiply(mono(scale, 1), front.inverse(order), order);
        const Series lhs = Series::multiply(y * y, x * x, order) * (s * s * Rational(4));
        const Series rhs = x * x - x * (s * (al + be)) + Series::constant(var, s * s * al * be, order);
        const Series diff = (lhs - rhs).truncated(order);
        for (int k = 0; k <= order; ++k) {
            const Poly c = diff.coefficient(k);
            r.check(c.is_zero(), [&] { return Discrepancy{to_string(chart) + " " + var + "^" + std::to_string(k), "0", c.str()}; });
        }
        // σ: x even, y odd
        for (const auto& [k, c] : x.coefficients())
            r.check(k % 2 == 0, [&] { return Discrepancy{to_string(chart) + " x parity", "even", std::to_string(k)}; });
        for (const auto& [k, c] : y.coefficients())
            r.check(k % 2 != 0, [&] { return Discrepancy{to_string(chart) + " y parity", "odd", std::to_string(k)}; });
    }
    return r;
}

}  // namespace dessin::eo

#include <stdexcept>

#include "dessin/algebra/graded.hpp"
#include "dessin/closed/closed_forms.hpp"

namespace dessin::closed {

using algebra::binomial;
using algebra::Grading;

Rational narayana(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::out_of_range("narayana: need 1 ≤ k ≤ n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    return binomial(n, k) * binomial(n, k - 1) / Rational(n);
}

Poly narayana_poly(int n) {
    const auto q = algebra::make_alphabet({"q"});
    Poly out(q);
    for (int k = 1; k <= n; ++k)
        out.add_term({k}, narayana(n, k));
    return out;
}

Rational catalan(int n) {
    if (n < 0)
        throw std::out_of_range("catalan: negative index");
    return binomial(2 * n, n) / Rational(n + 1);
}

Series delta_series(const std::string& variable, int order) {
    const auto& a = suv_alphabet();
    const Poly s = Poly::variable(a, "s"), u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    return Series::from_coefficients(variable, a, 0,
                                     {Poly::constant(a, Rational(1)), s * (u + v) * Rational(-2),
                                      s * s * (u - v) * (u - v)},
                                     order);
}

Series g01_series(int order) {
    const auto& a = suv_alphabet();
    const Poly s = Poly::variable(a, "s"), u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    const Series linear = Series::from_coefficients("y", a, 0, {Poly::constant(a, Rational(1)), -(s * (u + v))},
                                                    order);
    const Series root = delta_series("y", order).sqrt();
    return (linear - root) * (Poly::variable(a, "s", -1) * Rational(1, 2));
}

std::optional<ClosedForm> parse_closed_form(std::string_view name) {
    if (name == "G01")
        return ClosedForm::G01;
    if (name == "G02")
        return ClosedForm::G02;
    if (name == "G03")
        return ClosedForm::G03;
    if (name == "G11")
        return ClosedForm::G11;
    return std::nullopt;
}

std::string to_string(ClosedForm f) {
    switch (f) {
    case ClosedForm::G01:
        return "G01";
    case ClosedForm::G02:
        return "G02";
    case ClosedForm::G03:
        return "G03";
    case ClosedForm::G11:
        return "G11";
    }
    return "?";
}

namespace {

algebra::AlphabetPtr graded_alphabet(const std::vector<std::string>& slots) {
    algebra::Alphabet names = *suv_alphabet();
    names.insert(names.end(), slots.begin(), slots.end());
    return algebra::make_alphabet(std::move(names));
}

NPointSeries closed_g02(int order) {
    // 2(y1−y2)²·G02 = y1²y2²·[N/√(Δ1Δ2) − 1]; the bracket is expanded to
    // degree order+2 and divided exactly by (y1−y2)².
    const std::vector<std::string> slots{"y1", "y2"};
    const Grading grading(graded_alphabet(slots), slots, order + 2);
    const auto& a = grading.alphabet();
    const Poly s = Poly::variable(a, "s"), u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    const Poly y1 = Poly::variable(a, "y1"), y2 = Poly::variable(a, "y2");
    const Poly one = Poly::constant(a, Rational(1));
    const Poly numer = one - s * (u + v) * (y1 + y2) + s * s * (u - v) * (u - v) * y1 * y2;
    const Poly r1 = grading.lift(delta_series("y1", order + 2).power(Rational(-1, 2)));
    const Poly r2 = grading.lift(delta_series("y2", order + 2).power(Rational(-1, 2)));
    const Poly bracket = grading.mul(grading.mul(numer, r1), r2) - one;
    const Poly rhs = grading.mul(y1 * y1 * y2 * y2, bracket);
    auto q = algebra::divide_by_difference(rhs, "y1", "y2");
    if (q)
        q = algebra::divide_by_difference(*q, "y1", "y2");
    if (!q)
        throw std::logic_error("G02 closed form: numerator not divisible by (y1-y2)^2");
    NPointSeries out = NPointSeries::from_polynomial(0, 2, order, *q * Rational(1, 2), slots);
    if (auto bad = out.symmetry_defect())
        throw std::logic_error("G02 closed form: asymmetric coefficient at " + tuple_string(*bad));
    return out;
}

NPointSeries closed_g03(int order) {
    const std::vector<std::string> slots{"y1", "y2", "y3"};
    const Grading grading(graded_alphabet(slots), slots, order);
    const auto& a = grading.alphabet();
    const Poly s = Poly::variable(a, "s"), u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    const Poly y1 = Poly::variable(a, "y1"), y2 = Poly::variable(a, "y2"), y3 = Poly::variable(a, "y3");
    const Poly one = Poly::constant(a, Rational(1));
    const Poly d2 = (u - v) * (u - v);
    Poly p = (one - d2 * s.pow(2) * (y1 * y2 + y2 * y3 + y3 * y1) + (u + v) * d2 * s.pow(3) * y1 * y2 * y3 *
                                                                            Rational(2)) *
             s.pow(3) * u * v * Rational(2);
    for (const auto& y : slots) {
        const Poly factor = Poly::variable(a, y, 2) *
                            grading.lift(delta_series(y, order).power(Rational(-3, 2)));
        p = grading.mul(p, factor);
    }
    return NPointSeries::from_polynomial(0, 3, order, p, slots);
}

NPointSeries closed_g11(int order) {
    const auto& a = suv_alphabet();
    const Poly lead = Poly::variable(a, "s", 3) * Poly::variable(a, "u") * Poly::variable(a, "v");
    const Series g = (delta_series("y", order).power(Rational(-5, 2)) * lead).shifted(4).truncated(order);
    NPointSeries out{1, 1, order, {}};
    for (const auto& [e, c] : g.coefficients())
        out.coefficients.emplace(std::vector<int>{e - 1}, c);
    return out;
}

}  // namespace

NPointSeries dessin_closed_series(ClosedForm which, int order) {
    switch (which) {
    case ClosedForm::G01: {
        const Series g = g01_series(order);
        NPointSeries out{0, 1, order, {}};
        for (const auto& [e, c] : g.coefficients()) {
            if (e < 2)
                throw std::logic_error("G01 closed form: unexpected term y^" + std::to_string(e));
            out.coefficients.emplace(std::vector<int>{e - 1}, c);
        }
        return out;
    }
    case ClosedForm::G02:
        return closed_g02(order);
    case ClosedForm::G03:
        return closed_g03(order);
    case ClosedForm::G11:
        return closed_g11(order);
    }
    throw std::invalid_argument("unknown closed form");
}

}  // namespace dessin::closed

#include <map>
#include <stdexcept>

#include "dessin/algebra/graded.hpp"
#include "dessin/eo/eo.hpp"

namespace dessin::eo {

using algebra::Exponents;
using algebra::Rational;

Series z_of_x_series(int order) {
    const auto alpha = algebra::make_alphabet({"s", "a", "b"});
    const auto curve = SpectralCurveData::dessin();
    const Poly s = Poly::variable(alpha, "s");
    const Poly one = Poly::constant(alpha, Rational(1));
    auto linear = [&](const Poly& c) {
        return Series::constant("y", one) - Series::monomial("y", s * c.embed(alpha), 1);
    };
    const Series ratio = Series::multiply(linear(curve.beta), linear(curve.alpha).inverse(order), order);
    return ratio.sqrt(order);
}

NPointSeries to_x_series(int g, int n, int order, EOEngine& engine) {
    if (order < 2 * n)
        throw std::invalid_argument("to_x_series: order " + std::to_string(order) + " below the leading degree " +
                                    std::to_string(2 * n));
    const Poly& w = engine.omega(g, n).coeff;
    const int slot_order = order - 2 * (n - 1);
    const Series z = z_of_x_series(slot_order);
    // dz/dx = −y²·dz/dy
    const Series dzdx = -z.derivative().shifted(2);

    const auto slots = slot_names(n, 1);
    algebra::Alphabet names{"s", "a", "b"};
    names.insert(names.end(), slots.begin(), slots.end());
    const algebra::Grading grading(algebra::make_alphabet(names), slots, order);
    const auto& out_alpha = grading.alphabet();

    std::map<int, Series> per_exponent;
    auto slot_factor = [&](int e, int slot) {
        auto it = per_exponent.find(e);
        if (it == per_exponent.end()) {
            const Series p = Series::multiply(z.power(Rational(e), slot_order), dzdx, slot_order);
            it = per_exponent.emplace(e, p).first;
        }
        return grading.truncate(it->second.to_polynomial().rescale_symbol("y", slots[slot], 1));
    };

    // group the terms of w by their z exponents
    std::map<Exponents, Poly> groups;
    const auto ab = algebra::make_alphabet({"a", "b"});
    for (const auto& [e, c] : w.terms()) {
        Exponents zs(e.begin() + 2, e.end());
        auto it = groups.try_emplace(zs, ab).first;
        it->second.add_term({e[0], e[1]}, c);
    }
    Poly total(out_alpha);
    for (const auto& [zs, coeff] : groups) {
        Poly product = Poly::constant(out_alpha, Rational(1));
        for (int i = 0; i < n; ++i)
            product = grading.mul(product, slot_factor(zs[static_cast<std::size_t>(i)], i));
        total += grading.mul(product, coeff);
    }

    auto in_u = total.contract_symbol("a", "u", 2);
    auto in_uv = in_u ? in_u->contract_symbol("b", "v", 2) : std::nullopt;
    if (!in_uv)
        throw std::logic_error("to_x_series: odd power of a or b survives in G_{" + std::to_string(g) + "," +
                               std::to_string(n) + "}");
    algebra::Alphabet target = *suv_alphabet();
    target.insert(target.end(), slots.begin(), slots.end());
    return NPointSeries::from_polynomial(g, n, order, in_uv->embed(algebra::make_alphabet(target)), slots);
}

NPointSeries to_x_series(int g, int n, int order) {
    static EOEngine engine;
    return to_x_series(g, n, order, engine);
}

VerificationReport verify_main_theorem(int g, int n, int order, virasoro::CorrelatorTable& table) {
    static EOEngine engine;
    VerificationReport r;
    r.suite = "main-theorem";
    r.name = "G_{" + std::to_string(g) + "," + std::to_string(n) + "}";
    r.parameters = {{"g", g}, {"n", n}, {"order", order}};
    r.order = order;
    ReportTimer timer(r);
    compare_series(virasoro::npoint_series(table, g, n, order), to_x_series(g, n, order, engine), r);
    return r;
}

VerificationReport verify_main_theorem(int g, int n, int order) {
    virasoro::CorrelatorTable table;
    return verify_main_theorem(g, n, order, table);
}

}  // namespace dessin::eo

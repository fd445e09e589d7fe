#include <optional>
#include <stdexcept>

#include "dessin/algebra/json_io.hpp"
#include "dessin/eo/eo.hpp"

namespace dessin::eo {

using algebra::AlphabetPtr;
using algebra::Exponents;
using algebra::Rational;

SpectralCurveData SpectralCurveData::dessin(bool swapped) {
    const auto ab = algebra::make_alphabet({"a", "b"});
    SpectralCurveData c;
    c.a = Poly::variable(ab, "a");
    c.b = Poly::variable(ab, "b") * Rational(swapped ? -1 : 1);
    c.alpha = (c.a - c.b).pow(2);
    c.beta = (c.a + c.b).pow(2);
    return c;
}

std::string to_string(Chart c) { return c == Chart::zero ? "zero" : "infinity"; }

AlphabetPtr form_alphabet(int n) {
    algebra::Alphabet names{"a", "b"};
    for (int i = 1; i <= n; ++i)
        names.push_back("z" + std::to_string(i));
    return algebra::make_alphabet(std::move(names));
}

nlohmann::json EOForm::to_json() const {
    return {{"g", g}, {"n", n}, {"form", algebra::to_json(coeff)}};
}

namespace {

std::string chart_variable(Chart c) { return c == Chart::zero ? "z" : "t"; }

/// Σ_{k=0..order} c_k·var^k with c_k = (k+1)·ratio^k·scale.
Series geometric_square(const std::string& var, const Poly& ratio, const Poly& scale, int order) {
    Series out(var, scale.alphabet_ptr(), order);
    Poly power = Poly::constant(scale.alphabet_ptr(), Rational(1));
    for (int k = 0; k <= order; ++k) {
        out = out + Series::monomial(var, power * scale * Rational(k + 1), k);
        power = power * ratio;
    }
    return out.truncated(order);
}

}  // namespace

Series BergmanKernel::expand(Chart chart, const std::string& spectator, int sign, const AlphabetPtr& coefficients,
                             int order) const {
    const Poly w = Poly::variable(coefficients, spectator);
    const Poly one = Poly::constant(coefficients, Rational(1));
    const std::string var = chart_variable(chart);
    if (order < 0)
        return Series(var, coefficients, order);
    // 1/(σz − w)² = Σ (k+1) σ^k w^(−k−2) z^k;  t^(−2)/(σ/t − w)² = Σ (k+1) (σw)^k t^k
    if (chart == Chart::zero)
        return geometric_square(var, w.inverse() * Rational(sign), w.pow(-2), order);
    return geometric_square(var, w * Rational(sign), one, order);
}

Series BergmanKernel::diagonal(Chart chart, const AlphabetPtr& coefficients) const {
    return Series::monomial(chart_variable(chart), Poly::constant(coefficients, Rational(1, 4)), -2);
}

BergmanKernel bergman_kernel() { return {}; }

Series recursion_kernel_expansion(Chart at, int pos_degree_bound, const SpectralCurveData& curve) {
    const auto alpha = form_alphabet(1);
    const std::string var = chart_variable(at);
    const Poly z1 = Poly::variable(alpha, "z1");
    const Poly al = curve.alpha.embed(alpha), be = curve.beta.embed(alpha);
    const Poly pre = ((al - be).pow(2) * Rational(2)).inverse();
    const Poly one = Poly::constant(alpha, Rational(1));
    auto mono = [&](const Poly& c, int k) { return Series::monomial(var, c, k); };
    // zero:     pre·(αz²−β)(1−z²)²·z^(−1)·Σ z1^(−2k−2) z^(2k)
    // infinity: pre·(α−βt²)(1−t²)²·t^(−1)·Σ z1^(2k) t^(2k)
    const Series square = (mono(one, 0) - mono(one, 2)) * (mono(one, 0) - mono(one, 2));
    const Series front = at == Chart::zero ? mono(al, 2) - mono(be, 0) : mono(al, 0) - mono(be, 2);
    const Series finite = (front * square * pre).shifted(-1);
    const int geo_order = pos_degree_bound + 1;
    Series geo(var, alpha, geo_order);
    const Poly step = at == Chart::zero ? z1.pow(-2) : z1.pow(2);
    Poly c = at == Chart::zero ? z1.pow(-2) : one;
    for (int k = 0; 2 * k <= geo_order; ++k) {
        geo = geo + mono(c, 2 * k);
        c = c * step;
    }
    return Series::multiply(finite, geo.truncated(geo_order), pos_degree_bound);
}

namespace {

/// Where one slot of a lower form goes inside the integrand.
struct Target {
    bool chart = false;  // the integration variable (with sign), else a spectator
    int sign = 1;
    std::string name;
};

/// A stable lower form evaluated at the targets, as an exact series in the
/// chart variable over `coefficients`; in the infinity chart each chart slot
/// contributes z = σ/t and a factor t^(−2).
Series place_form(const Poly& w, const std::vector<Target>& targets, Chart chart, const AlphabetPtr& coefficients) {
    const std::string var = chart_variable(chart);
    algebra::Alphabet names = *coefficients;
    names.push_back(var);
    const auto full = algebra::make_alphabet(std::move(names));
    const std::size_t vi = full->size() - 1;
    std::vector<std::size_t> index(targets.size());
    for (std::size_t k = 0; k < targets.size(); ++k)
        index[k] = targets[k].chart ? vi : *algebra::symbol_index(*full, targets[k].name);
    Poly out(full);
    Exponents f(full->size());
    for (const auto& [e, c] : w.terms()) {
        std::fill(f.begin(), f.end(), 0);
        f[0] = e[0];
        f[1] = e[1];
        bool negate = false;
        for (std::size_t k = 0; k < targets.size(); ++k) {
            const int x = e[k + 2];
            if (targets[k].sign < 0 && x % 2 != 0)
                negate = !negate;
            if (targets[k].chart && chart == Chart::infinity)
                f[vi] += -x - 2;
            else
                f[index[k]] += x;
        }
        out.add_term(f, negate ? -c : c);
    }
    return Series::from_polynomial(out, var);
}

/// A factor of one bracket term: exact, or a Bergman expansion built at the
/// order the term needs.
struct Factor {
    std::optional<Series> exact;
    std::string spectator;
    int sign = 1;

    int valuation() const { return exact ? exact->valuation() : 0; }
};

struct Term {
    std::vector<Factor> factors;
};

Series rebase(const Series& s, const AlphabetPtr& alpha) {
    Series out(s.variable(), alpha, s.order());
    for (const auto& [e, c] : s.coefficients())
        out = out + Series::monomial(s.variable(), c.embed(alpha), e);
    return out;
}

void check_even_symmetric(const Poly& w, int g, int n) {
    const std::string label = "w_{" + std::to_string(g) + "," + std::to_string(n) + "}";
    for (const auto& [e, c] : w.terms())
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i) + 2] % 2 != 0)
                throw std::logic_error("eo_omega: " + label + " has an odd exponent in z" + std::to_string(i + 1));
    for (int i = 1; i < n; ++i)
        if (w.swap_symbols("z" + std::to_string(i), "z" + std::to_string(i + 1)) != w)
            throw std::logic_error("eo_omega: " + label + " is not symmetric in z" + std::to_string(i) + ", z" +
                                   std::to_string(i + 1));
}

}  // namespace

EOEngine::EOEngine(SpectralCurveData curve) : curve_(std::move(curve)) {}

const EOForm& EOEngine::omega(int g, int n) {
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
        throw std::invalid_argument("eo_omega: (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                                    ") is not stable");
    std::lock_guard guard(lock_);
    const auto key = std::make_pair(g, n);
    if (auto it = forms_.find(key); it != forms_.end())
        return *it->second;
    Poly w = compute(g, n);
    check_even_symmetric(w, g, n);
    auto form = std::make_unique<EOForm>(EOForm{g, n, std::move(w)});
    return *forms_.emplace(key, std::move(form)).first->second;
}

Poly EOEngine::compute(int g, int n) {
    const auto alpha = form_alphabet(n);
    std::vector<std::string> rest;
    for (int i = 2; i <= n; ++i)
        rest.push_back("z" + std::to_string(i));
    const int m = n - 1;
    const BergmanKernel bergman;

    Poly total(alpha);
    for (Chart chart : {Chart::zero, Chart::infinity}) {
        std::vector<Term> terms;
        // w_{g−1,n+1}(z, −z, J)
        if (g >= 1) {
            Term t;
            if (g == 1 && m == 0) {
                t.factors.push_back({bergman.diagonal(chart, alpha), {}, 1});
            } else {
                std::vector<Target> targets{{true, 1, {}}, {true, -1, {}}};
                for (const auto& name : rest)
                    targets.push_back({false, 1, name});
                t.factors.push_back({place_form(omega(g - 1, n + 1).coeff, targets, chart, alpha), {}, 1});
            }
            terms.push_back(std::move(t));
        }
        // w_{g1}(z, I)·w_{g2}(−z, I′) without w_{0,1}
        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                std::vector<std::string> left, right;
                for (int i = 0; i < m; ++i)
                    ((mask >> i) & 1u ? left : right).push_back(rest[static_cast<std::size_t>(i)]);
                const int n1 = static_cast<int>(left.size()) + 1, n2 = static_cast<int>(right.size()) + 1;
                if ((g1 == 0 && n1 == 1) || (g2 == 0 && n2 == 1))
                    continue;
                Term t;
                for (auto [gi, ni, names, sign] : {std::tuple{g1, n1, &left, 1}, std::tuple{g2, n2, &right, -1}}) {
                    if (gi == 0 && ni == 2) {
                        t.factors.push_back({std::nullopt, names->front(), sign});
                        continue;
                    }
                    std::vector<Target> targets{{true, sign, {}}};
                    for (const auto& name : *names)
                        targets.push_back({false, 1, name});
                    t.factors.push_back({place_form(omega(gi, ni).coeff, targets, chart, alpha), {}, 1});
                }
                terms.push_back(std::move(t));
            }
        }

        // orders: every factor must reach −1 minus the other valuations
        int kernel_bound = -1;
        for (const auto& t : terms) {
            int sum = 0;
            for (const auto& f : t.factors)
                sum += f.valuation();
            kernel_bound = std::max(kernel_bound, -1 - sum);
        }
        const Series kernel_here = rebase(recursion_kernel_expansion(chart, kernel_bound, curve_), alpha);
        for (const auto& t : terms) {
            int sum = kernel_here.valuation();
            for (const auto& f : t.factors)
                sum += f.valuation();
            Series product = kernel_here;
            for (const auto& f : t.factors) {
                if (f.exact) {
                    product = product * *f.exact;
                } else {
                    const int need = -1 - (sum - f.valuation());
                    product = product * bergman.expand(chart, f.spectator, f.sign, alpha, need);
                }
            }
            total -= product.residue();
        }
    }
    return total;
}

const EOForm& eo_omega(int g, int n) {
    static EOEngine engine;
    return engine.omega(g, n);
}

}  // namespace dessin::eo

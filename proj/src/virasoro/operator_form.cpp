#include <map>
#include <stdexcept>

#include "dessin/algebra/graded.hpp"
#include "dessin/closed/closed_forms.hpp"
#include "dessin/virasoro/correlators.hpp"

namespace dessin::virasoro {

using algebra::Exponents;
using algebra::Grading;
using algebra::Rational;

namespace {

class OperatorAssembler {
public:
    explicit OperatorAssembler(int order) : order_(order) {}

    /// G_{g,m} through order_, from the closed forms for (0,2) and the
    /// operator form otherwise.
    const NPointSeries& series(int g, int m) {
        auto key = std::make_pair(g, m);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        NPointSeries value = (g == 0 && m == 2) ? closed::dessin_closed_series(closed::ClosedForm::G02, order_)
                                                : assemble(g, m - 1);
        return memo_.emplace(key, std::move(value)).first->second;
    }

    NPointSeries assemble(int g, int n) {
        if (2 * g - 2 + (n + 1) <= 0)
            throw std::invalid_argument("assemble_operator_form: (g, n+1) must be stable");
        const auto slots = slot_names(n + 1);
        algebra::Alphabet names = *suv_alphabet();
        names.insert(names.end(), slots.begin(), slots.end());
        names.push_back("ya");
        names.push_back("yb");
        const Grading grading(algebra::make_alphabet(names), slots, order_);
        const auto& alpha = grading.alphabet();

        Poly bracket(alpha);
        // Σ_j D_{x0,xj} G_{g,n}(x1..xn)
        if (n >= 1 && !(g == 0 && n == 1)) {
            const Poly lower = grading.truncate(series(g, n).to_polynomial(slot_names(n, 1)));
            for (int j = 1; j <= n; ++j)
                bracket += apply_d(lower, grading, j);
        }
        // E G_{g−1,n+2}(u, v, x1..xn)
        if (g >= 1) {
            std::vector<std::string> names2{"ya", "yb"};
            const auto rest = slot_names(n, 1);
            names2.insert(names2.end(), rest.begin(), rest.end());
            bracket += diagonal(series(g - 1, n + 2).to_polynomial(names2), grading);
        }
        // Σ′ E(G_{g1}(u, x_I1)·G_{g2}(v, x_I2)), no G_{0,1} factors
        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<std::string> left{"ya"}, right{"yb"};
                for (int i = 0; i < n; ++i)
                    ((mask >> i) & 1u ? left : right).push_back("y" + std::to_string(i + 1));
                const int m1 = static_cast<int>(left.size()), m2 = static_cast<int>(right.size());
                if ((g1 == 0 && m1 == 1) || (g2 == 0 && m2 == 1))
                    continue;
                const Poly f1 = diagonal(series(g1, m1).to_polynomial(left), grading);
                const Poly f2 = diagonal(series(g2, m2).to_polynomial(right), grading);
                bracket += grading.mul(f1, f2);
            }
        }
        const Poly prefactor =
            grading.lift(closed::delta_series("y0", order_).power(Rational(-1, 2))) * Poly::variable(alpha, "s");
        const Poly total = grading.mul(prefactor, bracket);
        return NPointSeries::from_polynomial(g, n + 1, order_, total, slots);
    }

private:
    /// x_j^(−l−1) ↦ Σ_{a=1..l} a·x_j^(−a−1)·x0^(−(l−a+2)), in y = 1/x.
    static Poly apply_d(const Poly& p, const Grading& grading, int j) {
        const auto& alpha = grading.alphabet();
        const auto yj = *algebra::symbol_index(*alpha, "y" + std::to_string(j));
        const auto y0 = *algebra::symbol_index(*alpha, "y0");
        Poly out(alpha);
        const Poly embedded = p.embed(alpha);
        for (const auto& [e, c] : embedded.terms()) {
            const int l = e[yj] - 1;
            for (int a = 1; a <= l; ++a) {
                Exponents f(e);
                f[yj] = a + 1;
                f[y0] += l - a + 2;
                if (grading.degree(f) <= grading.max_degree())
                    out.add_term(f, c * Rational(a));
            }
        }
        return out;
    }

    /// Sets both diagonal slots ya, yb to y0.
    static Poly diagonal(const Poly& p, const Grading& grading) {
        return grading.truncate(p.rescale_symbol("ya", "y0", 1).rescale_symbol("yb", "y0", 1));
    }

    int order_;
    std::map<std::pair<int, int>, NPointSeries> memo_;
};

}  // namespace

NPointSeries assemble_operator_form(int g, int n, int order) {
    if (g < 0 || n < 0)
        throw std::invalid_argument("assemble_operator_form: negative g or n");
    if (order < 2 * (n + 1))
        throw std::invalid_argument("assemble_operator_form: order " + std::to_string(order) +
                                    " below the leading degree " + std::to_string(2 * (n + 1)));
    OperatorAssembler assembler(order);
    return assembler.assemble(g, n);
}

}  // namespace dessin::virasoro

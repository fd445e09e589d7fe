#include "dessin/algebra/properties.hpp"

#include <random>
#include <string>

#include "dessin/algebra/series.hpp"

namespace dessin::algebra {

namespace {

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        const int num = uniform(-9, 9);
        const int den = uniform(1, 6);
        return Rational(num, den);
    }

    AlphabetPtr alphabet() {
        static const Alphabet pool{"p", "q", "r", "w"};
        const int n = uniform(1, 4);
        return make_alphabet(Alphabet(pool.begin(), pool.begin() + n));
    }

    Poly poly(const AlphabetPtr& alpha, int max_terms, int lo, int hi) {
        Poly p(alpha);
        const int terms = uniform(0, max_terms);
        for (int k = 0; k < terms; ++k) {
            Exponents e(alpha->size());
            for (auto& x : e)
                x = uniform(lo, hi);
            p.add_term(e, rational());
        }
        return p;
    }

    /// 1 + Σ_{k≥1} c_k t^k with polynomial coefficients in u, v.
    Series unit_series(const AlphabetPtr& alpha, int order) {
        std::vector<Poly> coeffs;
        coeffs.push_back(Poly::constant(alpha, Rational(1)));
        for (int k = 1; k <= order; ++k)
            coeffs.push_back(poly(alpha, 3, 0, 2));
        return Series::from_coefficients("t", alpha, 0, coeffs, order);
    }

private:
    std::mt19937_64 rng_;
};

VerificationReport make_report(const std::string& name, int cases, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "algebra";
    r.name = name;
    r.parameters = {{"cases", cases}, {"seed", seed}};
    return r;
}

}  // namespace

VerificationReport ring_law_suite(int cases, std::uint64_t seed) {
    auto r = make_report("ring-laws", cases, seed);
    ReportTimer timer(r);
    Generator gen(seed);
    for (int i = 0; i < cases; ++i) {
        const auto alpha = gen.alphabet();
        const Poly p = gen.poly(alpha, 4, -5, 5), q = gen.poly(alpha, 4, -5, 5), s = gen.poly(alpha, 4, -5, 5);
        const std::string where = "case " + std::to_string(i);
        r.check((p + q) + s == p + (q + s), [&] {
            return Discrepancy{where + " associativity", ((p + q) + s).str(), (p + (q + s)).str()};
        });
        r.check(p * q == q * p, [&] { return Discrepancy{where + " commutativity", (p * q).str(), (q * p).str()}; });
        r.check(p * (q + s) == p * q + p * s, [&] {
            return Discrepancy{where + " distributivity", (p * q + p * s).str(), (p * (q + s)).str()};
        });
        r.check((p * q) * s == p * (q * s), [&] {
            return Discrepancy{where + " mul-associativity", ((p * q) * s).str(), (p * (q * s)).str()};
        });
    }
    return r;
}

VerificationReport series_sqrt_suite(int cases, std::uint64_t seed) {
    auto r = make_report("series-sqrt", cases, seed);
    ReportTimer timer(r);
    Generator gen(seed);
    const auto alpha = make_alphabet({"u", "v"});
    for (int i = 0; i < cases; ++i) {
        const Series f = gen.unit_series(alpha, gen.uniform(1, 8));
        const Series g = f.sqrt();
        const Series sq = g * g;
        const auto diff = sq.first_difference(f);
        r.check(!diff && sq.order() == f.order(), [&] {
            const int e = diff.value_or(f.order());
            return Discrepancy{"case " + std::to_string(i) + " t^" + std::to_string(e), f.coefficient(e).str(),
                               sq.coefficient(e).str()};
        });
    }
    return r;
}

VerificationReport series_inverse_suite(int cases, std::uint64_t seed) {
    auto r = make_report("series-inverse", cases, seed);
    ReportTimer timer(r);
    Generator gen(seed);
    const auto alpha = make_alphabet({"u", "v"});
    const Series one = Series::constant("t", Poly::constant(alpha, Rational(1)));
    for (int i = 0; i < cases; ++i) {
        const Series f = gen.unit_series(alpha, gen.uniform(1, 8));
        const Series prod = f * f.inverse();
        const auto diff = prod.first_difference(one);
        r.check(!diff && prod.order() == f.order(), [&] {
            const int e = diff.value_or(f.order());
            return Discrepancy{"case " + std::to_string(i) + " t^" + std::to_string(e), one.coefficient(e).str(),
                               prod.coefficient(e).str()};
        });
    }
    return r;
}

VerificationReport residue_linearity_suite(int cases, std::uint64_t seed) {
    auto r = make_report("residue-linearity", cases, seed);
    ReportTimer timer(r);
    Generator gen(seed);
    const auto alpha = make_alphabet({"u", "v"});
    auto laurent = [&](int order) {
        std::vector<Poly> coeffs;
        for (int k = -3; k <= order; ++k)
            coeffs.push_back(gen.poly(alpha, 2, 0, 2));
        return Series::from_coefficients("z", alpha, -3, coeffs, order);
    };
    for (int i = 0; i < cases; ++i) {
        const Series f = laurent(gen.uniform(-1, 3)), g = laurent(gen.uniform(-1, 3));
        const Poly a = gen.poly(alpha, 2, 0, 1), b = gen.poly(alpha, 2, 0, 1);
        const Poly lhs = (f * a + g * b).residue();
        const Poly rhs = a * f.residue() + b * g.residue();
        r.check(lhs == rhs, [&] { return Discrepancy{"case " + std::to_string(i), rhs.str(), lhs.str()}; });
    }
    return r;
}

VerificationReport substitution_homomorphism_suite(int cases, std::uint64_t seed) {
    auto r = make_report("substitution-homomorphism", cases, seed);
    ReportTimer timer(r);
    Generator gen(seed);
    const auto alpha = make_alphabet({"s", "u", "v"});
    auto lift = [](const Poly& p) { return p.rescale_symbol("u", "a", 2).rescale_symbol("v", "b", 2); };
    for (int i = 0; i < cases; ++i) {
        const Poly p = gen.poly(alpha, 4, -3, 3), q = gen.poly(alpha, 4, -3, 3);
        const std::string where = "case " + std::to_string(i);
        r.check(lift(p + q) == lift(p) + lift(q),
                [&] { return Discrepancy{where + " sum", (lift(p) + lift(q)).str(), lift(p + q).str()}; });
        r.check(lift(p * q) == lift(p) * lift(q),
                [&] { return Discrepancy{where + " product", (lift(p) * lift(q)).str(), lift(p * q).str()}; });
    }
    return r;
}

}  // namespace dessin::algebra

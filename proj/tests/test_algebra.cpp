#include "doctest.h"

#include "dessin/algebra/json_io.hpp"
#include "dessin/algebra/properties.hpp"
#include "dessin/algebra/series.hpp"

using namespace dessin::algebra;

namespace {

const AlphabetPtr kSUV = make_alphabet({"s", "u", "v"});
const AlphabetPtr kNone = make_alphabet({});

Poly var(const AlphabetPtr& a, const char* name) { return Poly::variable(a, name); }
Poly num(const AlphabetPtr& a, long n, long d = 1) { return Poly::constant(a, Rational(n, d)); }

Series series(std::initializer_list<long> coeffs, int order, const char* variable = "t") {
    std::vector<Poly> c;
    for (long x : coeffs)
        c.push_back(num(kNone, x));
    return Series::from_coefficients(variable, kNone, 0, c, order);
}

}  // namespace

TEST_CASE("rational arithmetic is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).wire() == "0/1");
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK(binomial(6, 3) == Rational(20));
    CHECK(double_factorial_odd(3) == Rational(105));
}

TEST_CASE("gaussian rationals") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    const GaussianRational z(Rational(1, 2), Rational(-3));
    CHECK(z.conj().conj() == z);
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(GaussianRational::parse(z.wire()) == z);
    CHECK(GaussianRational::parse("2*i") == GaussianRational(Rational(0), Rational(2)));
}

TEST_CASE("laurent polynomial products") {
    const Poly s = var(kSUV, "s"), u = var(kSUV, "u"), v = var(kSUV, "v");
    CHECK((u + v) * (u - v) == u * u - v * v);
    CHECK((s * u * v) * (s * (u + v)) == s.pow(2) * u.pow(2) * v + s.pow(2) * u * v.pow(2));

    const auto ab = make_alphabet({"a", "b"});
    const Poly a = var(ab, "a"), b = var(ab, "b");
    const Poly prod = (a + b).pow(2) * (a - b).pow(2);
    CHECK(prod == a.pow(4) - num(ab, 2) * a.pow(2) * b.pow(2) + b.pow(4));
    const auto uv = prod.contract_symbol("a", "u", 2)->contract_symbol("b", "v", 2);
    REQUIRE(uv);
    const auto uvab = make_alphabet({"u", "v"});
    CHECK(*uv == (var(uvab, "u") - var(uvab, "v")).pow(2));
    CHECK_FALSE((a * b).contract_symbol("a", "u", 2));
}

TEST_CASE("alphabets merge automatically") {
    const Poly x = var(make_alphabet({"x"}), "x");
    const Poly y = var(make_alphabet({"y"}), "y");
    const Poly p = x * y + x;
    CHECK(p.alphabet() == Alphabet{"x", "y"});
    CHECK(p - x == x * y);
}

TEST_CASE("text rendering") {
    const Poly s = var(kSUV, "s"), u = var(kSUV, "u"), v = var(kSUV, "v");
    CHECK((s * u * v * (u + v) * Rational(1, 2)).str() == "1/2*s*u^2*v + 1/2*s*u*v^2");
    CHECK((u - num(kSUV, 3)).str() == "u - 3");
    CHECK(Poly(kSUV).str() == "0");
    CHECK(u.pow(-2).str() == "u^-2");
}

TEST_CASE("json round trip") {
    const Poly s = var(kSUV, "s"), u = var(kSUV, "u"), v = var(kSUV, "v");
    const Poly p = s.pow(3) * u * v * Rational(2, 3) - u.pow(-1);
    const auto j = to_json(p);
    CHECK(j["alphabet"] == nlohmann::json({"s", "u", "v"}));
    CHECK(j["terms"][0]["c"] == "-1/1");
    CHECK(poly_from_json(j) == p);

    const GaussPoly g = to_gaussian(p) * GaussianRational::i();
    CHECK(gauss_poly_from_json(to_json(g)) == g);
    CHECK_THROWS(poly_from_json(nlohmann::json{{"alphabet", {"s"}}, {"terms", {{{"e", {1, 2}}, {"c", "1/1"}}}}}));
}

TEST_CASE("series sqrt") {
    const Series f = series({1, -4}, kExact).truncated(4);
    const Series g = f.sqrt();
    CHECK(g.first_difference(series({1, -2, -2, -4, -10}, 4)) == std::nullopt);
    CHECK(g.order() == 4);
    CHECK(series({1}, 3).sqrt().first_difference(series({1}, 3)) == std::nullopt);
    CHECK_THROWS_AS(series({2, 1}, 3).sqrt(), std::domain_error);
    CHECK_THROWS_AS(series({1, 1}, kExact).sqrt(), TruncationError);

    const auto uv = make_alphabet({"u", "v"});
    const Poly u = var(uv, "u"), v = var(uv, "v");
    const Series delta = Series::from_coefficients(
        "z", uv, 0, {num(uv, 1), num(uv, -2) * (u + v), (u - v).pow(2)}, 2);
    const Series root = delta.sqrt();
    CHECK(root.coefficient(1) == -(u + v));
    CHECK(root.coefficient(2) == num(uv, -2) * u * v);
    CHECK((root * root).first_difference(delta) == std::nullopt);
}

TEST_CASE("series inverse and compose") {
    const Series inv = series({1, -1}, kExact).inverse(3);
    CHECK(inv.first_difference(series({1, 1, 1, 1}, 3)) == std::nullopt);
    CHECK(inv.order() == 3);
    CHECK(series({1}, kExact).inverse(5).first_difference(series({1}, 5)) == std::nullopt);

    const Series outer = series({1, -1}, kExact, "y").inverse(2);
    const Series inner = series({0, 2, 1}, kExact, "x");
    const Series c = outer.compose(inner);
    CHECK(c.variable() == "x");
    CHECK(c.order() == 2);
    CHECK(c.first_difference(series({1, 2, 5}, 2, "x")) == std::nullopt);
    CHECK_THROWS_AS(outer.compose(series({1, 1}, kExact, "x")), std::domain_error);

    // t^-2 leading term
    const Series laurent = Series::from_coefficients("t", kNone, -2, {num(kNone, 2), num(kNone, 1)}, 4);
    const Series li = laurent.inverse();
    CHECK(li.valuation() == 2);
    CHECK(li.order() == 8);
    CHECK((laurent * li).first_difference(series({1}, 6)) == std::nullopt);
}

TEST_CASE("truncation contract") {
    const Series f = series({1, 2, 3}, 2);
    const Series g = series({1, 1}, kExact);
    CHECK((f + g).order() == 2);
    CHECK((f * g).order() == 2);
    CHECK((f.shifted(1) * f.shifted(1)).order() == 4);
    CHECK_THROWS_AS(f.coefficient(3), TruncationError);
    CHECK(f.derivative().order() == 1);
    CHECK(f.pow(2).coefficient(2) == num(kNone, 10));
}

TEST_CASE("residues") {
    const Series f = Series::from_coefficients("z", kNone, -1, {num(kNone, 3), num(kNone, 5), num(kNone, 1)}, kExact);
    CHECK(f.residue() == num(kNone, 3));
    CHECK(Series::monomial("z", num(kNone, 1), -2).residue().is_zero());
    CHECK_THROWS_AS(Series::monomial("z", num(kNone, 1), -3, -2).residue(), TruncationError);

    // (β/z)·1/(1−z²/z0²) at z = 0
    const auto bz = make_alphabet({"beta", "z0"});
    const Series geom = Series::from_coefficients(
        "z", bz, 0, {num(bz, 1), Poly(bz), Poly::variable(bz, "z0", -2)}, kExact).inverse(6);
    const Series h = Series::monomial("z", var(bz, "beta"), -1) * geom;
    CHECK(h.residue() == var(bz, "beta"));
}

TEST_CASE("randomized algebraic laws") {
    CHECK(ring_law_suite(200, 1).passed());
    CHECK(series_sqrt_suite(200, 2).passed());
    CHECK(series_inverse_suite(200, 3).passed());
    CHECK(residue_linearity_suite(200, 4).passed());
    CHECK(substitution_homomorphism_suite(200, 5).passed());
}

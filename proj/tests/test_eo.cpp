#include "doctest.h"

#include "dessin/eo/eo.hpp"

using namespace dessin;
using namespace dessin::eo;
using algebra::Rational;

namespace {

Poly sym(const algebra::AlphabetPtr& alpha, const char* name, int k = 1) { return Poly::variable(alpha, name, k); }

}  // namespace

TEST_CASE("base forms") {
    const auto a3 = form_alphabet(3);
    const Poly a = sym(a3, "a"), b = sym(a3, "b");
    const Poly al = (a - b).pow(2), be = (a + b).pow(2);
    const Poly d2inv = ((al - be).pow(2)).inverse();
    const Poly w03 = (be * sym(a3, "z1", -2) * sym(a3, "z2", -2) * sym(a3, "z3", -2) - al) * d2inv;
    CHECK(eo_omega(0, 3).coeff == w03);

    const auto a1 = form_alphabet(1);
    const Poly a_ = sym(a1, "a"), b_ = sym(a1, "b"), z = sym(a1, "z1");
    const Poly al1 = (a_ - b_).pow(2), be1 = (a_ + b_).pow(2);
    const Poly w11 = (be1 * z.pow(-4) - (be1 * Rational(2) + al1) * z.pow(-2) + (al1 * Rational(2) + be1) -
                      al1 * z.pow(2)) *
                     ((al1 - be1).pow(2) * Rational(8)).inverse();
    CHECK(eo_omega(1, 1).coeff == w11);
    CHECK_THROWS(eo_omega(0, 2));
}

TEST_CASE("kernel expansions") {
    const auto k0 = recursion_kernel_expansion(Chart::zero, 2);
    CHECK(k0.valuation() == -1);
    const auto a1 = form_alphabet(1);
    const Poly a = sym(a1, "a"), b = sym(a1, "b");
    const Poly be = (a + b).pow(2);
    CHECK(k0.coefficient(-1) == -be * ((a * b).pow(2) * Rational(32)).inverse() * sym(a1, "z1", -2));
    const auto kinf = recursion_kernel_expansion(Chart::infinity, 2);
    CHECK(kinf.valuation() == -1);
    for (const auto& [e, c] : k0.coefficients())
        CHECK(e % 2 != 0);
}

TEST_CASE("x-series") {
    const auto z = z_of_x_series(4);
    const auto alpha = z.coefficient_alphabet();
    CHECK(z.coefficient(0) == Poly::constant(alpha, Rational(1)));
    CHECK(z.coefficient(1) == Poly::variable(alpha, "s") * Poly::variable(alpha, "a") * Poly::variable(alpha, "b") *
                                  Rational(-2));
    const auto g11 = to_x_series(1, 1, 8);
    const auto& suv = suv_alphabet();
    CHECK(g11.coefficients.begin()->first == std::vector<int>{3});
    CHECK(g11.coefficient({3}) == Poly::variable(suv, "u") * Poly::variable(suv, "v") * Poly::variable(suv, "s", 3));
    const auto g03 = to_x_series(0, 3, 9);
    CHECK(g03.coefficient({1, 1, 1}) ==
          Poly::variable(suv, "u") * Poly::variable(suv, "v") * Poly::variable(suv, "s", 3) * Rational(2));
}

TEST_CASE("main theorem at low order") {
    for (auto [g, n] : {std::pair{0, 3}, std::pair{1, 1}, std::pair{0, 4}, std::pair{1, 2}}) {
        const auto r = verify_main_theorem(g, n, 9);
        CHECK_MESSAGE(r.passed(), r.to_json().dump());
    }
}

TEST_CASE("curve identity and form invariants") {
    CHECK(curve_identity_check(20).passed());
    CHECK(stable_range(2).size() == 4);
    for (const auto& r : {evenness_suite(3), symmetry_suite(3), s_freeness_suite(3), chart_consistency_suite(3)})
        CHECK_MESSAGE(r.passed(), r.to_json().dump());
}

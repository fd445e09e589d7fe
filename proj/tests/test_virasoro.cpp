#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "dessin/closed/closed_forms.hpp"
#include "dessin/virasoro/correlators.hpp"
#include "dessin/virasoro/properties.hpp"

using namespace dessin;
using namespace dessin::virasoro;
using algebra::Rational;

namespace {

Poly sym(const char* name, int k = 1) { return Poly::variable(suv_alphabet(), name, k); }
Poly constant(long n, long d = 1) { return Poly::constant(suv_alphabet(), Rational(n, d)); }

}  // namespace

TEST_CASE("raw correlators from the constraints") {
    CorrelatorTable t;
    const Poly s = sym("s"), u = sym("u"), v = sym("v");
    CHECK(t.raw(0, {1}) == s * u * v);
    CHECK(t.raw(1, {1}).is_zero());
    CHECK(t.raw(0, {2}) == s * s * u * v * (u + v) * Rational(1, 2));
    CHECK(t.raw(1, {3}) == s.pow(3) * u * v * Rational(1, 3));
    CHECK(t.raw(0, {1, 1}) == s * s * u * v);
    CHECK_THROWS(t.raw(0, {}));
    CHECK_THROWS(t.raw(0, {0, 2}));
}

TEST_CASE("weighted correlators") {
    CorrelatorTable t;
    const Poly s = sym("s"), u = sym("u"), v = sym("v");
    CHECK(t.weighted(0, {1, 1, 1}) == s.pow(3) * u * v * Rational(2));
    CHECK(t.weighted(0, {4}) == s.pow(4) * u * v * (u.pow(3) + u * u * v * Rational(6) + u * v * v * Rational(6) + v.pow(3)));
    CHECK(t.weighted(0, {1}) == s * u * v);
    CHECK(t.raw(0, {3, 1}) == t.raw(0, {1, 3}));
}

TEST_CASE("n-point series") {
    CorrelatorTable t;
    const Poly s = sym("s"), u = sym("u"), v = sym("v");
    const auto g01 = npoint_series(t, 0, 1, 6);
    CHECK(g01.coefficients.size() == 5);
    CHECK(g01.coefficient({3}) == s.pow(3) * u * v * (u * u + u * v * Rational(3) + v * v));
    const auto g11 = npoint_series(t, 1, 1, 7);
    CHECK(g11.coefficients.begin()->first == std::vector<int>{3});
    CHECK(g11.coefficients.begin()->second == u * v * s.pow(3));
    const auto g02 = npoint_series(t, 0, 2, 5);
    CHECK(g02.coefficient({1, 1}) == s * s * u * v);
    CHECK_FALSE(g02.symmetry_defect());
}

TEST_CASE("all-genus one-point sum matches the KP formula") {
    CorrelatorTable t;
    const Poly s = sym("s"), u = sym("u"), v = sym("v");
    CHECK(kp_one_point(1) == s * u * v);
    CHECK(kp_one_point(2) == s * s * u * v * (u + v));
    CHECK(kp_one_point(3) == s.pow(3) * u * v * (u * u + u * v * Rational(3) + v * v + constant(1)));
    for (int n = 1; n <= 8; ++n)
        CHECK(one_point_all_genus(t, n) == kp_one_point(n));
}

TEST_CASE("strategies agree") {
    CorrelatorTable largest(Strategy::largest), smallest(Strategy::smallest);
    for (const auto& parts : std::vector<std::vector<int>>{{1, 2, 3}, {2, 2, 2}, {4, 1}, {5}, {3, 3, 1, 1}})
        for (int g = 0; g <= 2; ++g)
            CHECK(largest.raw(g, parts) == smallest.raw(g, parts));
}

TEST_CASE("operator form reproduces the recursion") {
    CorrelatorTable t;
    const auto a11 = assemble_operator_form(1, 0, 8);
    VerificationReport r;
    compare_series(npoint_series(t, 1, 1, 8), a11, r);
    CHECK(r.passed());
    CHECK(a11.coefficient({3}) == sym("u") * sym("v") * sym("s", 3));
    VerificationReport r3;
    compare_series(npoint_series(t, 0, 3, 8), assemble_operator_form(0, 2, 8), r3);
    CHECK(r3.passed());
    CHECK_THROWS(assemble_operator_form(1, 2, 4));
}

TEST_CASE("cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "dessin-cache-test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "table.json";
    CorrelatorTable t;
    npoint_series(t, 1, 2, 8);
    REQUIRE(t.size() > 0);
    cache_save(t, path);
    CorrelatorTable loaded;
    loaded.merge(cache_load(path));
    CHECK(loaded.entries() == t.entries());

    loaded.raw(2, {5});
    cache_save(loaded, path);
    const auto superset = cache_load(path);
    CHECK(superset.size() > t.size());

    {
        std::ofstream out(path);
        out << R"({"version":99,"alphabet":["s","u","v"],"entries":[]})";
    }
    CHECK_THROWS_AS(cache_load(path), std::runtime_error);
    {
        std::ofstream out(path);
        out << R"({"version":1,"alphabet":["s","u","v"],"entries":[{"g":0)";
    }
    CHECK_THROWS_AS(cache_load(path), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("recursion property suites") {
    CHECK(partitions(4).size() == 5);
    CorrelatorTable t;
    for (const auto& r : {strategy_independence_suite(), s_degree_law_suite(t), total_degree_law_suite(t),
                          uv_divisibility_suite(t), uv_symmetry_suite(t), vanishing_bound_suite(t),
                          kp_oracle_suite(t), operator_form_suite(t)}) {
        CHECK_MESSAGE(r.passed(), r.to_json().dump());
        CHECK(r.checked_count > 0);
    }
}

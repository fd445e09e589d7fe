#include "doctest.h"

#include "dessin/closed/closed_forms.hpp"
#include "dessin/virasoro/correlators.hpp"

using namespace dessin;
using namespace dessin::closed;

namespace {

Poly sym(const char* name, int k = 1) { return Poly::variable(suv_alphabet(), name, k); }

}  // namespace

TEST_CASE("narayana and catalan numbers") {
    CHECK(narayana(1, 1) == Rational(1));
    CHECK(narayana(4, 2) == Rational(6));
    CHECK_THROWS(narayana(3, 4));
    const auto q1 = algebra::make_alphabet({"q"});
    for (int n = 1; n <= 20; ++n)
        CHECK(narayana_poly(n).substitute("q", Poly::constant(q1, Rational(1))).constant_term() == catalan(n));
}

TEST_CASE("closed G01 and G11") {
    const Poly s = sym("s"), u = sym("u"), v = sym("v");
    const auto g01 = dessin_closed_series(ClosedForm::G01, 6);
    CHECK(g01.coefficient({1}) == s * u * v);
    CHECK(g01.coefficient({2}) == s * s * u * v * (u + v));
    const auto g11 = dessin_closed_series(ClosedForm::G11, 7);
    CHECK(g11.coefficient({3}) == u * v * s.pow(3));
    CHECK(g11.coefficient({4}) == u * v * (u + v) * s.pow(4) * Rational(5));
}

TEST_CASE("closed forms agree with the recursion") {
    virasoro::CorrelatorTable t;
    for (auto [form, g, n] : {std::tuple{ClosedForm::G01, 0, 1}, std::tuple{ClosedForm::G02, 0, 2},
                              std::tuple{ClosedForm::G03, 0, 3}, std::tuple{ClosedForm::G11, 1, 1}}) {
        VerificationReport r;
        compare_series(virasoro::npoint_series(t, g, n, 9), dessin_closed_series(form, 9), r);
        CHECK_MESSAGE(r.passed(), to_string(form));
    }
}

TEST_CASE("generating-function identities") {
    for (auto id : all_identities()) {
        const auto r = gf_identity_check(id, 8);
        CHECK_MESSAGE(r.passed(), to_string(id) << " " << r.to_json().dump());
    }
    CHECK(parse_identity("typeB-gf") == IdentityName::typeB_gf);
    CHECK_FALSE(parse_identity("nope"));
}

TEST_CASE("catalog closed forms") {
    for (const auto& key : all_catalog_keys()) {
        const auto r = catalog_check(key, 8);
        CHECK_MESSAGE(r.passed(), to_string(key) << " " << r.to_json().dump());
    }
}

#include "doctest.h"

#include "dessin/airy/airy.hpp"

using namespace dessin;
using namespace dessin::airy;
using algebra::GaussianRational;

namespace {

GaussPoly gvar(const char* name, int k = 1) { return GaussPoly::variable(local_alphabet(), name, k); }

}  // namespace

TEST_CASE("T numbers") {
    CHECK(t_row(0).values == std::vector<Rational>{Rational(1)});
    CHECK(t_row(1).values == std::vector<Rational>{Rational(2), Rational(2)});
    CHECK(t_row(2).values == std::vector<Rational>{Rational(5), Rational(6), Rational(5)});
    CHECK(t_row(3).values == std::vector<Rational>{Rational(14), Rational(18), Rational(18), Rational(14)});
    CHECK_THROWS_AS(t_number(2, 3), std::out_of_range);
    CHECK(t_integrality_check(20).passed());
}

TEST_CASE("times") {
    const GaussPoly lead = gvar("qa") * gvar("qb") * gvar("qs", -1) * gvar("p", -2) * GaussianRational(2);
    CHECK(times(Branch::plus, 1) == lead);
    CHECK(times(Branch::plus, 2).is_zero());
    CHECK(times(Branch::minus, 1) == lead * GaussianRational::i());
    // first corrections of the root and of the geometric series
    const GaussPoly c3 = lead * ((gvar("qa", 2) * gvar("qb", 2) * gvar("qs", 2) * GaussianRational(8)).inverse() -
                                 (gvar("qs", 2) * gvar("p", 2)).inverse());
    CHECK(times(Branch::plus, 3) == c3);
    CHECK(times(Branch::plus, 1, Normalization::curve) == lead * (gvar("qs", 2) * GaussianRational(2)).inverse());
}

TEST_CASE("y squared") {
    for (auto b : {Branch::plus, Branch::minus}) {
        const auto r = y_square_check(b, 6);
        CHECK_MESSAGE(r.passed(), r.to_json().dump());
    }
}

TEST_CASE("local identities") {
    for (auto id : all_local_identities()) {
        const auto r = local_identity_check(id, 8);
        CHECK_MESSAGE(r.passed(), r.to_json().dump());
    }
    CHECK(parse_local_identity("bergman-mixed") == LocalIdentity::bergman_mixed);
    const auto r = bergman_local_check(10);
    CHECK_MESSAGE(r.passed(), r.to_json().dump());
}

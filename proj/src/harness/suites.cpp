#include "dessin/harness/suites.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "dessin/airy/airy.hpp"
#include "dessin/algebra/properties.hpp"
#include "dessin/closed/closed_forms.hpp"
#include "dessin/eo/eo.hpp"
#include "dessin/virasoro/properties.hpp"

namespace dessin::harness {

using algebra::Poly;
using algebra::Rational;

namespace {

using Reports = std::vector<VerificationReport>;

/// Runs `f` against the shared table, or a fresh one.
template <class F>
auto with_table(const SuiteContext& ctx, F&& f) {
    if (ctx.table)
        return f(*ctx.table);
    virasoro::CorrelatorTable own;
    return f(own);
}

VerificationReport named(VerificationReport r, std::string suite) {
    r.suite = std::move(suite);
    return r;
}

VerificationReport narayana_reproduction(virasoro::CorrelatorTable& table) {
    VerificationReport r;
    r.suite = "narayana-reproduction";
    r.name = "G_{0,1} displayed terms";
    r.parameters = {{"max_n", 5}};
    ReportTimer timer(r);
    const auto& a = suv_alphabet();
    const Poly s = Poly::variable(a, "s"), u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    auto row = [&](std::vector<long> c) {
        Poly p(a);
        const int n = static_cast<int>(c.size());
        for (int k = 0; k < n; ++k)
            p += u.pow(n - 1 - k) * v.pow(k) * Rational(c[static_cast<std::size_t>(k)]);
        return s.pow(n) * u * v * p;
    };
    const std::vector<Poly> printed{row({1}), row({1, 1}), row({1, 3, 1}), row({1, 6, 6, 1}),
                                    row({1, 10, 20, 10, 1})};
    for (int n = 1; n <= 5; ++n) {
        const Poly got = table.weighted(0, {n});
        const Poly& want = printed[static_cast<std::size_t>(n) - 1];
        r.check(got == want, [&] { return Discrepancy{"x^-" + std::to_string(n + 1), want.str(), got.str()}; });
    }
    return r;
}

VerificationReport narayana_law(virasoro::CorrelatorTable& table, int max_n) {
    VerificationReport r;
    r.suite = "narayana-law";
    r.name = "weighted one-point = s^n uv N_n";
    r.parameters = {{"max_n", max_n}};
    ReportTimer timer(r);
    const auto& a = suv_alphabet();
    const Poly s = Poly::variable(a, "s"), u = Poly::variable(a, "u"), v = Poly::variable(a, "v");
    for (int n = 1; n <= max_n; ++n) {
        Poly law(a);
        Rational at_one(0);
        for (int k = 1; k <= n; ++k) {
            law += u.pow(n - k) * v.pow(k - 1) * closed::narayana(n, k);
            at_one += closed::narayana(n, k);
        }
        law = s.pow(n) * u * v * law;
        const Poly got = table.weighted(0, {n});
        r.check(got == law, [&] { return Discrepancy{"n=" + std::to_string(n), law.str(), got.str()}; });
        r.check(at_one == closed::catalan(n),
                [&] { return Discrepancy{"N_" + std::to_string(n) + "(1)", closed::catalan(n).str(), at_one.str()}; });
    }
    return r;
}

Reports closed_vs_recursion(virasoro::CorrelatorTable& table, const SuiteParams& p) {
    Reports out;
    const std::vector<std::pair<closed::ClosedForm, int>> defaults{{closed::ClosedForm::G01, 12},
                                                                   {closed::ClosedForm::G02, 12},
                                                                   {closed::ClosedForm::G03, 10},
                                                                   {closed::ClosedForm::G11, 10}};
    for (auto [form, order] : defaults) {
        if (p.key && *p.key != closed::to_string(form))
            continue;
        const int k = p.order.value_or(order);
        const int g = form == closed::ClosedForm::G11 ? 1 : 0;
        const int n = form == closed::ClosedForm::G01 || form == closed::ClosedForm::G11 ? 1 : form == closed::ClosedForm::G02 ? 2 : 3;
        VerificationReport r;
        r.suite = "closed-vs-recursion";
        r.name = closed::to_string(form);
        r.parameters = {{"order", k}};
        r.order = k;
        ReportTimer timer(r);
        const NPointSeries expected = closed::dessin_closed_series(form, k);
        if (const auto bad = expected.symmetry_defect())
            r.fail("symmetry " + tuple_string(*bad), "symmetric", "asymmetric");
        compare_series(expected, virasoro::npoint_series(table, g, n, k), r);
        out.push_back(std::move(r));
    }
    if (out.empty())
        throw std::invalid_argument("unknown closed form '" + p.key.value_or("") + "' (valid: G01, G02, G03, G11)");
    return out;
}

VerificationReport eo_base_cases() {
    VerificationReport r;
    r.suite = "eo-base-cases";
    r.name = "w_{0,3}, w_{1,1}";
    ReportTimer timer(r);
    const auto a3 = eo::form_alphabet(3);
    const Poly a = Poly::variable(a3, "a"), b = Poly::variable(a3, "b");
    const Poly al = (a - b).pow(2), be = (a + b).pow(2), d2 = (al - be).pow(2);
    const Poly w03 = (be * Poly::variable(a3, "z1", -2) * Poly::variable(a3, "z2", -2) * Poly::variable(a3, "z3", -2) -
                      al) *
                     d2.inverse();
    const Poly got03 = eo::eo_omega(0, 3).coeff;
    r.check(got03 == w03, [&] { return Discrepancy{"w_{0,3}", w03.str(), got03.str()}; });
    const auto a1 = eo::form_alphabet(1);
    const Poly z = Poly::variable(a1, "z1");
    const Poly al1 = al.embed(a1), be1 = be.embed(a1);
    const Poly w11 = (be1 * z.pow(-4) - (be1 * Rational(2) + al1) * z.pow(-2) + al1 * Rational(2) + be1 - al1 * z.pow(2)) *
                     (d2.embed(a1) * Rational(8)).inverse();
    const Poly got11 = eo::eo_omega(1, 1).coeff;
    r.check(got11 == w11, [&] { return Discrepancy{"w_{1,1}", w11.str(), got11.str()}; });
    return r;
}

Reports main_theorem(virasoro::CorrelatorTable& table, const SuiteParams& p) {
    Reports out;
    const int order = p.order.value_or(10);
    if (p.g || p.n) {
        if (!p.g || !p.n)
            throw std::invalid_argument("main-theorem needs both --g and --n");
        out.push_back(eo::verify_main_theorem(*p.g, *p.n, order, table));
        return out;
    }
    for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 1}})
        out.push_back(eo::verify_main_theorem(g, n, order, table));
    return out;
}

Reports t_numbers() {
    return {named(airy::t_integrality_check(20), "t-numbers")};
}

Reports local_identities(const SuiteParams& p) {
    const int order = p.order.value_or(6);
    Reports out;
    for (auto id : airy::all_local_identities()) {
        if (p.key && *p.key != airy::to_string(id))
            continue;
        out.push_back(airy::local_identity_check(id, order));
    }
    if (p.key && out.empty())
        throw std::invalid_argument("unknown local identity '" + *p.key +
                                    "' (valid: bergman-pp, sqrt-product, bergman-mixed)");
    if (!p.key) {
        out.push_back(airy::y_square_check(airy::Branch::plus, order));
        out.push_back(airy::y_square_check(airy::Branch::minus, order));
        out.push_back(airy::bergman_local_check(10));
    }
    return out;
}

int catalog_default_order(const closed::CatalogKey& key) {
    switch (key.theory) {
    case closed::Theory::WK: return 8;
    case closed::Theory::hermitian: return key.points == closed::PointCount::one ? 13 : 10;
    case closed::Theory::even_coupling: return 10;
    case closed::Theory::dessin: return 10;
    }
    return 10;
}

Reports catalog(const SuiteParams& p) {
    Reports out;
    for (const auto& key : closed::all_catalog_keys()) {
        if (p.key && *p.key != closed::to_string(key))
            continue;
        auto r = closed::catalog_check(key, p.order.value_or(catalog_default_order(key)));
        r.suite = "catalog";
        out.push_back(std::move(r));
    }
    if (p.key && out.empty())
        throw std::invalid_argument("unknown catalog key '" + *p.key + "'");
    return out;
}

Reports gf_identities(const SuiteParams& p) {
    Reports out;
    for (auto id : closed::all_identities()) {
        if (p.key && *p.key != closed::to_string(id))
            continue;
        out.push_back(closed::gf_identity_check(id, p.order.value_or(10)));
    }
    if (p.key && out.empty())
        throw std::invalid_argument("unknown identity '" + *p.key + "'");
    return out;
}

template <class F>
SuiteInfo table_suite(std::string name, std::string description, int budget, F f) {
    return {name, std::move(description), budget, false,
            [f](const SuiteContext& ctx, const SuiteParams& p) {
                return with_table(ctx, [&](virasoro::CorrelatorTable& t) { return Reports(f(t, p)); });
            }};
}

template <class F>
SuiteInfo random_suite(std::string name, std::string description, F f) {
    return {name, std::move(description), 0, true, [f](const SuiteContext& ctx, const SuiteParams& p) {
                auto r = f(p.cases.value_or(200), ctx.seed);
                r.parameters["seed"] = ctx.seed;
                return Reports{r};
            }};
}

std::vector<SuiteInfo> build_registry() {
    using virasoro::CorrelatorTable;
    std::vector<SuiteInfo> r;
    r.push_back(table_suite("narayana-reproduction", "weighted one-point correlators n<=5 vs displayed G01 terms", 6,
                            [](CorrelatorTable& t, const SuiteParams&) { return Reports{narayana_reproduction(t)}; }));
    r.push_back(table_suite("narayana-law", "weighted one-point = s^n uv sum N(n,k) u^(n-k) v^(k-1), n<=25", 25,
                            [](CorrelatorTable& t, const SuiteParams& p) {
                                return Reports{narayana_law(t, p.order.value_or(25))};
                            }));
    r.push_back(table_suite("closed-vs-recursion", "closed G01/G02 (order 12), G03/G11 (order 10) vs recursion", 12,
                            [](CorrelatorTable& t, const SuiteParams& p) { return closed_vs_recursion(t, p); }));
    r.push_back({"eo-base-cases", "w_{0,3} and w_{1,1} against their displayed forms", 4, false,
                 [](const SuiteContext&, const SuiteParams&) { return Reports{eo_base_cases()}; }});
    r.push_back(table_suite("main-theorem", "EO forms expanded in x vs recursion (--g --n --order)", 10,
                            [](CorrelatorTable& t, const SuiteParams& p) { return main_theorem(t, p); }));
    r.push_back(table_suite("kp-oracle", "all-genus one-point sum vs KP closed form, n<=12", 12,
                            [](CorrelatorTable& t, const SuiteParams& p) {
                                return Reports{virasoro::kp_oracle_suite(t, p.order.value_or(12))};
                            }));
    r.push_back(table_suite("operator-form", "operator-form assembly vs recursion for (0,3),(1,1),(1,2)", 8,
                            [](CorrelatorTable& t, const SuiteParams& p) {
                                return Reports{virasoro::operator_form_suite(t, p.order.value_or(8))};
                            }));
    r.push_back({"t-numbers", "T(n,k) rows 0..2 and integrality for n<=20", 20, false,
                 [](const SuiteContext&, const SuiteParams&) { return t_numbers(); }});
    r.push_back({"local-identities", "bergman-pp, sqrt-product, bergman-mixed, y^2 and local kernel checks", 6, false,
                 [](const SuiteContext&, const SuiteParams& p) { return local_identities(p); }});
    r.push_back({"catalog", "earlier closed forms and coefficient laws (--key theory/points)", 13, false,
                 [](const SuiteContext&, const SuiteParams& p) { return catalog(p); }});
    r.push_back({"gf-identities", "generating-function identities at order 10 (--key name)", 10, false,
                 [](const SuiteContext&, const SuiteParams& p) { return gf_identities(p); }});
    r.push_back({"strategy-independence", "largest- vs smallest-part elimination, sum<=12, g<=2", 12, false,
                 [](const SuiteContext&, const SuiteParams&) { return Reports{virasoro::strategy_independence_suite()}; }});
    r.push_back(table_suite("s-degree-law", "D_g(A) = s^|A| P(u,v), sum<=14, g<=3", 14,
                            [](CorrelatorTable& t, const SuiteParams&) { return Reports{virasoro::s_degree_law_suite(t)}; }));
    r.push_back(table_suite("total-degree-law", "(u,v)-degree = sum - n + 2 - 2g, sum<=14, g<=3", 14,
                            [](CorrelatorTable& t, const SuiteParams&) {
                                return Reports{virasoro::total_degree_law_suite(t)};
                            }));
    r.push_back(table_suite("uv-divisibility", "uv divides D_g(A), sum<=14, g<=3", 14,
                            [](CorrelatorTable& t, const SuiteParams&) {
                                return Reports{virasoro::uv_divisibility_suite(t)};
                            }));
    r.push_back(table_suite("uv-symmetry", "u <-> v fixes D_g(A), sum<=14, g<=3", 14,
                            [](CorrelatorTable& t, const SuiteParams&) { return Reports{virasoro::uv_symmetry_suite(t)}; }));
    r.push_back(table_suite("vanishing-bound", "D_g({n}) = 0 iff 2g > n-1, n<=14", 14,
                            [](CorrelatorTable& t, const SuiteParams&) {
                                return Reports{virasoro::vanishing_bound_suite(t)};
                            }));
    r.push_back({"eo-evenness", "even z-exponents, 2g-2+n<=4", 4, false,
                 [](const SuiteContext&, const SuiteParams&) { return Reports{eo::evenness_suite()}; }});
    r.push_back({"eo-symmetry", "slot symmetry, 2g-2+n<=4", 4, false,
                 [](const SuiteContext&, const SuiteParams&) { return Reports{eo::symmetry_suite()}; }});
    r.push_back({"eo-s-freeness", "no s in any form, 2g-2+n<=4", 4, false,
                 [](const SuiteContext&, const SuiteParams&) { return Reports{eo::s_freeness_suite()}; }});
    r.push_back({"chart-consistency", "alpha <-> beta recursion vs z -> 1/z, 2g-2+n<=4", 4, false,
                 [](const SuiteContext&, const SuiteParams&) { return Reports{eo::chart_consistency_suite()}; }});
    r.push_back({"curve-identity", "spectral curve identity at both charts to order 20", 20, false,
                 [](const SuiteContext&, const SuiteParams& p) {
                     return Reports{eo::curve_identity_check(p.order.value_or(20))};
                 }});
    r.push_back(random_suite("ring-laws", "random ring laws (--cases, --seed)", algebra::ring_law_suite));
    r.push_back(random_suite("series-sqrt", "random sqrt(f)^2 = f", algebra::series_sqrt_suite));
    r.push_back(random_suite("series-inverse", "random f * f^-1 = 1", algebra::series_inverse_suite));
    r.push_back(random_suite("residue-linearity", "random residue linearity", algebra::residue_linearity_suite));
    r.push_back(random_suite("substitution-homomorphism", "random substitution homomorphism",
                             algebra::substitution_homomorphism_suite));
    for (auto& info : r)
        info.run = [name = info.name, run = std::move(info.run)](const SuiteContext& ctx, const SuiteParams& p) {
            auto reports = run(ctx, p);
            for (auto& report : reports)
                report.suite = name;
            return reports;
        };
    return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> registry = build_registry();
    return registry;
}

const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : suite_registry())
        if (s.name == name)
            return &s;
    return nullptr;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suite_registry())
        out.push_back(s.name);
    return out;
}

std::vector<VerificationReport> suite_all(int budget, const SuiteContext& ctx, bool include_randomized, int jobs) {
    std::vector<const SuiteInfo*> selected;
    for (const auto& s : suite_registry())
        if (include_randomized || !s.randomized)
            selected.push_back(&s);
    std::vector<Reports> results(selected.size());
    auto run_one = [&](std::size_t i) {
        const SuiteInfo& s = *selected[i];
        if (s.budget > budget) {
            VerificationReport r;
            r.suite = s.name;
            r.name = s.name;
            r.status = Status::skipped;
            r.parameters = {{"budget", budget}, {"required", s.budget}};
            r.note = "order budget " + std::to_string(budget) + " below the required " + std::to_string(s.budget);
            results[i] = {r};
            return;
        }
        try {
            results[i] = s.run(ctx, {});
        } catch (const std::exception& e) {
            VerificationReport r;
            r.suite = s.name;
            r.name = s.name;
            r.fail("exception", "completion", e.what());
            results[i] = {r};
        }
    };
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(selected.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < selected.size(); ++i)
            run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < selected.size(); i = next++)
                    run_one(i);
            });
        for (auto& t : pool)
            t.join();
    }
    Reports out;
    for (auto& rs : results)
        for (auto& r : rs)
            out.push_back(std::move(r));
    return out;
}

Summary summarize(const std::vector<VerificationReport>& reports) {
    Summary s;
    for (const auto& r : reports) {
        if (r.status == Status::pass)
            ++s.passed;
        else if (r.status == Status::fail)
            ++s.failed;
        else
            ++s.skipped;
    }
    return s;
}

}  // namespace dessin::harness

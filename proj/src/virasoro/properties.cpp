#include "dessin/virasoro/properties.hpp"

#include <functional>

namespace dessin::virasoro {

using algebra::Rational;

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int smallest) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int k = smallest; k <= remaining; ++k) {
            current.push_back(k);
            rec(remaining - k, k);
            current.pop_back();
        }
    };
    if (n > 0)
        rec(n, 1);
    return out;
}

namespace {

std::string key_string(int g, const std::vector<int>& parts) {
    return "g=" + std::to_string(g) + " A=" + tuple_string(parts);
}

VerificationReport make_report(std::string name, nlohmann::json params) {
    VerificationReport r;
    r.suite = "virasoro";
    r.name = std::move(name);
    r.parameters = std::move(params);
    return r;
}

/// Runs `law` over every (g, A) with Σa ≤ max_sum, g ≤ max_genus.
template <class Law>
VerificationReport each_correlator(std::string name, CorrelatorTable& table, int max_sum, int max_genus, Law law) {
    auto r = make_report(std::move(name), {{"max_sum", max_sum}, {"max_genus", max_genus}});
    ReportTimer timer(r);
    for (int sum = 1; sum <= max_sum; ++sum)
        for (const auto& parts : partitions(sum))
            for (int g = 0; g <= max_genus; ++g)
                law(r, g, parts, table.raw(g, parts));
    return r;
}

}  // namespace

VerificationReport strategy_independence_suite(int max_sum, int max_genus) {
    CorrelatorTable largest(Strategy::largest), smallest(Strategy::smallest);
    auto r = make_report("strategy-independence", {{"max_sum", max_sum}, {"max_genus", max_genus}});
    ReportTimer timer(r);
    for (int sum = 1; sum <= max_sum; ++sum)
        for (const auto& parts : partitions(sum))
            for (int g = 0; g <= max_genus; ++g) {
                const Poly a = largest.raw(g, parts), b = smallest.raw(g, parts);
                r.check(a == b, [&] { return Discrepancy{key_string(g, parts), a.str(), b.str()}; });
            }
    return r;
}

VerificationReport s_degree_law_suite(CorrelatorTable& table, int max_sum, int max_genus) {
    return each_correlator("s-degree-law", table, max_sum, max_genus,
                           [](VerificationReport& r, int g, const std::vector<int>& parts, const Poly& d) {
                               int sum = 0;
                               for (int a : parts)
                                   sum += a;
                               bool ok = true;
                               for (const auto& [e, c] : d.terms())
                                   ok = ok && e[0] == sum && e[1] >= 0 && e[2] >= 0;
                               r.check(ok, [&] {
                                   return Discrepancy{key_string(g, parts), "s^" + std::to_string(sum) + "*P(u,v)",
                                                      d.str()};
                               });
                           });
}

VerificationReport total_degree_law_suite(CorrelatorTable& table, int max_sum, int max_genus) {
    return each_correlator("total-degree-law", table, max_sum, max_genus,
                           [](VerificationReport& r, int g, const std::vector<int>& parts, const Poly& d) {
                               int expected = 2 - 2 * g - static_cast<int>(parts.size());
                               for (int a : parts)
                                   expected += a;
                               bool ok = true;
                               for (const auto& [e, c] : d.terms())
                                   ok = ok && e[1] + e[2] == expected;
                               r.check(ok, [&] {
                                   return Discrepancy{key_string(g, parts), "(u,v)-degree " + std::to_string(expected),
                                                      d.str()};
                               });
                           });
}

VerificationReport uv_divisibility_suite(CorrelatorTable& table, int max_sum, int max_genus) {
    return each_correlator("uv-divisibility", table, max_sum, max_genus,
                           [](VerificationReport& r, int g, const std::vector<int>& parts, const Poly& d) {
                               bool ok = true;
                               for (const auto& [e, c] : d.terms())
                                   ok = ok && e[1] >= 1 && e[2] >= 1;
                               r.check(ok, [&] { return Discrepancy{key_string(g, parts), "uv*P(s,u,v)", d.str()}; });
                           });
}

VerificationReport uv_symmetry_suite(CorrelatorTable& table, int max_sum, int max_genus) {
    return each_correlator("uv-symmetry", table, max_sum, max_genus,
                           [](VerificationReport& r, int g, const std::vector<int>& parts, const Poly& d) {
                               const Poly swapped = d.swap_symbols("u", "v");
                               r.check(swapped == d,
                                       [&] { return Discrepancy{key_string(g, parts), d.str(), swapped.str()}; });
                           });
}

VerificationReport vanishing_bound_suite(CorrelatorTable& table, int max_n) {
    auto r = make_report("vanishing-bound", {{"max_n", max_n}});
    ReportTimer timer(r);
    for (int n = 1; n <= max_n; ++n)
        for (int g = 0; 2 * g <= n + 1; ++g) {
            const Poly d = table.raw(g, {n});
            const bool should_vanish = 2 * g > n - 1;
            r.check(d.is_zero() == should_vanish, [&] {
                return Discrepancy{key_string(g, {n}), should_vanish ? "0" : "nonzero", d.str()};
            });
        }
    return r;
}

VerificationReport kp_oracle_suite(CorrelatorTable& table, int max_n) {
    auto r = make_report("kp-oracle", {{"max_n", max_n}});
    ReportTimer timer(r);
    for (int n = 1; n <= max_n; ++n) {
        const Poly expected = kp_one_point(n), actual = one_point_all_genus(table, n);
        r.check(expected == actual,
                [&] { return Discrepancy{"n=" + std::to_string(n), expected.str(), actual.str()}; });
    }
    return r;
}

VerificationReport operator_form_suite(CorrelatorTable& table, int order) {
    auto r = make_report("operator-form", {{"order", order}});
    r.order = order;
    ReportTimer timer(r);
    for (auto [g, n] : {std::pair{0, 3}, std::pair{1, 1}, std::pair{1, 2}}) {
        if (order < 2 * n) {
            r.status = Status::skipped;
            r.note = "order below the leading degree of G_{" + std::to_string(g) + "," + std::to_string(n) + "}";
            return r;
        }
        compare_series(npoint_series(table, g, n, order), assemble_operator_form(g, n - 1, order), r);
    }
    return r;
}

}  // namespace dessin::virasoro

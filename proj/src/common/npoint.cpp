#include "dessin/npoint.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dessin/algebra/json_io.hpp"

namespace dessin {

using algebra::Exponents;
using algebra::Poly;

const algebra::AlphabetPtr& suv_alphabet() {
    static const auto alphabet = algebra::make_alphabet({"s", "u", "v"});
    return alphabet;
}

std::vector<std::string> slot_names(int n, int first) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("y" + std::to_string(first + i));
    return names;
}

std::string tuple_string(const std::vector<int>& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        out += (i ? "," : "") + std::to_string(a[i]);
    return out + ")";
}

Poly NPointSeries::coefficient(const std::vector<int>& a) const {
    if (std::accumulate(a.begin(), a.end(), 0) + static_cast<int>(a.size()) > order)
        throw std::out_of_range("NPointSeries: tuple " + tuple_string(a) + " beyond order " + std::to_string(order));
    auto it = coefficients.find(a);
    return it == coefficients.end() ? Poly(suv_alphabet()) : it->second;
}

Poly NPointSeries::to_polynomial(const std::vector<std::string>& slots) const {
    algebra::Alphabet names = *suv_alphabet();
    names.insert(names.end(), slots.begin(), slots.end());
    const auto alphabet = algebra::make_alphabet(std::move(names));
    Poly out(alphabet);
    for (const auto& [a, c] : coefficients) {
        const Poly lifted = c.embed(alphabet);
        for (const auto& [e, x] : lifted.terms()) {
            Exponents f(e);
            for (std::size_t i = 0; i < a.size(); ++i)
                f[3 + i] = a[i] + 1;
            out.add_term(f, x);
        }
    }
    return out;
}

NPointSeries NPointSeries::from_polynomial(int genus, int n, int order, const Poly& p,
                                           const std::vector<std::string>& slots) {
    NPointSeries out{genus, n, order, {}};
    std::vector<std::size_t> slot_idx;
    for (const auto& name : slots) {
        const auto idx = algebra::symbol_index(p.alphabet(), name);
        if (!idx)
            throw std::invalid_argument("NPointSeries::from_polynomial: missing slot " + name);
        slot_idx.push_back(*idx);
    }
    std::vector<std::optional<std::size_t>> coeff_idx;
    for (const auto& sym : *suv_alphabet())
        coeff_idx.push_back(algebra::symbol_index(p.alphabet(), sym));
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> a;
        int total = 0;
        for (auto i : slot_idx) {
            if (e[i] < 2)
                throw std::domain_error("NPointSeries::from_polynomial: slot exponent " + std::to_string(e[i]) +
                                        " below 2");
            a.push_back(e[i] - 1);
            total += e[i];
        }
        if (total > order)
            continue;
        Exponents f(3, 0);
        for (std::size_t k = 0; k < 3; ++k)
            if (coeff_idx[k])
                f[k] = e[*coeff_idx[k]];
        for (std::size_t i = 0; i < e.size(); ++i) {
            const bool known = std::find(slot_idx.begin(), slot_idx.end(), i) != slot_idx.end() ||
                               std::find(coeff_idx.begin(), coeff_idx.end(), std::optional<std::size_t>(i)) !=
                                   coeff_idx.end();
            if (!known && e[i] != 0)
                throw std::domain_error("NPointSeries::from_polynomial: stray symbol " + p.alphabet()[i]);
        }
        auto it = out.coefficients.try_emplace(a, suv_alphabet()).first;
        it->second.add_term(f, c);
    }
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
        it = it->second.is_zero() ? out.coefficients.erase(it) : std::next(it);
    return out;
}

NPointSeries NPointSeries::truncated(int new_order) const {
    NPointSeries out{genus, n, std::min(order, new_order), {}};
    for (const auto& [a, c] : coefficients)
        if (std::accumulate(a.begin(), a.end(), 0) + static_cast<int>(a.size()) <= out.order)
            out.coefficients.emplace(a, c);
    return out;
}

std::optional<std::vector<int>> NPointSeries::symmetry_defect() const {
    for (const auto& [a, c] : coefficients) {
        std::vector<int> perm(a);
        std::sort(perm.begin(), perm.end());
        do {
            auto it = coefficients.find(perm);
            if (it == coefficients.end() || !(it->second == c))
                return a;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

nlohmann::json NPointSeries::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [a, c] : coefficients)
        terms.push_back({{"a", a}, {"poly", algebra::to_json(c)}});
    return {{"genus", genus}, {"n", n}, {"order", order}, {"coefficients", std::move(terms)}};
}

NPointSeries NPointSeries::from_json(const nlohmann::json& j) {
    NPointSeries out{j.at("genus").get<int>(), j.at("n").get<int>(), j.at("order").get<int>(), {}};
    for (const auto& t : j.at("coefficients"))
        out.coefficients.emplace(t.at("a").get<std::vector<int>>(),
                                 algebra::poly_from_json(t.at("poly")).embed(suv_alphabet()));
    return out;
}

void compare_series(const NPointSeries& expected, const NPointSeries& actual, VerificationReport& report) {
    const int order = std::min(expected.order, actual.order);
    std::set<std::vector<int>> keys;
    for (const auto* s : {&expected, &actual})
        for (const auto& [a, c] : s->coefficients)
            if (std::accumulate(a.begin(), a.end(), 0) + static_cast<int>(a.size()) <= order)
                keys.insert(a);
    if (expected.n != actual.n)
        report.fail("n", std::to_string(expected.n), std::to_string(actual.n));
    for (const auto& a : keys) {
        const Poly e = expected.coefficient(a), x = actual.coefficient(a);
        report.check(e == x, [&] { return Discrepancy{tuple_string(a), e.str(), x.str()}; });
    }
}

std::vector<std::vector<int>> index_tuples(int n, int order) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(static_cast<std::size_t>(n), 1);
    if (n == 0 || 2 * n > order)
        return out;
    // odometer over tuples with Σ(a_i+1) ≤ order
    while (true) {
        out.push_back(a);
        int i = n - 1;
        while (i >= 0) {
            ++a[static_cast<std::size_t>(i)];
            if (std::accumulate(a.begin(), a.end(), 0) + n <= order)
                break;
            a[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0)
            break;
    }
    return out;
}

}  // namespace dessin

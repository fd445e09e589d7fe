#include "dessin/algebra/json_io.hpp"

#include <stdexcept>
#include <string>

namespace dessin::algebra {

namespace {

template <class C>
nlohmann::json encode(const LaurentPolynomial<C>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())  // std::map order is lexicographic
        terms.push_back({{"e", e}, {"c", c.wire()}});
    return {{"alphabet", p.alphabet()}, {"terms", std::move(terms)}};
}

template <class C>
LaurentPolynomial<C> decode(const nlohmann::json& j) {
    try {
        auto alphabet = make_alphabet(j.at("alphabet").get<Alphabet>());
        LaurentPolynomial<C> p(alphabet);
        for (const auto& t : j.at("terms")) {
            auto e = t.at("e").get<Exponents>();
            if (e.size() != alphabet->size())
                throw std::invalid_argument("polynomial JSON: exponent length mismatch");
            C c = C::parse(t.at("c").get<std::string>());
            if (c.is_zero())
                throw std::invalid_argument("polynomial JSON: stored zero coefficient");
            p.add_term(e, c);
        }
        return p;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + ex.what());
    }
}

}  // namespace

nlohmann::json to_json(const Poly& p) { return encode(p); }
nlohmann::json to_json(const GaussPoly& p) { return encode(p); }
Poly poly_from_json(const nlohmann::json& j) { return decode<Rational>(j); }
GaussPoly gauss_poly_from_json(const nlohmann::json& j) { return decode<GaussianRational>(j); }

}  // namespace dessin::algebra

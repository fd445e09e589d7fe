#include "dessin/algebra/laurent.hpp"

#include <sstream>

namespace dessin::algebra {

AlphabetPtr make_alphabet(std::initializer_list<std::string> symbols) {
    return make_alphabet(Alphabet(symbols));
}

AlphabetPtr make_alphabet(Alphabet symbols) {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        for (std::size_t j = i + 1; j < symbols.size(); ++j)
            if (symbols[i] == symbols[j])
                throw std::invalid_argument("alphabet: duplicate symbol '" + symbols[i] + "'");
    return std::make_shared<const Alphabet>(std::move(symbols));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || *a == *b;
}

std::optional<std::size_t> symbol_index(const Alphabet& alphabet, std::string_view symbol) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == symbol)
            return i;
    return std::nullopt;
}

AlphabetPtr merge_alphabets(const AlphabetPtr& first, const AlphabetPtr& second) {
    if (same_alphabet(first, second))
        return first;
    Alphabet merged = *first;
    for (const auto& s : *second)
        if (!symbol_index(merged, s))
            merged.push_back(s);
    if (merged.size() == first->size())
        return first;
    return make_alphabet(std::move(merged));
}

namespace {

template <class C>
std::string coefficient_text(const C& c, bool& negative) {
    if constexpr (std::is_same_v<C, Rational>) {
        negative = c.sign() < 0;
        return (negative ? -c : c).str();
    } else {
        if (c.is_real()) {
            negative = c.real().sign() < 0;
            return (negative ? -c.real() : c.real()).str();
        }
        if (c.real().is_zero()) {
            negative = c.imag().sign() < 0;
            return (negative ? -c.imag() : c.imag()).str() + "*i";
        }
        negative = false;
        return "(" + c.str() + ")";
    }
}

}  // namespace

template <class C>
std::string LaurentPolynomial<C>::str() const {
    if (terms_.empty())
        return "0";
    std::vector<const typename TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_)
        order.push_back(&t);
    auto total = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::stable_sort(order.begin(), order.end(), [&](auto* x, auto* y) {
        const int dx = total(x->first), dy = total(y->first);
        if (dx != dy)
            return dx > dy;
        return x->first > y->first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : order) {
        bool negative = false;
        std::string coeff = coefficient_text(t->second, negative);
        std::string mono;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            const int k = t->first[i];
            if (k == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += (*alphabet_)[i];
            if (k != 1)
                mono += "^" + std::to_string(k);
        }
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (mono.empty())
            out << coeff;
        else if (coeff == "1")
            out << mono;
        else
            out << coeff << "*" << mono;
    }
    return out.str();
}

GaussPoly to_gaussian(const Poly& p) {
    GaussPoly out(p.alphabet_ptr());
    for (const auto& [e, c] : p.terms())
        out.add_term(e, GaussianRational(c));
    return out;
}

Poly real_part_strict(const GaussPoly& p) {
    Poly out(p.alphabet_ptr());
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_real())
            throw std::domain_error("real_part_strict: non-real coefficient " + c.str());
        out.add_term(e, c.real());
    }
    return out;
}

template class LaurentPolynomial<Rational>;
template class LaurentPolynomial<GaussianRational>;

}  // namespace dessin::algebra

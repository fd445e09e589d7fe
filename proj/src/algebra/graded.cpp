#include "dessin/algebra/graded.hpp"

#include <map>
#include <stdexcept>

namespace dessin::algebra {

Grading::Grading(AlphabetPtr alphabet, const std::vector<std::string>& graded, int max_degree)
    : alphabet_(std::move(alphabet)), max_degree_(max_degree) {
    for (const auto& name : graded) {
        const auto idx = symbol_index(*alphabet_, name);
        if (!idx)
            throw std::invalid_argument("grading symbol '" + name + "' missing from alphabet");
        slots_.push_back(*idx);
    }
}

Poly Grading::truncate(const Poly& p) const { return p.embed(alphabet_).truncate_degree(slots_, max_degree_); }

Poly Grading::mul(const Poly& a, const Poly& b) const {
    const Poly x = a.embed(alphabet_), y = b.embed(alphabet_);
    Poly out(alphabet_);
    if (x.is_zero() || y.is_zero())
        return out;
    const std::size_t n = alphabet_->size();
    Exponents e(n);
    for (const auto& [ea, ca] : x.terms()) {
        const int da = degree(ea);
        if (da > max_degree_)
            continue;
        for (const auto& [eb, cb] : y.terms()) {
            if (da + degree(eb) > max_degree_)
                continue;
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Grading::lift(const Series& s) const {
    if (s.order() < max_degree_)
        throw TruncationError("grading lift: series in " + s.variable() + " valid only through order " +
                              std::to_string(s.order()));
    return truncate(s.truncated(max_degree_).to_polynomial());
}

std::optional<Poly> divide_by_difference(const Poly& p, const std::string& x, const std::string& y) {
    const auto xi = symbol_index(p.alphabet(), x);
    const auto yi = symbol_index(p.alphabet(), y);
    if (!xi || !yi)
        throw std::invalid_argument("divide_by_difference: unknown symbol");
    // Group by the exponents of every other symbol and by total degree in
    // (x, y); within a group p = Σ_i p_i x^i y^(d−i) and the quotient
    // Σ_i q_i x^i y^(d−1−i) satisfies q_i = q_{i−1} − p_i, q_{d−1} = p_d.
    using Key = std::pair<Exponents, int>;
    std::map<Key, std::map<int, Rational>> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest(e);
        const int d = e[*xi] + e[*yi];
        const int i = e[*xi];
        rest[*xi] = rest[*yi] = 0;
        groups[{rest, d}][i] = c;
    }
    Poly out(p.alphabet_ptr());
    for (const auto& [key, row] : groups) {
        const auto& [rest, d] = key;
        const int lo = row.begin()->first;
        const int hi = row.rbegin()->first;
        Rational q(0);
        for (int i = lo; i < hi; ++i) {
            auto it = row.find(i);
            q = q - (it == row.end() ? Rational(0) : it->second);
            if (!q.is_zero()) {
                Exponents e(rest);
                e[*xi] = i;
                e[*yi] = d - 1 - i;
                out.add_term(e, q);
            }
        }
        if (!(q == row.rbegin()->second))
            return std::nullopt;
    }
    return out;
}

}  // namespace dessin::algebra

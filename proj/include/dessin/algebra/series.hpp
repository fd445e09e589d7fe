#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dessin/algebra/laurent.hpp"

namespace dessin::algebra {

/// Sentinel order of a series that is known exactly (a Laurent polynomial).
inline constexpr int kExact = std::numeric_limits<int>::max() / 4;

/// Thrown when a caller reads a coefficient beyond the valid order, or an
/// operation would need more precision than its inputs carry.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int saturating_add(int a, int b) {
    if (a >= kExact || b >= kExact)
        return kExact;
    return a + b;
}

/// Univariate Laurent series Σ c_e·t^e whose coefficients are Laurent
/// polynomials in other symbols, valid through exponent `order` inclusive.
/// Every operation propagates the order it can guarantee; reading past it
/// throws TruncationError.
template <class C>
class TruncatedSeries {
public:
    using P = LaurentPolynomial<C>;

    TruncatedSeries(std::string variable, AlphabetPtr coefficient_alphabet, int order = kExact)
        : variable_(std::move(variable)), alphabet_(std::move(coefficient_alphabet)), order_(order) {}

    static TruncatedSeries monomial(std::string variable, P coeff, int exponent, int order = kExact) {
        TruncatedSeries s(std::move(variable), coeff.alphabet_ptr(), order);
        s.set(exponent, std::move(coeff));
        return s;
    }

    static TruncatedSeries constant(std::string variable, P coeff, int order = kExact) {
        return monomial(std::move(variable), std::move(coeff), 0, order);
    }

    /// Builds Σ coeffs[k]·t^(first+k).
    static TruncatedSeries from_coefficients(std::string variable, AlphabetPtr alphabet, int first,
                                             const std::vector<P>& coeffs, int order = kExact) {
        TruncatedSeries s(std::move(variable), std::move(alphabet), order);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            s.set(first + static_cast<int>(k), coeffs[k].embed(s.alphabet_));
        return s;
    }

    /// Splits `variable` out of a polynomial; the result is exact unless an
    /// order is given.
    static TruncatedSeries from_polynomial(const P& p, const std::string& variable, int order = kExact) {
        const auto idx = symbol_index(p.alphabet(), variable);
        Alphabet rest;
        for (const auto& sym : p.alphabet())
            if (sym != variable)
                rest.push_back(sym);
        TruncatedSeries s(variable, make_alphabet(std::move(rest)), order);
        for (const auto& [e, c] : p.terms()) {
            Exponents f;
            f.reserve(e.size());
            int k = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (idx && i == *idx)
                    k = e[i];
                else
                    f.push_back(e[i]);
            }
            if (k > order)
                continue;
            auto it = s.coeffs_.try_emplace(k, s.alphabet_).first;
            it->second.add_term(f, c);
        }
        s.prune();
        return s;
    }

    const std::string& variable() const { return variable_; }
    const AlphabetPtr& coefficient_alphabet() const { return alphabet_; }
    int order() const { return order_; }
    bool is_exact() const { return order_ >= kExact; }
    const std::map<int, P>& coefficients() const { return coeffs_; }

    /// First exponent with a nonzero coefficient; order+1 when none is known.
    int valuation() const {
        if (!coeffs_.empty())
            return coeffs_.begin()->first;
        return saturating_add(order_, 1);
    }

    /// Largest exponent with a stored nonzero coefficient.
    std::optional<int> top_exponent() const {
        if (coeffs_.empty())
            return std::nullopt;
        return coeffs_.rbegin()->first;
    }

    P coefficient(int e) const {
        if (e > order_)
            throw TruncationError("series in " + variable_ + ": coefficient of exponent " +
                                  std::to_string(e) + " requested beyond order " +
                                  std::to_string(order_));
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? P(alphabet_) : it->second;
    }

    /// Coefficient of t^-1.
    P residue() const { return coefficient(-1); }

    TruncatedSeries truncated(int order) const {
        TruncatedSeries s(variable_, alphabet_, std::min(order, order_));
        for (const auto& [e, c] : coeffs_)
            if (e <= s.order_)
                s.coeffs_.emplace_hint(s.coeffs_.end(), e, c);
        return s;
    }

    TruncatedSeries shifted(int k) const {
        TruncatedSeries s(variable_, alphabet_, saturating_add(order_, k));
        for (const auto& [e, c] : coeffs_)
            s.coeffs_.emplace_hint(s.coeffs_.end(), e + k, c);
        return s;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries s(*this);
        for (auto& [e, c] : s.coeffs_)
            c = -c;
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_compatible(a, b);
        const auto alpha = merge_alphabets(a.alphabet_, b.alphabet_);
        TruncatedSeries s(a.variable_, alpha, std::min(a.order_, b.order_));
        for (const auto* src : {&a, &b})
            for (const auto& [e, c] : src->coeffs_)
                if (e <= s.order_)
                    s.accumulate(e, c);
        s.prune();
        return s;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        return multiply(a, b, kExact);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const P& p) {
        TruncatedSeries s(a.variable_, merge_alphabets(a.alphabet_, p.alphabet_ptr()), a.order_);
        if (p.is_zero())
            return s;
        for (const auto& [e, c] : a.coeffs_)
            s.set(e, c * p);
        return s;
    }
    friend TruncatedSeries operator*(const P& p, const TruncatedSeries& a) { return a * p; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const C& x) {
        TruncatedSeries s(a.variable_, a.alphabet_, a.order_);
        if (x.is_zero())
            return s;
        for (const auto& [e, c] : a.coeffs_)
            s.coeffs_.emplace_hint(s.coeffs_.end(), e, c * x);
        return s;
    }

    /// Product keeping only exponents ≤ cap (the result order is the
    /// smaller of cap and what the inputs guarantee).
    static TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, int cap) {
        check_compatible(a, b);
        const auto alpha = merge_alphabets(a.alphabet_, b.alphabet_);
        int order = std::min(saturating_add(a.order_, b.valuation()), saturating_add(b.order_, a.valuation()));
        order = std::min(order, cap);
        TruncatedSeries s(a.variable_, alpha, order);
        if (a.coeffs_.empty() || b.coeffs_.empty())
            return s;
        for (const auto& [ea, ca] : a.coeffs_) {
            for (const auto& [eb, cb] : b.coeffs_) {
                const int e = ea + eb;
                if (e > order)
                    break;
                s.accumulate(e, ca * cb);
            }
        }
        s.prune();
        return s;
    }

    /// Multiplicative inverse. The leading coefficient must be a monomial
    /// (a unit of the coefficient ring). Exact inputs need `max_order`.
    TruncatedSeries inverse(int max_order = kExact) const {
        if (coeffs_.empty())
            throw std::domain_error("series inverse: zero series (no known nonzero coefficient)");
        const int v = valuation();
        const P& lead = coeffs_.begin()->second;
        if (!lead.is_monomial())
            throw std::domain_error("series inverse: leading coefficient " + lead.str() +
                                    " is not a unit");
        int order = std::min(max_order, saturating_add(order_, -2 * v));
        if (order >= kExact)
            throw TruncationError("series inverse of an exact series needs an explicit order");
        const P lead_inv = lead.inverse();
        // h = f / (lead·t^v) = 1 + h_1 t + ...
        const int rel = order + v;  // relative precision needed
        std::vector<P> h(static_cast<std::size_t>(std::max(rel, 0)) + 1, P(alphabet_));
        for (const auto& [e, c] : coeffs_) {
            const int k = e - v;
            if (k > rel)
                break;
            h[static_cast<std::size_t>(k)] = c * lead_inv;
        }
        std::vector<P> g(h.size(), P(alphabet_));
        g[0] = P::constant(alphabet_, C(1));
        for (std::size_t n = 1; n < g.size(); ++n) {
            P acc(alphabet_);
            for (std::size_t k = 1; k <= n; ++k)
                if (!h[k].is_zero() && !g[n - k].is_zero())
                    acc -= h[k] * g[n - k];
            g[n] = std::move(acc);
        }
        TruncatedSeries s(variable_, alphabet_, order);
        for (std::size_t n = 0; n < g.size(); ++n)
            if (!g[n].is_zero() && static_cast<int>(n) - v <= order)
                s.coeffs_.emplace(static_cast<int>(n) - v, g[n] * lead_inv);
        return s;
    }

    /// Square root of a series with constant term exactly 1 and no negative
    /// exponents.
    TruncatedSeries sqrt(int max_order = kExact) const {
        require_unit_constant("series sqrt");
        const int order = std::min(max_order, order_);
        if (order >= kExact)
            throw TruncationError("series sqrt of an exact series needs an explicit order");
        std::vector<P> f = dense(order);
        std::vector<P> g(f.size(), P(alphabet_));
        g[0] = P::constant(alphabet_, C(1));
        const C half = C(1) / C(2);
        for (std::size_t n = 1; n < g.size(); ++n) {
            P acc = f[n];
            for (std::size_t k = 1; k < n; ++k)
                if (!g[k].is_zero() && !g[n - k].is_zero())
                    acc -= g[k] * g[n - k];
            g[n] = acc * half;
        }
        return from_dense(g, order);
    }

    /// f^alpha for rational alpha, constant term exactly 1, via the
    /// recurrence n·g_n = Σ_{k=1..n} ((alpha+1)k − n)·f_k·g_{n−k}.
    TruncatedSeries power(const Rational& alpha, int max_order = kExact) const {
        require_unit_constant("series power");
        const int order = std::min(max_order, order_);
        if (order >= kExact)
            throw TruncationError("series power of an exact series needs an explicit order");
        std::vector<P> f = dense(order);
        std::vector<P> g(f.size(), P(alphabet_));
        g[0] = P::constant(alphabet_, C(1));
        const C a1 = C(alpha) + C(1);
        for (std::size_t n = 1; n < g.size(); ++n) {
            P acc(alphabet_);
            for (std::size_t k = 1; k <= n; ++k) {
                if (f[k].is_zero() || g[n - k].is_zero())
                    continue;
                const C w = a1 * C(static_cast<long>(k)) - C(static_cast<long>(n));
                if (!w.is_zero())
                    acc += (f[k] * g[n - k]) * w;
            }
            g[n] = acc * (C(1) / C(static_cast<long>(n)));
        }
        return from_dense(g, order);
    }

    /// Integer power; negative powers go through inverse().
    TruncatedSeries pow(int k, int max_order = kExact) const {
        if (k < 0)
            return inverse(max_order).pow(-k, max_order);
        TruncatedSeries result = constant(variable_, P::constant(alphabet_, C(1)));
        TruncatedSeries base = *this;
        while (k > 0) {
            if (k & 1)
                result = multiply(result, base, max_order);
            k >>= 1;
            if (k)
                base = multiply(base, base, max_order);
        }
        return result;
    }

    TruncatedSeries derivative() const {
        TruncatedSeries s(variable_, alphabet_, saturating_add(order_, -1));
        for (const auto& [e, c] : coeffs_)
            if (e != 0)
                s.coeffs_.emplace_hint(s.coeffs_.end(), e - 1, c * C(static_cast<long>(e)));
        return s;
    }

    /// this(inner): substitutes a series of strictly positive valuation.
    /// The result lives in inner's variable.
    TruncatedSeries compose(const TruncatedSeries& inner) const {
        const int v = inner.valuation();
        if (inner.coeffs_.empty() || v < 1)
            throw std::domain_error("series compose: inner series must have positive valuation");
        if (!coeffs_.empty() && valuation() < 0)
            throw std::domain_error("series compose: outer series has negative exponents");
        const auto alpha = merge_alphabets(alphabet_, inner.alphabet_);
        int order = kExact;
        if (!is_exact())
            order = saturating_add(saturating_add(order_, 1) >= kExact ? kExact : (order_ + 1) * v, -1);
        TruncatedSeries result(inner.variable_, alpha, order);
        TruncatedSeries power_k = constant(inner.variable_, P::constant(alpha, C(1)));
        int k = 0;
        for (const auto& [e, c] : coeffs_) {
            if (e > order_)
                break;
            while (k < e) {
                power_k = multiply(power_k, inner, order);
                ++k;
            }
            result = result + power_k * c;
        }
        return result.truncated(order);
    }

    /// Exponent of the first coefficient where the two series differ within
    /// their common valid window, or nullopt when they agree there.
    std::optional<int> first_difference(const TruncatedSeries& other) const {
        const int order = std::min(order_, other.order_);
        std::map<int, bool> keys;
        for (const auto& [e, c] : coeffs_)
            if (e <= order)
                keys[e] = true;
        for (const auto& [e, c] : other.coeffs_)
            if (e <= order)
                keys[e] = true;
        for (const auto& [e, unused] : keys)
            if (!(coefficient(e) == other.coefficient(e)))
                return e;
        return std::nullopt;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.variable_ == b.variable_ && a.order_ == b.order_ && !a.first_difference(b);
    }

    /// Folds the series variable back into a polynomial over alphabet +
    /// {variable}; only the stored terms are kept.
    P to_polynomial() const {
        Alphabet syms = *alphabet_;
        syms.push_back(variable_);
        const auto target = make_alphabet(std::move(syms));
        P out(target);
        for (const auto& [e, c] : coeffs_)
            for (const auto& [f, x] : c.terms()) {
                Exponents g(f);
                g.push_back(e);
                out.add_term(g, x);
            }
        return out;
    }

private:
    static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.variable_ != b.variable_)
            throw std::invalid_argument("series in different variables: " + a.variable_ + " vs " +
                                        b.variable_);
    }

    void require_unit_constant(const char* what) const {
        if (coeffs_.empty() || coeffs_.begin()->first < 0)
            throw std::domain_error(std::string(what) + ": series must start at exponent 0");
        const P c0 = coefficient(0);
        if (!(c0 == P::constant(alphabet_, C(1))))
            throw std::domain_error(std::string(what) + ": constant term must be 1, got " + c0.str());
    }

    std::vector<P> dense(int order) const {
        std::vector<P> f(static_cast<std::size_t>(order) + 1, P(alphabet_));
        for (const auto& [e, c] : coeffs_) {
            if (e > order)
                break;
            f[static_cast<std::size_t>(e)] = c;
        }
        return f;
    }

    TruncatedSeries from_dense(const std::vector<P>& g, int order) const {
        TruncatedSeries s(variable_, alphabet_, order);
        for (std::size_t n = 0; n < g.size(); ++n)
            if (!g[n].is_zero())
                s.coeffs_.emplace_hint(s.coeffs_.end(), static_cast<int>(n), g[n]);
        return s;
    }

    void set(int e, P c) {
        if (e > order_ || c.is_zero()) {
            coeffs_.erase(e);
            return;
        }
        coeffs_.insert_or_assign(e, c.embed(alphabet_));
    }

    void accumulate(int e, const P& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end())
            coeffs_.emplace(e, c.embed(alphabet_));
        else
            it->second += c;
    }

    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
    }

    std::string variable_;
    AlphabetPtr alphabet_;
    int order_;
    std::map<int, P> coeffs_;
};

using Series = TruncatedSeries<Rational>;
using GaussSeries = TruncatedSeries<GaussianRational>;

extern template class TruncatedSeries<Rational>;
extern template class TruncatedSeries<GaussianRational>;

}  // namespace dessin::algebra

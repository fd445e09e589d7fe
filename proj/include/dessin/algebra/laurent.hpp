#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dessin/algebra/gaussian.hpp"
#include "dessin/algebra/rational.hpp"

namespace dessin::algebra {

using Exponents = std::vector<int>;
using Alphabet = std::vector<std::string>;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::initializer_list<std::string> symbols);
AlphabetPtr make_alphabet(Alphabet symbols);

/// Union of two alphabets: every symbol of `first` in order, then the symbols
/// of `second` that `first` lacks. Returns `first` itself when it already
/// covers `second`.
AlphabetPtr merge_alphabets(const AlphabetPtr& first, const AlphabetPtr& second);

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Index of `symbol` in `alphabet`, or nullopt.
std::optional<std::size_t> symbol_index(const Alphabet& alphabet, std::string_view symbol);

/// Sparse multivariate Laurent polynomial over a coefficient field C
/// (Rational or GaussianRational). Terms are keyed by exponent vectors whose
/// length equals the alphabet size; zero coefficients are never stored, so
/// structural equality is mathematical equality.
template <class C>
class LaurentPolynomial {
public:
    using Coeff = C;
    using TermMap = std::map<Exponents, C>;

    LaurentPolynomial() : alphabet_(make_alphabet({})) {}
    explicit LaurentPolynomial(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    static LaurentPolynomial constant(AlphabetPtr alphabet, C value) {
        LaurentPolynomial p(std::move(alphabet));
        if (!value.is_zero())
            p.terms_.emplace(Exponents(p.alphabet_->size(), 0), std::move(value));
        return p;
    }

    static LaurentPolynomial monomial(AlphabetPtr alphabet, Exponents exponents, C value) {
        if (exponents.size() != alphabet->size())
            throw std::invalid_argument("LaurentPolynomial::monomial: exponent length mismatch");
        LaurentPolynomial p(std::move(alphabet));
        if (!value.is_zero())
            p.terms_.emplace(std::move(exponents), std::move(value));
        return p;
    }

    static LaurentPolynomial variable(AlphabetPtr alphabet, std::string_view name, int power = 1) {
        const auto idx = symbol_index(*alphabet, name);
        if (!idx)
            throw std::invalid_argument("LaurentPolynomial::variable: unknown symbol '" +
                                        std::string(name) + "'");
        Exponents e(alphabet->size(), 0);
        e[*idx] = power;
        return monomial(std::move(alphabet), std::move(e), C(1));
    }

    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    const Alphabet& alphabet() const { return *alphabet_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 &&
                std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                            [](int e) { return e == 0; }));
    }
    bool is_monomial() const { return terms_.size() == 1; }

    C coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const { return coefficient(Exponents(alphabet_->size(), 0)); }

    /// Adds c·x^e in place.
    void add_term(const Exponents& e, const C& c) {
        if (c.is_zero())
            return;
        if (e.size() != alphabet_->size())
            throw std::invalid_argument("LaurentPolynomial::add_term: exponent length mismatch");
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// symbol that occurs with a nonzero exponent.
    LaurentPolynomial embed(const AlphabetPtr& target) const {
        if (same_alphabet(alphabet_, target))
            return with_alphabet_ptr(target);
        std::vector<std::optional<std::size_t>> map(alphabet_->size());
        for (std::size_t i = 0; i < alphabet_->size(); ++i)
            map[i] = symbol_index(*target, (*alphabet_)[i]);
        LaurentPolynomial out(target);
        for (const auto& [e, c] : terms_) {
            Exponents f(target->size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!map[i])
                    throw std::invalid_argument("LaurentPolynomial::embed: symbol '" +
                                                (*alphabet_)[i] + "' missing from target");
                f[*map[i]] = e[i];
            }
            out.add_term(f, c);
        }
        return out;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r(*this);
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        if (!same_alphabet(alphabet_, o.alphabet_)) {
            const auto m = merge_alphabets(alphabet_, o.alphabet_);
            *this = embed(m);
            return *this += o.embed(m);
        }
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this += -o; }

    LaurentPolynomial& operator*=(const C& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const C& s) { return a *= s; }
    friend LaurentPolynomial operator*(const C& s, LaurentPolynomial a) { return a *= s; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (!same_alphabet(a.alphabet_, b.alphabet_)) {
            const auto m = merge_alphabets(a.alphabet_, b.alphabet_);
            return a.embed(m) * b.embed(m);
        }
        LaurentPolynomial r(a.alphabet_);
        if (a.is_zero() || b.is_zero())
            return r;
        const std::size_t n = a.alphabet_->size();
        Exponents e(n);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < n; ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (same_alphabet(a.alphabet_, b.alphabet_))
            return a.terms_ == b.terms_;
        const auto m = merge_alphabets(a.alphabet_, b.alphabet_);
        return a.embed(m).terms_ == b.embed(m).terms_;
    }

    LaurentPolynomial pow(int k) const {
        if (k < 0) {
            if (!is_monomial())
                throw std::domain_error("LaurentPolynomial::pow: negative power of a non-monomial");
            const auto& [e, c] = *terms_.begin();
            Exponents f(e);
            for (auto& x : f)
                x = -x;
            return monomial(alphabet_, std::move(f), c.inverse()).pow(-k);
        }
        LaurentPolynomial result = constant(alphabet_, C(1));
        LaurentPolynomial base = *this;
        while (k > 0) {
            if (k & 1)
                result = result * base;
            k >>= 1;
            if (k)
                base = base * base;
        }
        return result;
    }

    /// Multiplicative inverse; defined only for monomials.
    LaurentPolynomial inverse() const { return pow(-1); }

    /// Highest / lowest exponent of `symbol` (0 for the zero polynomial).
    int degree(std::string_view symbol) const { return extreme_degree(symbol, true); }
    int min_degree(std::string_view symbol) const { return extreme_degree(symbol, false); }

    /// Total degree of a term restricted to the listed symbol indices.
    static int partial_degree(const Exponents& e, std::span<const std::size_t> slots) {
        int d = 0;
        for (auto i : slots)
            d += e[i];
        return d;
    }

    /// Drops every term whose degree in the listed symbols exceeds `max_degree`.
    LaurentPolynomial truncate_degree(std::span<const std::size_t> slots, int max_degree) const {
        LaurentPolynomial r(alphabet_);
        for (const auto& [e, c] : terms_)
            if (partial_degree(e, slots) <= max_degree)
                r.terms_.emplace_hint(r.terms_.end(), e, c);
        return r;
    }

    /// Replaces `symbol` by `value`. Negative exponents require `value` to be a
    /// monomial.
    LaurentPolynomial substitute(std::string_view symbol, const LaurentPolynomial& value) const {
        const auto idx = symbol_index(*alphabet_, symbol);
        if (!idx)
            return *this;
        const auto target = merge_alphabets(alphabet_, value.alphabet_);
        const LaurentPolynomial v = value.embed(target);
        std::map<int, LaurentPolynomial> powers;
        LaurentPolynomial out(target);
        for (const auto& [e, c] : terms_) {
            Exponents rest(e);
            const int k = rest[*idx];
            rest[*idx] = 0;
            auto it = powers.find(k);
            if (it == powers.end())
                it = powers.emplace(k, v.pow(k)).first;
            LaurentPolynomial term = monomial(alphabet_, rest, c).embed(target);
            out += term * it->second;
        }
        return out;
    }

    /// Replaces x_from^k by x_to^(k·scale); `to` may equal `from`. Used for
    /// the square-root renamings u = a², v = b² and their inverses.
    LaurentPolynomial rescale_symbol(std::string_view from, std::string_view to, int scale) const {
        const auto fi = symbol_index(*alphabet_, from);
        if (!fi)
            return *this;
        AlphabetPtr target = alphabet_;
        if (!symbol_index(*target, to)) {
            Alphabet ext = *target;
            ext.emplace_back(to);
            target = make_alphabet(std::move(ext));
        }
        const auto ti = *symbol_index(*target, to);
        LaurentPolynomial out(target);
        for (const auto& [e, c] : terms_) {
            Exponents f(target->size(), 0);
            std::copy(e.begin(), e.end(), f.begin());
            const int k = f[*fi];
            f[*fi] = 0;
            f[ti] += k * scale;
            out.add_term(f, c);
        }
        return out;
    }

    /// Inverse of rescale_symbol: x_from^k ↦ x_to^(k/divisor); nullopt when some
    /// exponent of `from` is not divisible by `divisor`.
    std::optional<LaurentPolynomial> contract_symbol(std::string_view from, std::string_view to,
                                                     int divisor) const {
        const auto fi = symbol_index(*alphabet_, from);
        if (!fi)
            return *this;
        for (const auto& [e, c] : terms_)
            if (e[*fi] % divisor != 0)
                return std::nullopt;
        AlphabetPtr target = alphabet_;
        if (!symbol_index(*target, to)) {
            Alphabet ext = *target;
            ext.emplace_back(to);
            target = make_alphabet(std::move(ext));
        }
        const auto ti = *symbol_index(*target, to);
        LaurentPolynomial out(target);
        for (const auto& [e, c] : terms_) {
            Exponents f(target->size(), 0);
            std::copy(e.begin(), e.end(), f.begin());
            const int k = f[*fi];
            f[*fi] = 0;
            f[ti] += k / divisor;
            out.add_term(f, c);
        }
        return out;
    }

    /// Exchanges two symbols.
    LaurentPolynomial swap_symbols(std::string_view x, std::string_view y) const {
        const auto xi = symbol_index(*alphabet_, x);
        const auto yi = symbol_index(*alphabet_, y);
        if (!xi || !yi)
            throw std::invalid_argument("LaurentPolynomial::swap_symbols: unknown symbol");
        LaurentPolynomial out(alphabet_);
        for (const auto& [e, c] : terms_) {
            Exponents f(e);
            std::swap(f[*xi], f[*yi]);
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    /// x ↦ sign·x^power for one symbol (power = ±1 covers z ↦ 1/z and z ↦ −z).
    LaurentPolynomial transform_symbol(std::string_view symbol, int power, int sign) const {
        const auto idx = symbol_index(*alphabet_, symbol);
        if (!idx)
            return *this;
        LaurentPolynomial out(alphabet_);
        for (const auto& [e, c] : terms_) {
            Exponents f(e);
            const int k = f[*idx];
            f[*idx] = k * power;
            out.add_term(f, (sign < 0 && (k % 2 != 0)) ? -c : c);
        }
        return out;
    }

    /// Division by the monomial c·x^e.
    LaurentPolynomial divide_monomial(const Exponents& e, const C& c) const {
        LaurentPolynomial out(alphabet_);
        const C inv = c.inverse();
        for (const auto& [f, d] : terms_) {
            Exponents g(f);
            for (std::size_t i = 0; i < g.size(); ++i)
                g[i] -= e[i];
            out.terms_.emplace(std::move(g), d * inv);
        }
        return out;
    }

    /// Human rendering: terms by descending total degree, then descending
    /// exponent vector; coefficients as p/q.
    std::string str() const;

private:
    LaurentPolynomial with_alphabet_ptr(const AlphabetPtr& target) const {
        LaurentPolynomial r(*this);
        r.alphabet_ = target;
        return r;
    }

    int extreme_degree(std::string_view symbol, bool highest) const {
        const auto idx = symbol_index(*alphabet_, symbol);
        if (!idx || terms_.empty())
            return 0;
        int d = terms_.begin()->first[*idx];
        for (const auto& [e, c] : terms_)
            d = highest ? std::max(d, e[*idx]) : std::min(d, e[*idx]);
        return d;
    }

    AlphabetPtr alphabet_;
    TermMap terms_;
};

using Poly = LaurentPolynomial<Rational>;
using GaussPoly = LaurentPolynomial<GaussianRational>;

/// Lifts a rational polynomial to Gaussian coefficients.
GaussPoly to_gaussian(const Poly& p);
/// Real part of a Gaussian polynomial; throws if any coefficient is non-real.
Poly real_part_strict(const GaussPoly& p);

extern template class LaurentPolynomial<Rational>;
extern template class LaurentPolynomial<GaussianRational>;

}  // namespace dessin::algebra

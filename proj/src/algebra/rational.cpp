#include "dessin/algebra/rational.hpp"
#include "dessin/algebra/gaussian.hpp"

#include <stdexcept>
#include <string>

namespace dessin::algebra {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    if (s.empty())
        throw std::invalid_argument("Rational::parse: empty string");
    const auto slash = s.find('/');
    mpz_class num, den = 1;
    try {
        num = mpz_class(s.substr(0, slash), 10);
        if (slash != std::string::npos)
            den = mpz_class(s.substr(slash + 1), 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    }
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0)
        return inverse().pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::wire() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r, mpz_class(1));
}

Rational factorial(long n) {
    if (n < 0)
        throw std::domain_error("factorial of a negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r, mpz_class(1));
}

Rational double_factorial_odd(long n) {
    if (n < 0)
        return Rational(1);
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * n + 1));
    return Rational(r, mpz_class(1));
}

// GaussianRational ---------------------------------------------------------

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("GaussianRational::parse: empty string");
    if (s.size() < 2 || s.substr(s.size() - 2) != "*i")
        return GaussianRational(Rational::parse(s));
    s.resize(s.size() - 2);
    // split at the last sign that is not the leading character
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        return {Rational(0), Rational::parse(s)};
    const Rational re = Rational::parse(s.substr(0, split));
    std::string im = s.substr(split);
    if (im[0] == '+')
        im.erase(0, 1);
    return {re, Rational::parse(im)};
}

GaussianRational GaussianRational::inverse() const {
    const Rational n = norm();
    if (n.is_zero())
        throw std::domain_error("GaussianRational: inverse of zero");
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::str() const {
    if (im_.is_zero())
        return re_.str();
    if (re_.is_zero())
        return im_.str() + "*i";
    const std::string sign = im_.sign() < 0 ? "" : "+";
    return re_.str() + sign + im_.str() + "*i";
}

std::string GaussianRational::wire() const {
    const std::string sign = im_.sign() < 0 ? "" : "+";
    return re_.wire() + sign + im_.wire() + "*i";
}

}  // namespace dessin::algebra

#include "virmod/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace virmod {

namespace {

bool is_rat_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    std::size_t slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (num.empty()) return false;
    for (char c : num)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    if (slash == std::string_view::npos) return true;
    std::string_view den = s.substr(slash + 1);
    if (den.empty()) return false;
    for (char c : den)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_rat(std::string_view s) {
    if (!is_rat_token(s))
        throw std::invalid_argument("invalid rational: '" + std::string(s) + "'");
    Rational q(std::string(s), 10);
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    // Trim surrounding whitespace only; the grammar itself has none.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty scalar");

    if (text.back() != 'i') return GaussianRational(parse_rat(text));

    std::string_view body = text.substr(0, text.size() - 1);
    // Any '+'/'-' past position 0 separates the real part from the
    // imaginary coefficient (rationals carry no interior signs).
    std::size_t sep = std::string_view::npos;
    for (std::size_t p = 1; p < body.size(); ++p) {
        if (body[p] == '+' || body[p] == '-') {
            sep = p;
            break;
        }
    }

    Rational re(0);
    std::string_view imag = body;
    if (sep != std::string_view::npos) {
        re = parse_rat(body.substr(0, sep));
        imag = body.substr(sep);
    }

    Rational im;
    if (imag.empty()) {
        if (sep != std::string_view::npos)
            throw std::invalid_argument("invalid scalar: '" + std::string(text) + "'");
        im = 1;  // bare "i"
    } else if (imag == "+") {
        im = 1;
    } else if (imag == "-") {
        im = -1;
    } else if (imag.front() == '+') {
        im = parse_rat(imag.substr(1));
    } else {
        im = parse_rat(imag);
    }
    return GaussianRational(std::move(re), std::move(im));
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return rat_str(re_);

    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rat_str(im_) + "i";
    }
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return rat_str(re_) + "+" + imag;
    return rat_str(re_) + imag;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
    Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational pow(const GaussianRational& a, long exponent) {
    if (exponent == 0) return GaussianRational(1);
    if (exponent < 0) {
        if (a.is_zero())
            throw std::invalid_argument("zero raised to a negative power");
        return pow(GaussianRational(1) / a, -exponent);
    }
    GaussianRational base = a;
    GaussianRational result(1);
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1UL;
        if (e != 0) base *= base;
    }
    return result;
}

GaussianRational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return GaussianRational(Rational(f));
}

GaussianRational binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return GaussianRational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
    return GaussianRational(Rational(b));
}

}  // namespace virmod

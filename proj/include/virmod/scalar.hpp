#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace virmod {

/// Arbitrary-precision rational, kept canonical by GMP (positive
/// denominator, coprime numerator/denominator).
using Rational = mpq_class;

/// Element of the Gaussian rationals Q(i): re + im*i with exact rational
/// components. This is the coefficient field of the whole library, so that
/// every identity check is an exact equality with no tolerances.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { canonicalize(); }
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {
        canonicalize();
    }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    /// Exact parse of the scalar grammar:
    ///   rat   := ['-'] digits ['/' digits]
    ///   gauss := rat | [rat ('+'|'-')] rat 'i' | rat 'i'
    /// e.g. "2", "-1/3", "1/2+3i", "-i". Throws std::invalid_argument on
    /// anything else (including a zero denominator).
    static GaussianRational parse(std::string_view text);

    /// Canonical text form, parseable by parse(). Pure reals print as
    /// rationals, pure imaginaries as "bi" (coefficient 1 omitted).
    std::string str() const;

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Total order (real part first); used only for container keys.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
    }

private:
    void canonicalize() {
        re_.canonicalize();
        im_.canonicalize();
    }

    Rational re_;
    Rational im_;
};

/// Exact integer power with pow(a, 0) == 1 for every a (0^0 == 1 by the
/// series convention). Throws std::invalid_argument for 0 raised to a
/// negative exponent.
GaussianRational pow(const GaussianRational& a, long exponent);

/// n! as an exact scalar.
GaussianRational factorial(unsigned long n);

/// Binomial coefficient with the convention binomial(n, k) == 0 for k < 0
/// or k > n.
GaussianRational binomial(unsigned long n, long k);

}  // namespace virmod

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "virmod/scalar.hpp"

namespace virmod {

/// Dense univariate polynomial in the indeterminate d (the operator
/// variable of the Omega modules) over GaussianRational. Coefficients are
/// stored constant-term first and kept trimmed, so the leading coefficient
/// is nonzero unless the polynomial is zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(GaussianRational constant);
    static Poly variable();
    static Poly monomial(int degree, GaussianRational coeff = GaussianRational(1));
    static Poly from_coeffs(std::vector<GaussianRational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    /// Coefficient of d^n (zero beyond the degree).
    const GaussianRational& coeff(int n) const;

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scale(const GaussianRational& c) const;

    /// Taylor shift: the polynomial g with g(d) = f(d - m), computed by
    /// Horner-style synthetic substitution.
    Poly shift(const GaussianRational& m) const;

    GaussianRational eval(const GaussianRational& x) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Text form "c0 + c1*d + c2*d^2 + ..." (zero terms skipped, zero
    /// polynomial prints "0"), scalars in the scalar grammar.
    std::string str() const;

private:
    void trim();

    std::vector<GaussianRational> coeffs_;
};

/// J_m^n = prod_{j=m+1}^{m+n} (d - j), with J_m^0 = 1. For fixed m the
/// family {J_m^n | n >= 0} is a degree-triangular basis of the polynomial
/// ring.
Poly j_basis(long m, unsigned long n);

/// Coefficients c_n with f = sum_n c_n J_m^n, solved by descending-degree
/// elimination (the J-basis is monic and degree-triangular). Empty for the
/// zero polynomial.
std::vector<GaussianRational> to_j_basis(const Poly& f, long m);

}  // namespace virmod

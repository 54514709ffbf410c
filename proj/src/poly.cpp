#include "virmod/poly.hpp"

#include <stdexcept>

namespace virmod {

namespace {
const GaussianRational kZero(0);
}

Poly::Poly(GaussianRational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly Poly::variable() { return monomial(1); }

Poly Poly::monomial(int degree, GaussianRational coeff) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    Poly p;
    if (coeff.is_zero()) return p;
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, kZero);
    p.coeffs_.back() = std::move(coeff);
    return p;
}

Poly Poly::from_coeffs(std::vector<GaussianRational> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

const GaussianRational& Poly::coeff(int n) const {
    if (n < 0 || static_cast<std::size_t>(n) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<std::size_t>(n)];
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly::from_coeffs(std::move(out));
}

Poly Poly::scale(const GaussianRational& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::shift(const GaussianRational& m) const {
    // f(d - m) via Horner: result = result * (d - m) + c_k, high k first.
    Poly y = Poly::from_coeffs({-m, GaussianRational(1)});
    Poly result;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        result = result * y;
        result += Poly(coeffs_[idx]);
    }
    return result;
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        acc *= x;
        acc += coeffs_[idx];
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[n].str();
        if (n == 1) {
            out += "*d";
        } else if (n > 1) {
            out += "*d^" + std::to_string(n);
        }
    }
    return out;
}

Poly j_basis(long m, unsigned long n) {
    Poly p(GaussianRational(1));
    for (unsigned long step = 1; step <= n; ++step) {
        long j = m + static_cast<long>(step);
        p = p * Poly::from_coeffs({GaussianRational(-j), GaussianRational(1)});
    }
    return p;
}

std::vector<GaussianRational> to_j_basis(const Poly& f, long m) {
    std::vector<GaussianRational> out;
    if (f.is_zero()) return out;
    int deg = *f.degree();
    out.assign(static_cast<std::size_t>(deg) + 1, GaussianRational(0));
    Poly rest = f;
    for (int n = deg; n >= 0; --n) {
        GaussianRational c = rest.coeff(n);
        out[static_cast<std::size_t>(n)] = c;
        if (!c.is_zero())
            rest -= j_basis(m, static_cast<unsigned long>(n)).scale(c);
    }
    return out;
}

}  // namespace virmod

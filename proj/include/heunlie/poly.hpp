#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunlie/exactnum.hpp"

namespace heunlie {

/// Univariate polynomial over Q(i), coefficients indexed by degree.
/// The coefficient vector never carries trailing zeros; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    Poly(Complex c) {  // NOLINT(google-explicit-constructor)
        coeffs_.push_back(std::move(c));
        trim();
    }
    Poly(long c) : Poly(Complex(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Complex(c)) {}   // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly x() { return Poly(std::vector<Complex>{0, 1}); }

    static Poly monomial(std::size_t k, Complex c = 1) {
        std::vector<Complex> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    /// a·x + b
    static Poly linear(Complex a, Complex b) { return Poly(std::vector<Complex>{std::move(b), std::move(a)}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Complex coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex(); }
    Complex leading() const { return coeffs_.empty() ? Complex() : coeffs_.back(); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }

    Poly& operator*=(const Complex& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Complex& c) { return a *= c; }
    friend Poly operator*(const Complex& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Complex eval(const Complex& at) const {
        Complex acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// p(a·x + b), by Horner's scheme in the substituted variable.
    Poly compose_affine(const Complex& a, const Complex& b) const {
        Poly inner = linear(a, b);
        Poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    /// p(x + s)
    Poly shifted(const Complex& s) const { return s.is_zero() ? *this : compose_affine(1, s); }

    Poly derivative(std::size_t order = 1) const {
        if (order == 0) return *this;
        if (coeffs_.size() <= order) return {};
        std::vector<Complex> out(coeffs_.size() - order);
        for (std::size_t k = order; k < coeffs_.size(); ++k) {
            Rational falling = 1;
            for (std::size_t j = 0; j < order; ++j) falling *= Rational(static_cast<long>(k - j));
            out[k - order] = coeffs_[k] * Complex(falling);
        }
        return Poly(std::move(out));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
            const Complex& c = coeffs_[idx];
            if (c.is_zero()) continue;
            std::string term;
            bool real = c.is_real();
            bool negative = real && c.re().sign() < 0;
            Complex mag = negative ? -c : c;
            std::string mag_str = mag.str();
            if (!real && !mag.re().is_zero()) mag_str = "(" + mag_str + ")";
            if (idx == 0) {
                term = mag_str;
            } else {
                if (!mag.is_one()) term = mag_str;
                term += "x";
                if (idx > 1) term += "^" + std::to_string(idx);
            }
            if (out.empty()) {
                out = negative ? "-" + term : term;
            } else {
                out += negative ? "-" : "+";
                out += term;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Complex> coeffs_;
};

/// Rising factorial (p)_k = p (p+1) ... (p+k-1) of a polynomial argument.
inline Poly pochhammer(const Poly& p, std::size_t k) {
    Poly acc(1);
    for (std::size_t j = 0; j < k; ++j) acc = acc * (p + Poly(static_cast<long>(j)));
    return acc;
}

inline Complex pochhammer(const Complex& a, std::size_t k) {
    Complex acc(1);
    for (std::size_t j = 0; j < k; ++j) acc *= a + Complex(static_cast<long>(j));
    return acc;
}

inline Rational factorial(std::size_t k) {
    Rational acc(1);
    for (std::size_t j = 2; j <= k; ++j) acc *= Rational(static_cast<long>(j));
    return acc;
}

/// Terminating hypergeometric series sum_{k=0}^{terms} prod (num_i)_k / prod (den_j)_k * z^k / k!.
/// Numerator parameters may depend on x; the argument may be a polynomial in x.
/// A zero Pochhammer symbol in the denominator is an error.
inline Poly hypergeometric(std::size_t terms, const std::vector<Poly>& num, const std::vector<Complex>& den,
                           const Poly& z) {
    Poly sum;
    Poly zk(1);
    for (std::size_t k = 0; k <= terms; ++k) {
        Complex denom(factorial(k));
        for (const auto& b : den) denom *= pochhammer(b, k);
        if (denom.is_zero()) throw std::domain_error("hypergeometric: vanishing lower parameter");
        Poly term = zk * denom.inv();
        for (const auto& a : num) term = term * pochhammer(a, k);
        sum += term;
        zk = zk * z;
    }
    return sum;
}

/// Coefficients c_n with p = sum c_n basis_n, for a basis triangular in degree.
inline std::vector<Complex> expand_in_basis(Poly p, const std::vector<Poly>& basis) {
    if (p.is_zero()) return {};
    auto top = static_cast<std::size_t>(p.degree());
    if (basis.size() <= top) throw std::invalid_argument("expand_in_basis: basis too short");
    for (std::size_t n = 0; n <= top; ++n) {
        if (basis[n].degree() != static_cast<long>(n))
            throw std::invalid_argument("expand_in_basis: basis element " + std::to_string(n) +
                                        " does not have degree " + std::to_string(n));
    }
    std::vector<Complex> out(top + 1);
    for (std::size_t n = top + 1; n-- > 0;) {
        Complex c = p.coeff(n) / basis[n].leading();
        out[n] = c;
        if (!c.is_zero()) p -= basis[n] * c;
    }
    return out;
}

}  // namespace heunlie

#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals Q(i).
//
// Every value is kept in canonical form (reduced, positive denominator), so
// equality is plain structural comparison. Division by zero never reaches GMP;
// it is reported as DivisionByZero, or as an empty optional from the try_ forms.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace heunlie {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : value_(n) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const mpz_class& n) : value_(n) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.value_ = std::move(q);
        return r;
    }

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const { return from_mpq(-value_); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::optional<Rational> try_inverse() const {
        if (is_zero()) return std::nullopt;
        return from_mpq(1 / value_);
    }

    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw DivisionByZero();
            return from_mpq(1 / value_).pow(-e);
        }
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    // Exact square root if this is the square of a rational.
    std::optional<Rational> sqrt() const {
        if (sign() < 0) return std::nullopt;
        if (mpz_perfect_square_p(value_.get_num_mpz_t()) == 0 ||
            mpz_perfect_square_p(value_.get_den_mpz_t()) == 0)
            return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), value_.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), value_.get_den_mpz_t());
        return Rational(n, d);
    }

    std::string str() const {
        std::string s = value_.get_num().get_str();
        if (value_.get_den() != 1) s += "/" + value_.get_den().get_str();
        return s;
    }

private:
    mpq_class value_{0};
};

/// Gaussian rational re + im·i.
class Complex {
public:
    Complex() = default;
    Complex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Complex(long n) : re_(n) {}                   // NOLINT(google-explicit-constructor)
    Complex(int n) : re_(n) {}                    // NOLINT(google-explicit-constructor)
    Complex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Complex i() { return Complex(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

    Complex conj() const { return {re_, -im_}; }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    Complex operator-() const { return {-re_, -im_}; }

    Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Complex& operator*=(const Complex& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o) { return *this *= o.inv(); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    Complex inv() const {
        auto r = try_inv();
        if (!r) throw DivisionByZero();
        return *r;
    }

    std::optional<Complex> try_inv() const {
        if (is_zero()) return std::nullopt;
        Rational n = norm2();
        return Complex(re_ / n, -im_ / n);
    }

    Complex pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Complex result(1), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        if (re_.is_zero()) return im_.str() + "i";
        if (im_.sign() < 0) return re_.str() + "-" + im_.abs().str() + "i";
        return re_.str() + "+" + im_.str() + "i";
    }

private:
    Rational re_;
    Rational im_;
};

inline std::optional<Complex> try_div(const Complex& a, const Complex& b) {
    auto inv = b.try_inv();
    if (!inv) return std::nullopt;
    return a * *inv;
}

/// Lexicographic (re, im) order; used for shift keys and deterministic root ordering.
struct ComplexLess {
    bool operator()(const Complex& a, const Complex& b) const {
        if (auto c = a.re() <=> b.re(); c != 0) return c < 0;
        return a.im() < b.im();
    }
};

/// Exact square root in Q(i), if one exists.
inline std::optional<Complex> sqrt_exact(const Complex& z) {
    if (z.is_zero()) return Complex(0);
    if (z.is_real()) {
        if (z.re().sign() > 0) {
            if (auto r = z.re().sqrt()) return Complex(*r);
            return std::nullopt;
        }
        if (auto r = (-z.re()).sqrt()) return Complex(0, *r);
        return std::nullopt;
    }
    // (p + qi)^2 = z  =>  p^2 = (re + |z|)/2, q = im / (2p)
    auto modulus = z.norm2().sqrt();
    if (!modulus) return std::nullopt;
    auto p = ((z.re() + *modulus) / Rational(2)).sqrt();
    if (!p || p->is_zero()) return std::nullopt;
    Rational q = z.im() / (Rational(2) * *p);
    return Complex(*p, q);
}

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Complex parse() {
        if (text_.empty()) throw ParseError("empty scalar", 0);
        Rational first = rational();
        if (at_end()) return first;
        char c = text_[pos_];
        if (c == 'i') {
            ++pos_;
            expect_end();
            return Complex(0, first);
        }
        if (c != '+' && c != '-') throw ParseError("expected '+', '-', 'i' or end", pos_);
        bool negate = c == '-';
        ++pos_;
        if (negate && !at_end() && text_[pos_] == '-') throw ParseError("unexpected '-'", pos_);
        Rational second = rational();
        if (at_end() || text_[pos_] != 'i') throw ParseError("expected 'i'", pos_);
        ++pos_;
        expect_end();
        return Complex(first, negate ? -second : second);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void expect_end() const {
        if (!at_end()) throw ParseError("trailing characters", pos_);
    }

    mpz_class digits() {
        std::size_t start = pos_;
        while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start) throw ParseError("expected digits", start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Rational rational() {
        bool negative = false;
        if (!at_end() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        mpz_class num = digits();
        mpz_class den = 1;
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            std::size_t den_pos = pos_;
            den = digits();
            if (den == 0) throw ParseError("zero denominator", den_pos);
        }
        if (negative) num = -num;
        return Rational(num, den);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `R | R "+" R "i" | R "-" R "i" | R "i"` with R = `[-]digits["/"digits]`.
inline Complex parse_scalar(std::string_view text) { return detail::ScalarParser(text).parse(); }

inline std::string render(const Complex& z) { return z.str(); }

}  // namespace heunlie

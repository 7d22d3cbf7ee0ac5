#pragma once

// Normal-ordered linear operators on C[x]:
//
//   sum_s p_s(x) T_s          (shift kind,        T_s f(x) = f(x + s), s in Q(i))
//   sum_j p_j(x) D^j          (differential kind, D = d/dx)
//
// Coefficients sit to the left of the shift/derivative symbols. Storage is
// canonical (no zero coefficients), so operator equality is map equality and
// is_zero() is purely syntactic. A pure multiplication operator (only s = 0 /
// j = 0) belongs to both kinds; mixing genuine shift and derivative terms in
// one operator is rejected.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "heunlie/exactnum.hpp"
#include "heunlie/poly.hpp"

namespace heunlie {

class KindMismatch : public std::logic_error {
public:
    KindMismatch() : std::logic_error("cannot combine shift and differential operators") {}
};

enum class OperatorKind { Multiplication, Shift, Differential };

class Operator {
public:
    using ShiftMap = std::map<Complex, Poly, ComplexLess>;
    using DiffMap = std::map<std::size_t, Poly>;

    Operator() = default;

    static Operator multiplication(Poly p) {
        Operator op;
        op.add_shift(Complex(), std::move(p));
        return op;
    }
    static Operator scalar(const Complex& c) { return multiplication(Poly(c)); }
    static Operator identity() { return scalar(1); }
    static Operator x() { return multiplication(Poly::x()); }

    static Operator shift(const Complex& s, Poly coeff = Poly(1)) {
        Operator op;
        op.add_shift(s, std::move(coeff));
        return op;
    }

    static Operator derivative(std::size_t order, Poly coeff = Poly(1)) {
        Operator op;
        if (order == 0)
            op.add_shift(Complex(), std::move(coeff));
        else
            op.add_diff(order, std::move(coeff));
        return op;
    }

    OperatorKind kind() const {
        if (!diff_.empty()) return OperatorKind::Differential;
        for (const auto& [s, p] : shifts_)
            if (!s.is_zero()) return OperatorKind::Shift;
        return OperatorKind::Multiplication;
    }

    bool is_zero() const { return shifts_.empty() && diff_.empty(); }

    const ShiftMap& shift_terms() const { return shifts_; }
    const DiffMap& diff_terms() const { return diff_; }

    Poly shift_coeff(const Complex& s) const {
        auto it = shifts_.find(s);
        return it == shifts_.end() ? Poly() : it->second;
    }

    /// Coefficient of D^order; order 0 is the multiplication part.
    Poly diff_coeff(std::size_t order) const {
        if (order == 0) return shift_coeff(Complex());
        auto it = diff_.find(order);
        return it == diff_.end() ? Poly() : it->second;
    }

    /// Largest coefficient degree over all terms (-1 for the zero operator).
    long max_coeff_degree() const {
        long d = -1;
        for (const auto& [s, p] : shifts_) d = std::max(d, p.degree());
        for (const auto& [j, p] : diff_) d = std::max(d, p.degree());
        return d;
    }

    Operator operator-() const {
        Operator r = *this;
        for (auto& [s, p] : r.shifts_) p = -p;
        for (auto& [j, p] : r.diff_) p = -p;
        return r;
    }

    Operator& operator+=(const Operator& o) {
        check_compatible(*this, o);
        for (const auto& [s, p] : o.shifts_) add_shift(s, p);
        for (const auto& [j, p] : o.diff_) add_diff(j, p);
        return *this;
    }
    Operator& operator-=(const Operator& o) { return *this += -o; }

    Operator& operator*=(const Complex& c) {
        if (c.is_zero()) {
            shifts_.clear();
            diff_.clear();
            return *this;
        }
        for (auto& [s, p] : shifts_) p *= c;
        for (auto& [j, p] : diff_) p *= c;
        return *this;
    }

    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator+(Operator a, const Complex& c) { return a += scalar(c); }
    friend Operator operator-(Operator a, const Complex& c) { return a -= scalar(c); }
    friend Operator operator*(Operator a, const Complex& c) { return a *= c; }
    friend Operator operator*(const Complex& c, Operator a) { return a *= c; }

    /// Composition a∘b, re-normal-ordered.
    friend Operator operator*(const Operator& a, const Operator& b) {
        check_compatible(a, b);
        Operator out;
        if (a.kind() == OperatorKind::Differential || b.kind() == OperatorKind::Differential) {
            // (p D^j)(q D^k) = p sum_l C(j,l) q^{(l)} D^{j-l+k}
            auto each = [](const Operator& op, auto&& fn) {
                if (auto it = op.shifts_.find(Complex()); it != op.shifts_.end()) fn(std::size_t{0}, it->second);
                for (const auto& [j, p] : op.diff_) fn(j, p);
            };
            each(a, [&](std::size_t j, const Poly& p) {
                each(b, [&](std::size_t k, const Poly& q) {
                    Rational binom(1);
                    for (std::size_t l = 0; l <= j; ++l) {
                        if (l > 0) binom = binom * Rational(static_cast<long>(j - l + 1)) / Rational(static_cast<long>(l));
                        Poly dq = q.derivative(l);
                        if (dq.is_zero()) break;
                        std::size_t order = j - l + k;
                        Poly term = p * dq * Complex(binom);
                        if (order == 0)
                            out.add_shift(Complex(), std::move(term));
                        else
                            out.add_diff(order, std::move(term));
                    }
                });
            });
            return out;
        }
        // (p T_s)(q T_t) = p q(x+s) T_{s+t}
        for (const auto& [s, p] : a.shifts_)
            for (const auto& [t, q] : b.shifts_) out.add_shift(s + t, p * q.shifted(s));
        return out;
    }

    friend bool operator==(const Operator& a, const Operator& b) {
        return a.shifts_ == b.shifts_ && a.diff_ == b.diff_;
    }

    std::string str() const;

private:
    static void check_compatible(const Operator& a, const Operator& b) {
        OperatorKind ka = a.kind(), kb = b.kind();
        if ((ka == OperatorKind::Shift && kb == OperatorKind::Differential) ||
            (ka == OperatorKind::Differential && kb == OperatorKind::Shift))
            throw KindMismatch();
    }

    void add_shift(const Complex& s, Poly p) {
        if (p.is_zero()) return;
        auto [it, inserted] = shifts_.try_emplace(s, std::move(p));
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) shifts_.erase(it);
        }
        if (!s.is_zero() && !diff_.empty()) throw KindMismatch();
    }

    void add_diff(std::size_t order, Poly p) {
        if (p.is_zero()) return;
        for (const auto& [s, q] : shifts_)
            if (!s.is_zero()) throw KindMismatch();
        auto [it, inserted] = diff_.try_emplace(order, std::move(p));
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) diff_.erase(it);
        }
    }

    ShiftMap shifts_;
    DiffMap diff_;
};

inline Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }
inline Operator anticommutator(const Operator& a, const Operator& b) { return a * b + b * a; }

inline Poly apply(const Operator& op, const Poly& f) {
    Poly out;
    for (const auto& [s, p] : op.shift_terms()) out += p * f.shifted(s);
    for (const auto& [j, p] : op.diff_terms()) out += p * f.derivative(j);
    return out;
}

/// Independent zero test: applies op to x^0..x^{m-1}, where m is the number of
/// distinct shifts (shift kind) or the highest derivative order + 1. A nonzero
/// normal-ordered operator always moves one of these probes.
inline bool probe_zero(const Operator& op) {
    std::size_t probes = 1;
    if (op.kind() == OperatorKind::Differential) {
        probes = op.diff_terms().rbegin()->first + 1;
    } else {
        probes = std::max<std::size_t>(1, op.shift_terms().size());
    }
    for (std::size_t k = 0; k < probes; ++k)
        if (!apply(op, Poly::monomial(k)).is_zero()) return false;
    return true;
}

/// g(x)^{-1} ∘ op ∘ g(x) for g with constant shift ratios g(x+s)/g(x) = mult(s).
/// mult must cover every shift of op and be multiplicative wherever sums of its
/// keys are keys again; mult(0), if given, must be 1.
inline Operator conjugate_by_character(const Operator& op, const std::map<Complex, Complex, ComplexLess>& mult) {
    if (op.kind() == OperatorKind::Differential)
        throw std::invalid_argument("conjugate_by_character: differential operator");
    for (const auto& [s, m] : mult) {
        if (m.is_zero()) throw std::invalid_argument("conjugate_by_character: zero multiplier at shift " + s.str());
        if (s.is_zero() && !m.is_one()) throw std::invalid_argument("conjugate_by_character: mult(0) != 1");
        for (const auto& [t, n] : mult) {
            auto it = mult.find(s + t);
            if (it != mult.end() && !(it->second == m * n))
                throw std::invalid_argument("conjugate_by_character: not a character at " + s.str() + " + " + t.str());
        }
    }
    Operator out;
    for (const auto& [s, p] : op.shift_terms()) {
        if (s.is_zero()) {
            out += Operator::multiplication(p);
            continue;
        }
        auto it = mult.find(s);
        if (it == mult.end()) throw std::invalid_argument("conjugate_by_character: no multiplier for shift " + s.str());
        out += Operator::shift(s, p * it->second);
    }
    return out;
}

/// Character c^s on the given shifts (c^x conjugation for integer shifts).
inline std::map<Complex, Complex, ComplexLess> power_character(const Complex& base, std::initializer_list<long> shifts) {
    std::map<Complex, Complex, ComplexLess> m;
    for (long s : shifts) m.emplace(Complex(s), base.pow(s));
    return m;
}

/// e^{-γx} ∘ op ∘ e^{γx}: every D^j becomes (D + γ)^j.
inline Operator conjugate_exponential(const Operator& op, const Complex& gamma) {
    if (op.kind() == OperatorKind::Shift) throw std::invalid_argument("conjugate_exponential: shift operator");
    Operator out = Operator::multiplication(op.diff_coeff(0));
    for (const auto& [j, p] : op.diff_terms()) {
        Rational binom(1);
        for (std::size_t l = 0; l <= j; ++l) {
            // C(j, l) gamma^{j-l} D^l
            if (l > 0) binom = binom * Rational(static_cast<long>(j - l + 1)) / Rational(static_cast<long>(l));
            Complex c = gamma.pow(static_cast<long>(j - l)) * Complex(binom);
            if (c.is_zero()) continue;
            out += Operator::derivative(l, p * c);
        }
    }
    return out;
}

inline std::string Operator::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto emit = [&out](const Poly& p, const std::string& symbol) {
        if (!out.empty()) out += " + ";
        std::string ps = p.str();
        if (symbol.empty()) {
            out += ps;
        } else {
            out += "(" + ps + ")*" + symbol;
        }
    };
    if (auto it = shifts_.find(Complex()); it != shifts_.end()) emit(it->second, "");
    for (const auto& [s, p] : shifts_)
        if (!s.is_zero()) emit(p, "S[" + s.str() + "]");
    for (const auto& [j, p] : diff_) emit(p, "D^" + std::to_string(j));
    return out;
}

inline std::string to_string(const Operator& op) { return op.str(); }

}  // namespace heunlie

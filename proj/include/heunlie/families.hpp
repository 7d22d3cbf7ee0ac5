#pragma once

// Orthogonal polynomial families attached to the realizations, with their
// eigenvalue, ladder and Heun-operator identities.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heunlie/check.hpp"
#include "heunlie/exactnum.hpp"
#include "heunlie/heun.hpp"
#include "heunlie/lie_models.hpp"
#include "heunlie/operator.hpp"
#include "heunlie/poly.hpp"

namespace heunlie {

enum class PolyFamily { Krawtchouk, Meixner, MeixnerPollaczek, Laguerre, Charlier, ContinuousHahn, Jacobi };

inline std::string to_string(PolyFamily f) {
    switch (f) {
        case PolyFamily::Krawtchouk: return "krawtchouk";
        case PolyFamily::Meixner: return "meixner";
        case PolyFamily::MeixnerPollaczek: return "meixner-pollaczek";
        case PolyFamily::Laguerre: return "laguerre";
        case PolyFamily::Charlier: return "charlier";
        case PolyFamily::ContinuousHahn: return "continuous-hahn";
        case PolyFamily::Jacobi: return "jacobi";
    }
    return "?";
}

/// A family with its parameters. Conventions (hypergeometric forms):
///   krawtchouk        K_n(x;p,N)     = 2F1(-n,-x;-N;1/p)                          params p, N
///   meixner           M_n(x;b,c)     = 2F1(-n,-x;b;1-1/c)                         params beta, c
///   meixner-pollaczek P_n(x;phi)     = (2l)_n/n! e^{in phi} 2F1(-n,l+ix;2l;1-e^{-2i phi})   params lambda, e (= e^{i phi})
///   laguerre          L_n^(a)(x)     = (a+1)_n/n! 1F1(-n;a+1;x)                   params a
///   charlier          C_n(x;a)       = 2F0(-n,-x;;-1/a)                           params a
///   continuous-hahn   p_n(x;a,b,c,d) = i^n (a+c)_n (a+d)_n/n! 3F2(-n,n+a+b+c+d-1,a+ix;a+c,a+d;1)
///   jacobi            P_n^(al,be)(x) = (al+1)_n/n! 2F1(-n,n+al+be+1;al+1;(1-x)/2)  params alpha, beta
struct FamilySpec {
    PolyFamily family = PolyFamily::Krawtchouk;
    std::map<std::string, Complex> params;
    std::optional<long> max_degree;

    const Complex& param(const std::string& name) const {
        auto it = params.find(name);
        if (it == params.end()) throw std::out_of_range(to_string(family) + ": no parameter " + name);
        return it->second;
    }
};

inline FamilySpec krawtchouk_spec(const Rational& p, long N) {
    return {PolyFamily::Krawtchouk, {{"p", Complex(p)}, {"N", Complex(N)}}, N};
}
inline FamilySpec meixner_spec(const Rational& beta, const Rational& c) {
    return {PolyFamily::Meixner, {{"beta", Complex(beta)}, {"c", Complex(c)}}, std::nullopt};
}
inline FamilySpec meixner_pollaczek_spec(const Rational& lambda, const Complex& e) {
    return {PolyFamily::MeixnerPollaczek, {{"lambda", Complex(lambda)}, {"e", e}}, std::nullopt};
}
inline FamilySpec laguerre_spec(const Rational& a) { return {PolyFamily::Laguerre, {{"a", Complex(a)}}, std::nullopt}; }
inline FamilySpec charlier_spec(const Rational& a) { return {PolyFamily::Charlier, {{"a", Complex(a)}}, std::nullopt}; }
inline FamilySpec continuous_hahn_spec(const Complex& a, const Complex& b, const Complex& c, const Complex& d) {
    return {PolyFamily::ContinuousHahn, {{"a", a}, {"b", b}, {"c", c}, {"d", d}}, std::nullopt};
}
inline FamilySpec jacobi_spec(const Complex& alpha, const Complex& beta) {
    return {PolyFamily::Jacobi, {{"alpha", alpha}, {"beta", beta}}, std::nullopt};
}

/// Degree-n member of the family. Throws std::out_of_range past max_degree.
inline Poly ortho_poly(const FamilySpec& spec, long n) {
    if (n < 0) throw std::out_of_range("negative degree");
    if (spec.max_degree && n > *spec.max_degree)
        throw std::out_of_range(to_string(spec.family) + ": degree " + std::to_string(n) + " exceeds " +
                                std::to_string(*spec.max_degree));
    const auto k = static_cast<std::size_t>(n);
    const Complex i = Complex::i();
    const Poly x = Poly::x();
    const Poly mn(Complex(-n));
    switch (spec.family) {
        case PolyFamily::Krawtchouk:
            return hypergeometric(k, {mn, -x}, {-spec.param("N")}, Poly(spec.param("p").inv()));
        case PolyFamily::Meixner:
            return hypergeometric(k, {mn, -x}, {spec.param("beta")}, Poly(Complex(1) - spec.param("c").inv()));
        case PolyFamily::MeixnerPollaczek: {
            const Complex& l = spec.param("lambda");
            const Complex& e = spec.param("e");
            Complex pre = pochhammer(Complex(2) * l, k) / Complex(factorial(k)) * e.pow(n);
            return hypergeometric(k, {mn, Poly(l) + x * i}, {Complex(2) * l}, Poly(Complex(1) - e.pow(-2))) * pre;
        }
        case PolyFamily::Laguerre: {
            Complex a1 = spec.param("a") + Complex(1);
            return hypergeometric(k, {mn}, {a1}, x) * (pochhammer(a1, k) / Complex(factorial(k)));
        }
        case PolyFamily::Charlier:
            return hypergeometric(k, {mn, -x}, {}, Poly(-spec.param("a").inv()));
        case PolyFamily::ContinuousHahn: {
            const Complex &a = spec.param("a"), &b = spec.param("b"), &c = spec.param("c"), &d = spec.param("d");
            Complex pre = i.pow(n) * pochhammer(a + c, k) * pochhammer(a + d, k) / Complex(factorial(k));
            return hypergeometric(k, {mn, Poly(Complex(n) + a + b + c + d - Complex(1)), Poly(a) + x * i}, {a + c, a + d},
                                  Poly(1)) *
                   pre;
        }
        case PolyFamily::Jacobi: {
            const Complex &al = spec.param("alpha"), &be = spec.param("beta");
            Complex a1 = al + Complex(1);
            Poly z = (Poly(1) - x) * Complex(Rational(1, 2));
            return hypergeometric(k, {mn, Poly(Complex(n) + al + be + Complex(1))}, {a1}, z) *
                   (pochhammer(a1, k) / Complex(factorial(k)));
        }
    }
    return {};
}

/// The family diagonalizing Y in the given model. Throws for su2-symmetric.
inline FamilySpec family_spec(const LieModel& m) {
    const auto& p = m.params;
    switch (m.family) {
        case Family::Su2Grid: return krawtchouk_spec(p.pair.sin2_half(), p.N);
        case Family::Su11Elliptic: return meixner_spec(p.kappa, p.pair.tan_half() * p.pair.tan_half());
        case Family::Su11Hyperbolic: return meixner_pollaczek_spec(p.lambda, p.pair.unit());
        case Family::Su11Parabolic: return laguerre_spec(p.a);
        case Family::Ho: return charlier_spec(p.chi * p.chi);
        case Family::Su2Symmetric: break;
    }
    throw std::invalid_argument(to_string(m.family) + " has no polynomial family");
}

/// Eigenvalue of Y on the degree-n member.
inline Complex y_eigenvalue(const LieModel& m, long n) {
    const auto& p = m.params;
    Complex nn(n);
    switch (m.family) {
        case Family::Su2Grid: return nn - Complex(Rational(p.N, 2));
        case Family::Su11Elliptic: return Complex(p.kappa / Rational(2)) + nn;
        case Family::Su11Hyperbolic: return nn + Complex(p.lambda);
        case Family::Su11Parabolic: return nn + Complex((p.a + Rational(1)) / Rational(2));
        case Family::Ho: return nn;
        case Family::Su2Symmetric: break;
    }
    throw std::invalid_argument(to_string(m.family) + " has no polynomial family");
}

struct LadderRule {
    std::string op;  // generator name
    int step;        // +1 raise, -1 lower
    std::function<Complex(long)> coefficient;
};

inline std::vector<LadderRule> ladder_rules(const LieModel& m) {
    const auto& p = m.params;
    switch (m.family) {
        case Family::Su2Grid: {
            Complex cot(p.pair.cot_half()), tan(p.pair.tan_half()), N(p.N);
            return {{"J-", -1, [cot](long n) { return Complex(n) * cot; }},
                    {"J+", 1, [tan, N](long n) { return (N - Complex(n)) * tan; }}};
        }
        case Family::Su11Elliptic: {
            Complex th(p.pair.tan_half()), k(p.kappa);
            return {{"J-", -1, [th](long n) { return Complex(n) / th; }},
                    {"J+", 1, [th, k](long n) { return (k + Complex(n)) * th; }}};
        }
        case Family::Su11Hyperbolic: {
            Complex l(p.lambda);
            return {{"J+", 1, [](long n) { return Complex(n + 1); }},
                    {"J-", -1, [l](long n) { return Complex(2) * l + Complex(n - 1); }}};
        }
        case Family::Su11Parabolic: {
            Complex a(p.a);
            return {{"J+", 1, [](long n) { return Complex(-(n + 1)); }},
                    {"J-", -1, [a](long n) { return -(a + Complex(n)); }}};
        }
        case Family::Ho: {
            Complex chi(p.chi);
            return {{"A+", 1, [chi](long) { return -chi; }},
                    {"A", -1, [chi](long n) { return -Complex(n) / chi; }}};
        }
        case Family::Su2Symmetric: break;
    }
    throw std::invalid_argument(to_string(m.family) + " has no polynomial family");
}

namespace detail {

inline long top_degree(const FamilySpec& spec, long nMax) {
    return spec.max_degree ? std::min(nMax, *spec.max_degree) : nMax;
}

}  // namespace detail

/// Y P_n = lambda_n P_n for n = 0..nMax (capped at the family's top degree).
inline CheckList verify_eigen(const LieModel& m, const FamilySpec& spec, long nMax) {
    CheckList out;
    for (long n = 0; n <= detail::top_degree(spec, nMax); ++n) {
        Poly P = ortho_poly(spec, n);
        Poly res = apply(m.Y, P) - P * y_eigenvalue(m, n);
        out.add("Y P_" + std::to_string(n), res.is_zero(), res.is_zero() ? "" : "residual " + res.str());
    }
    return out;
}

/// Raising and lowering identities; lowering P_0 must give 0.
inline CheckList verify_ladder(const LieModel& m, const FamilySpec& spec, long nMax) {
    CheckList out;
    long top = detail::top_degree(spec, nMax);
    for (const auto& rule : ladder_rules(m)) {
        const Operator& op = m.gen(rule.op);
        for (long n = 0; n <= top; ++n) {
            long target = n + rule.step;
            if (spec.max_degree && target > *spec.max_degree) continue;
            Poly want = target < 0 ? Poly() : ortho_poly(spec, target) * rule.coefficient(n);
            Poly res = apply(op, ortho_poly(spec, n)) - want;
            out.add(rule.op + " P_" + std::to_string(n), res.is_zero(), res.is_zero() ? "" : "residual " + res.str());
        }
    }
    return out;
}

/// The displayed Heun operator of the family. Form::Corrected repairs the
/// displays that disagree with W (Meixner T^- term, Meixner-Pollaczek T^+ factor).
inline Operator closed_form_W(const LieModel& m, const HeunParams& r, Form form = Form::Printed) {
    const auto& p = m.params;
    const auto& [r1, r2, r3, r4, r5] = r;
    const Poly x = Poly::x();
    const Complex i = Complex::i();
    auto [rho4, rho5] = closed_form_rho(m, r);
    switch (m.family) {
        case Family::Su2Grid: {
            Complex N(p.N), c(p.pair.c);
            Poly up = (Poly(N) - x) * (Poly(N * r2 + r1 - r2 - r4) - x * (Complex(2) * r2));
            Poly down = x * (Poly(N * r2 - r1 + r2 - r4) - x * (Complex(2) * r2));
            return Operator::shift(1, up * Complex(p.pair.sin2_half())) +
                   Operator::multiplication(Poly::monomial(2, Complex(2) * r2 * c) + x * *rho4 + Poly(*rho5)) +
                   Operator::shift(-1, down * Complex(p.pair.cos2_half()));
        }
        case Family::Su11Elliptic: {
            Complex k(p.kappa), C(p.pair.c);
            Poly up = (x + Poly(k)) * (x * (Complex(2) * r2) + Poly(r2 * k - r1 + r2 + r4));
            Poly inner = Poly(r2 * k + r1 - r2 + r4);
            Poly down = form == Form::Printed ? x * (x * r2 + inner) : -(x * (x * (Complex(2) * r2) + inner));
            return Operator::shift(1, up * Complex(-p.pair.sin2_half())) +
                   Operator::multiplication(Poly::monomial(2, Complex(2) * r2 * C) + x * *rho4 + Poly(*rho5)) +
                   Operator::shift(-1, down * Complex(p.pair.cos2_half()));
        }
        case Family::Su11Hyperbolic: {
            Complex lam(p.lambda), c(p.pair.c), s(p.pair.s);
            Complex e = p.pair.unit();
            Complex half(Rational(1, 2));
            Complex t = i * r4 / (Complex(2) * s);
            Poly up = (x * i - Poly(lam)) * (x * (i * r2) + Poly((r1 - r2) * half + t));
            if (form == Form::Corrected) up = up * e;
            Poly down = (Poly(lam) + x * i) * (x * (i * r2) + Poly(-(r1 - r2) * half + t)) * e.inv();
            return Operator::shift(i, up) +
                   Operator::multiplication(Poly::monomial(2, Complex(2) * r2 * c) + x * *rho4 + Poly(r5)) +
                   Operator::shift(-i, down);
        }
        case Family::Su11Parabolic: {
            Complex a(p.a);
            Operator d2 = Operator::derivative(2, -(x * (x * r2 + Poly(r4))));
            Operator d1 = Operator::derivative(
                1, Poly::monomial(2, r2) + x * (r1 - Complex(2) * r2 - r2 * a + r4) - Poly(r4 * (Complex(1) + a)));
            return d2 + d1 + Operator::multiplication(x * *rho4 + Poly(*rho5));
        }
        case Family::Ho: {
            Complex chi2(p.chi * p.chi);
            return Operator::shift(-1, x * (Poly(r2 - r4 - r1) - x * (Complex(2) * r2))) +
                   Operator::shift(1, (Poly(r1 - r2 - r4) - x * (Complex(2) * r2)) * chi2) +
                   Operator::multiplication(Poly::monomial(2, Complex(2) * r2) +
                                            x * (Complex(2) * r2 * chi2 + r3 + r4) + Poly(r4 * chi2 + r5));
        }
        case Family::Su2Symmetric: break;
    }
    throw std::invalid_argument(to_string(m.family) + " has no displayed Heun operator");
}

/// Term-by-term differences between two operators (empty when equal).
inline std::vector<std::string> term_differences(const Operator& got, const Operator& shown) {
    std::vector<std::string> out;
    Operator diff = got - shown;
    for (const auto& [s, p] : diff.shift_terms()) {
        std::string sym = s.is_zero() ? "1" : "S[" + s.str() + "]";
        out.push_back(sym + ": computed " + got.shift_coeff(s).str() + ", displayed " + shown.shift_coeff(s).str());
    }
    for (const auto& [j, p] : diff.diff_terms()) {
        std::string sym = "D^" + std::to_string(j);
        out.push_back(sym + ": computed " + got.diff_coeff(j).str() + ", displayed " + shown.diff_coeff(j).str());
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

/// build_W against the displayed Heun operator.
inline Check compare_closed_form(const LieModel& m, const HeunParams& r, Form form = Form::Printed) {
    auto diffs = term_differences(build_W(m, r), closed_form_W(m, r, form));
    return {std::string("closed-form W") + (form == Form::Printed ? "" : " (corrected)"), diffs.empty(), join(diffs)};
}

/// Expansion of W P_n in the family basis has support in {n-1, n, n+1}.
inline CheckList tridiagonality(const LieModel& m, const FamilySpec& spec, const HeunParams& r, long nMax) {
    CheckList out;
    Operator W = build_W(m, r);
    long top = nMax;
    if (spec.max_degree) top = std::min(top, *spec.max_degree - 1);
    std::vector<Poly> basis;
    for (long n = 0; n <= top + 1; ++n) basis.push_back(ortho_poly(spec, n));
    for (long n = 0; n <= top; ++n) {
        std::vector<Poly> head(basis.begin(), basis.begin() + n + 2);
        Poly image = apply(W, basis[n]);
        std::string support;
        bool ok = true;
        if (image.degree() > n + 1) {
            ok = false;
            support = "degree " + std::to_string(image.degree());
        } else {
            auto coeffs = expand_in_basis(image, head);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                if (coeffs[k].is_zero()) continue;
                if (!support.empty()) support += ",";
                support += std::to_string(k);
                if (static_cast<long>(k) + 1 < n) ok = false;
            }
        }
        out.add("W P_" + std::to_string(n) + " tridiagonal", ok, "support {" + support + "}");
    }
    return out;
}

/// Support of W P_n in the family basis, for inspection.
inline std::vector<long> tridiagonal_support(const Operator& W, const FamilySpec& spec, long n) {
    std::vector<Poly> basis;
    Poly image = apply(W, ortho_poly(spec, n));
    for (long k = 0; k <= std::max<long>(image.degree(), 0); ++k) basis.push_back(ortho_poly(spec, k));
    std::vector<long> out;
    auto coeffs = expand_in_basis(image, basis);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) out.push_back(static_cast<long>(k));
    return out;
}

// ---------------------------------------------------------------------------
// Conjugated operators

/// Conjugation of the Meixner-type W to the Hahn-type operator:
///   g^{-1} W g - (r4 e^{-t} + r3) X - 2 r2 e^{-t} X^2
///     = -r2 sinh t [ x(x + (r2 k + r1 - r2 + r4)/(2 r2)) T^-
///                  + (k + x)(x + (r2 k - r1 + r2 + r4)/(q r2)) T^+
///                  - (2x + k)(x + (r2 k + r4)/(2 r2)) ] + r5.
/// Printed: g = tanh^x(t/2), q = 1. Corrected: g = tanh^{-x}(t/2), q = 2.
inline CheckList elliptic_hahn_identity(const LieModel& m, const HeunParams& r, Form form = Form::Printed) {
    if (m.family != Family::Su11Elliptic) throw std::invalid_argument("elliptic_hahn_identity needs su11-elliptic");
    if (r.r2.is_zero()) throw std::invalid_argument("elliptic_hahn_identity needs r2 != 0");
    const auto& p = m.params;
    const auto& [r1, r2, r3, r4, r5] = r;
    const Poly x = Poly::x();
    Complex t(p.pair.tan_half());
    Complex em(p.pair.exp_minus());
    Complex k(p.kappa);
    Complex S(p.pair.s);
    Complex tr = form == Form::Printed ? t : t.inv();
    std::map<Complex, Complex, ComplexLess> mult{{Complex(1), tr}, {Complex(-1), tr.inv()}};
    Operator W = build_W(m, r);
    Operator lhs = conjugate_by_character(W, mult) - m.X * (r4 * em + r3) - m.X * m.X * (Complex(2) * r2 * em);
    Complex two_r2 = Complex(2) * r2;
    Complex q = form == Form::Printed ? r2 : two_r2;
    Operator bracket = Operator::shift(-1, x * (x + Poly((r2 * k + r1 - r2 + r4) / two_r2))) +
                       Operator::shift(1, (Poly(k) + x) * (x + Poly((r2 * k - r1 + r2 + r4) / q))) -
                       Operator::multiplication((x * Complex(2) + Poly(k)) * (x + Poly((r2 * k + r4) / two_r2)));
    Operator rhs = bracket * (-(r2 * S)) + Operator::scalar(r5);
    CheckList out;
    auto diffs = term_differences(lhs, rhs);
    out.add(std::string("conjugated W = Hahn-type operator") + (form == Form::Printed ? "" : " (corrected)"),
            diffs.empty(), join(diffs));
    return out;
}

/// The displayed continuous-Hahn-type operator of the hyperbolic realization.
inline Operator continuous_hahn_operator(const LieModel& m, const HeunParams& r) {
    const auto& p = m.params;
    const auto& [r1, r2, r3, r4, r5] = r;
    const Poly x = Poly::x();
    const Complex i = Complex::i();
    Complex lam(p.lambda), s(p.pair.s);
    Complex re = (r2 - r1) / (Complex(2) * r2);
    Complex im = i * r4 / (Complex(2) * r2 * s);
    return Operator::shift(i, (Poly(lam) - x * i) * (Poly(re - im) - x * i)) +
           Operator::multiplication(Poly::monomial(2, -2) - x * (r4 / (r2 * s)) + Poly(r5 / r2)) +
           Operator::shift(-i, (Poly(lam) + x * i) * (Poly(re + im) + x * i));
}

/// Second continuous Hahn parameter b' = (r2-r1)/(2r2) + i r4/(2 r2 sin phi).
inline Complex continuous_hahn_b(const LieModel& m, const HeunParams& r) {
    return (r.r2 - r.r1) / (Complex(2) * r.r2) +
           Complex::i() * r.r4 / (Complex(2) * r.r2 * Complex(m.params.pair.s));
}

/// (-1)^{ix} conjugation of the displayed operator has eigenvalues
/// -n^2 - (2n+1) lambda + ((lambda+n) r1 + r5)/r2 on p_n(x; lambda, b', lambda, conj b').
/// `d_override` replaces the fourth parameter (negative controls).
inline CheckList hyperbolic_continuous_hahn(const LieModel& m, const HeunParams& r, long nMax,
                                            std::optional<Complex> d_override = std::nullopt) {
    if (m.family != Family::Su11Hyperbolic)
        throw std::invalid_argument("hyperbolic_continuous_hahn needs su11-hyperbolic");
    if (r.r2.is_zero()) throw std::invalid_argument("hyperbolic_continuous_hahn needs r2 != 0");
    const Complex i = Complex::i();
    Complex lam(m.params.lambda);
    Operator Wt = conjugate_by_character(continuous_hahn_operator(m, r), {{i, Complex(-1)}, {-i, Complex(-1)}});
    Complex b = continuous_hahn_b(m, r);
    FamilySpec spec = continuous_hahn_spec(lam, b, lam, d_override.value_or(b.conj()));
    CheckList out;
    for (long n = 0; n <= nMax; ++n) {
        Complex nn(n);
        Complex ev = -(nn * nn) - (Complex(2) * nn + Complex(1)) * lam + ((lam + nn) * r.r1 + r.r5) / r.r2;
        Poly P = ortho_poly(spec, n);
        Poly res = apply(Wt, P) - P * ev;
        out.add("continuous Hahn p_" + std::to_string(n), res.is_zero(),
                res.is_zero() ? "eigenvalue " + ev.str() : "residual " + res.str());
    }
    return out;
}

/// e^{-x/2} W e^{x/2} - (r4/2 + r3) X - r2 X^2, computed.
inline Operator parabolic_conjugated(const LieModel& m, const HeunParams& r) {
    Operator W = build_W(m, r);
    return conjugate_exponential(W, Complex(Rational(1, 2))) - m.X * (r.r4 * Complex(Rational(1, 2)) + r.r3) -
           m.X * m.X * r.r2;
}

/// The displayed Jacobi-type operator. Printed D coefficient (r1 - 2 r2 a - r2) x - r4(1+a);
/// corrected (r1 - r2 a - 2 r2) x - r4(1+a).
inline Operator jacobi_operator(const LieModel& m, const HeunParams& r, Form form = Form::Printed) {
    const auto& [r1, r2, r3, r4, r5] = r;
    const Poly x = Poly::x();
    Complex a(m.params.a);
    Complex lin = form == Form::Printed ? r1 - Complex(2) * r2 * a - r2 : r1 - r2 * a - Complex(2) * r2;
    return Operator::derivative(2, -(x * (x * r2 + Poly(r4)))) +
           Operator::derivative(1, x * lin - Poly(r4 * (Complex(1) + a))) +
           Operator::scalar(Complex(Rational(1, 2)) * (r1 - r2) * (a + Complex(1)) + r5);
}

/// The conjugated-operator identity, then P_n^{(a, -r1/r2)}(2 r2 x / r4 + 1)
/// as eigenfunctions with (r1-r2)(n+(a+1)/2) - r2 n(n+a) + r5.
inline CheckList parabolic_jacobi(const LieModel& m, const HeunParams& r, long nMax, Form form = Form::Printed) {
    if (m.family != Family::Su11Parabolic) throw std::invalid_argument("parabolic_jacobi needs su11-parabolic");
    if (r.r2.is_zero() || r.r4.is_zero()) throw std::invalid_argument("parabolic_jacobi needs r2 != 0 and r4 != 0");
    CheckList out;
    Operator Wt = parabolic_conjugated(m, r);
    auto diffs = term_differences(Wt, jacobi_operator(m, r, form));
    out.add(std::string("conjugated W = Jacobi-type operator") + (form == Form::Printed ? "" : " (corrected)"),
            diffs.empty(), join(diffs));
    Complex a(m.params.a);
    FamilySpec spec = jacobi_spec(a, -r.r1 / r.r2);
    Complex scale = Complex(2) * r.r2 / r.r4;
    for (long n = 0; n <= nMax; ++n) {
        Complex nn(n);
        Complex ev = (r.r1 - r.r2) * (nn + (a + Complex(1)) * Complex(Rational(1, 2))) - r.r2 * nn * (nn + a) + r.r5;
        Poly P = ortho_poly(spec, n).compose_affine(scale, 1);
        Poly res = apply(Wt, P) - P * ev;
        out.add("Jacobi P_" + std::to_string(n), res.is_zero(),
                res.is_zero() ? "eigenvalue " + ev.str() : "residual " + res.str());
    }
    return out;
}

}  // namespace heunlie

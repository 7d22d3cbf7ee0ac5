#pragma once

// Operator models of su(2), su(1,1) and the oscillator algebra, each with its
// bispectral pair (X, Y), frame constants and Casimir.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heunlie/check.hpp"
#include "heunlie/exactnum.hpp"
#include "heunlie/linsolve.hpp"
#include "heunlie/operator.hpp"
#include "heunlie/poly.hpp"

namespace heunlie {

enum class Family { Su2Grid, Su2Symmetric, Su11Elliptic, Su11Hyperbolic, Su11Parabolic, Ho };

inline constexpr Family kAllFamilies[] = {Family::Su2Grid,        Family::Su2Symmetric,  Family::Su11Elliptic,
                                          Family::Su11Hyperbolic, Family::Su11Parabolic, Family::Ho};

inline std::string to_string(Family f) {
    switch (f) {
        case Family::Su2Grid: return "su2-grid";
        case Family::Su2Symmetric: return "su2-symmetric";
        case Family::Su11Elliptic: return "su11-elliptic";
        case Family::Su11Hyperbolic: return "su11-hyperbolic";
        case Family::Su11Parabolic: return "su11-parabolic";
        case Family::Ho: return "ho";
    }
    return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
    for (Family f : kAllFamilies)
        if (to_string(f) == s) return f;
    return std::nullopt;
}

inline bool is_su2(Family f) { return f == Family::Su2Grid || f == Family::Su2Symmetric; }
inline bool is_su11(Family f) {
    return f == Family::Su11Elliptic || f == Family::Su11Hyperbolic || f == Family::Su11Parabolic;
}

class ModelError : public std::runtime_error {
public:
    ModelError(std::string identity, const std::string& detail)
        : std::runtime_error(identity + " fails: " + detail), identity_(std::move(identity)) {}
    const std::string& identity() const noexcept { return identity_; }

private:
    std::string identity_;
};

/// Exact stand-in for (cos t, sin t) or (cosh t, sinh t).
struct TrigPair {
    Rational c{1};
    Rational s{0};
    int signature = 1;  // +1: c^2 + s^2 = 1, -1: c^2 - s^2 = 1

    static TrigPair make(Rational c, Rational s, int signature) {
        if (signature != 1 && signature != -1) throw std::invalid_argument("signature must be +1 or -1");
        Rational lhs = c * c + Rational(signature) * s * s;
        if (!(lhs == Rational(1)))
            throw std::invalid_argument(std::string(signature == 1 ? "c^2+s^2" : "c^2-s^2") + " = " + lhs.str() +
                                        ", not 1");
        if (s.is_zero()) throw std::invalid_argument("s must be nonzero");
        if (signature == -1 && c.sign() <= 0) throw std::invalid_argument("hyperbolic c must be positive");
        return TrigPair{std::move(c), std::move(s), signature};
    }
    static TrigPair circular(Rational c, Rational s) { return make(std::move(c), std::move(s), 1); }
    static TrigPair hyperbolic(Rational c, Rational s) { return make(std::move(c), std::move(s), -1); }

    /// sin^2(t/2) = (1-c)/2, or sinh^2(t/2) = (c-1)/2.
    Rational sin2_half() const { return signature == 1 ? (Rational(1) - c) / Rational(2) : (c - Rational(1)) / Rational(2); }
    Rational cos2_half() const { return (Rational(1) + c) / Rational(2); }
    /// tan(t/2) or tanh(t/2), both s/(1+c).
    Rational tan_half() const { return s / (Rational(1) + c); }
    Rational cot_half() const { return (Rational(1) + c) / s; }
    /// e^{it} = c + s i (circular).
    Complex unit() const { return Complex(c, s); }
    /// e^{-t} = c - s (hyperbolic).
    Rational exp_minus() const { return c - s; }

    std::string str() const { return "(" + c.str() + ", " + s.str() + ")"; }
};

struct ModelParams {
    long N = 4;
    Rational kappa{1};
    Rational lambda{1};
    Rational a{1};
    Rational chi{1, 2};
    Rational beta{4, 5};
    TrigPair pair = TrigPair{Rational(3, 5), Rational(4, 5), 1};
};

inline ModelParams default_params(Family f) {
    ModelParams p;
    if (f == Family::Su11Elliptic) p.pair = TrigPair{Rational(5, 4), Rational(3, 4), -1};
    return p;
}

/// Parameter names and rendered values actually used by a family.
inline std::vector<std::pair<std::string, std::string>> describe(Family f, const ModelParams& p) {
    std::vector<std::pair<std::string, std::string>> out;
    auto pair = [&] {
        out.emplace_back("c", p.pair.c.str());
        out.emplace_back("s", p.pair.s.str());
    };
    switch (f) {
        case Family::Su2Grid:
            out.emplace_back("N", std::to_string(p.N));
            pair();
            break;
        case Family::Su2Symmetric:
            out.emplace_back("N", std::to_string(p.N));
            out.emplace_back("beta", p.beta.str());
            pair();
            break;
        case Family::Su11Elliptic:
            out.emplace_back("kappa", p.kappa.str());
            pair();
            break;
        case Family::Su11Hyperbolic:
            out.emplace_back("lambda", p.lambda.str());
            pair();
            break;
        case Family::Su11Parabolic: out.emplace_back("a", p.a.str()); break;
        case Family::Ho: out.emplace_back("chi", p.chi.str()); break;
    }
    return out;
}

/// Constants of [Z,X] = aX + c2 Y + d2 and [Y,Z] = bY + c1 X + d1.
struct AlgebraConstants {
    Complex a, b, c1, c2, d1, d2;
    friend bool operator==(const AlgebraConstants&, const AlgebraConstants&) = default;
};

struct LieModel {
    Family family = Family::Su2Grid;
    ModelParams params;
    std::map<std::string, Operator> generators;
    Operator X;
    Operator Y;
    AlgebraConstants consts;
    Complex alpha;  // X = alpha J3 + beta J1 (su families)
    Complex beta;
    Complex casimir_scalar;  // value of C
    Complex frak;            // value of the su Casimir or of N - A^dag A

    const Operator& gen(const std::string& name) const {
        auto it = generators.find(name);
        if (it == generators.end()) throw std::out_of_range("no generator " + name);
        return it->second;
    }
    Operator Z() const { return commutator(X, Y); }
};

/// The scalar an operator acts by on 1, x, x^2, if it is proportional on all three.
inline std::optional<Complex> scalar_action(const Operator& op) {
    std::optional<Complex> k;
    for (std::size_t d = 0; d <= 2; ++d) {
        Poly probe = Poly::monomial(d);
        Poly image = apply(op, probe);
        Complex ratio = image.coeff(d);
        if (!(image == probe * ratio)) return std::nullopt;
        if (k && !(*k == ratio)) return std::nullopt;
        k = ratio;
    }
    return k;
}

inline Operator casimir_operator(const LieModel& m) {
    const auto& k = m.consts;
    Operator Z = m.Z();
    return m.X * (Complex(2) * k.d1) + m.Y * (Complex(2) * k.d2) + anticommutator(m.X, m.Y) * k.b +
           m.X * m.X * k.c1 + m.Y * m.Y * k.c2 + Z * Z;
}

struct CasimirData {
    Operator c_operator;
    Complex scalar;
    Complex frak;
    Complex expected;  // family identity evaluated at frak
    CheckList checks;
};

namespace detail {

inline Operator su_casimir(const LieModel& m) {
    const auto& J1 = m.gen("J1");
    const auto& J2 = m.gen("J2");
    const auto& J3 = m.gen("J3");
    Operator out = J1 * J1 + J2 * J2;
    return is_su2(m.family) ? out + J3 * J3 : out - J3 * J3;
}

inline Operator ho_invariant(const LieModel& m) { return m.gen("N") - m.gen("A+") * m.gen("A"); }

}  // namespace detail

/// Builds C, checks centrality and scalar action, and the family identity for it.
/// Throws ModelError if C or the algebra Casimir does not act as a scalar.
inline CasimirData casimir(const LieModel& m) {
    CasimirData out;
    out.c_operator = casimir_operator(m);
    out.checks.add_zero("[C,X]=0", commutator(out.c_operator, m.X));
    out.checks.add_zero("[C,Y]=0", commutator(out.c_operator, m.Y));
    auto k = scalar_action(out.c_operator);
    if (!k) throw ModelError("C scalar", "C = " + out.c_operator.str() + " is not scalar on 1, x, x^2");
    out.scalar = *k;
    out.checks.add_zero("C=scalar", out.c_operator - Operator::scalar(*k));
    Operator invariant = m.family == Family::Ho ? detail::ho_invariant(m) : detail::su_casimir(m);
    auto f = scalar_action(invariant);
    if (!f) throw ModelError("Casimir scalar", invariant.str() + " is not scalar on 1, x, x^2");
    out.frak = *f;
    switch (m.family) {
        case Family::Su2Symmetric: out.expected = Complex(-4) * m.beta * m.beta * out.frak; break;
        case Family::Ho: {
            Complex chi2 = Complex(m.params.chi * m.params.chi);
            out.expected = chi2 * (Complex(4) * out.frak + chi2 - Complex(2));
            break;
        }
        default: out.expected = -(m.beta * m.beta) * out.frak; break;
    }
    const char* name = m.family == Family::Ho            ? "C=chi^2(4k+chi^2-2)"
                       : m.family == Family::Su2Symmetric ? "C=-4beta^2c"
                                                          : "C=-beta^2c";
    out.checks.add_equal(name, out.scalar, out.expected);
    return out;
}

/// Defining commutation relations of the model's Lie algebra.
inline CheckList verify_lie_relations(const LieModel& m) {
    CheckList out;
    const Complex i = Complex::i();
    if (m.family == Family::Ho) {
        const auto& N = m.gen("N");
        const auto& A = m.gen("A");
        const auto& Ad = m.gen("A+");
        out.add_zero("[N,A]=-A", commutator(N, A) + A);
        out.add_zero("[N,A+]=A+", commutator(N, Ad) - Ad);
        out.add_zero("[A,A+]=1", commutator(A, Ad) - Complex(1));
        Operator Z = m.Z();
        std::vector<Operator> basis{m.X, m.Y, Z, Operator::identity()};
        bool closed = true;
        for (const auto& a : basis)
            for (const auto& b : basis)
                if (!decompose(commutator(a, b), basis)) closed = false;
        out.add("X,Y,Z,1 closed", closed, closed ? "" : "a commutator leaves span{X,Y,Z,1}");
        return out;
    }
    const auto& J1 = m.gen("J1");
    const auto& J2 = m.gen("J2");
    const auto& J3 = m.gen("J3");
    Complex sign = is_su2(m.family) ? Complex(1) : Complex(-1);
    out.add_zero(is_su2(m.family) ? "[J1,J2]=iJ3" : "[J1,J2]=-iJ3", commutator(J1, J2) - J3 * (sign * i));
    out.add_zero("[J2,J3]=iJ1", commutator(J2, J3) - J1 * i);
    out.add_zero("[J3,J1]=iJ2", commutator(J3, J1) - J2 * i);
    return out;
}

struct FrameReport {
    Operator Z;
    std::optional<AlgebraConstants> extracted;
    CheckList checks;
    bool pass() const { return checks.pass(); }
};

/// Checks [Z,X] = aX + c2 Y + d2, [Y,Z] = bY + c1 X + d1 with the stored
/// constants, re-extracts the constants by exact solve, and checks a = b.
inline FrameReport verify_bispectral_frame(const LieModel& m) {
    FrameReport rep;
    rep.Z = m.Z();
    const auto& k = m.consts;
    Operator zx = commutator(rep.Z, m.X);
    Operator yz = commutator(m.Y, rep.Z);
    rep.checks.add_zero("[Z,X]=aX+c2Y+d2", zx - (m.X * k.a + m.Y * k.c2 + Operator::scalar(k.d2)));
    rep.checks.add_zero("[Y,Z]=bY+c1X+d1", yz - (m.Y * k.b + m.X * k.c1 + Operator::scalar(k.d1)));
    rep.checks.add_equal("a=b", k.a, k.b);
    std::vector<Operator> basis{m.X, m.Y, Operator::identity()};
    auto s1 = decompose(zx, basis);
    auto s2 = decompose(yz, basis);
    if (s1 && s2) {
        rep.extracted = AlgebraConstants{(*s1)[0], (*s2)[1], (*s2)[0], (*s1)[1], (*s2)[2], (*s1)[2]};
        rep.checks.add("extracted constants match", *rep.extracted == k,
                       "a=" + (*s1)[0].str() + " b=" + (*s2)[1].str() + " c1=" + (*s2)[0].str() +
                           " c2=" + (*s1)[1].str() + " d1=" + (*s2)[2].str() + " d2=" + (*s1)[2].str());
        rep.checks.add_equal("extracted a=b", (*s1)[0], (*s2)[1]);
    } else {
        rep.checks.add("extracted constants match", false, "commutators leave span{X,Y,1}");
    }
    return rep;
}

/// The family's c2 value as stated for its class.
inline Complex expected_c2(const LieModel& m) {
    switch (m.family) {
        case Family::Su2Grid: return Complex(-1);
        case Family::Su2Symmetric: return -(Complex(1) + m.beta * m.beta);
        case Family::Ho: return Complex(-1);
        default: return m.beta * m.beta - m.alpha * m.alpha;
    }
}

/// Ladder operators as displayed in the realizations, for comparison with J1 +- i J2.
inline std::map<std::string, Operator> displayed_ladders(const LieModel& m) {
    std::map<std::string, Operator> out;
    const Poly x = Poly::x();
    const auto& p = m.params;
    switch (m.family) {
        case Family::Su2Grid:
        case Family::Su2Symmetric: {
            Rational N(p.N);
            Complex half_s(p.pair.s / Rational(2));
            Complex tan2((Rational(1) - p.pair.c) / (Rational(1) + p.pair.c));
            Complex cot2 = tan2.inv();
            Poly mid = x * Complex(-2) + Poly(Complex(N));
            out["J-"] = (Operator::shift(1, x - Poly(Complex(N))) + Operator::multiplication(mid) +
                         Operator::shift(-1, x)) *
                        half_s;
            out["J+"] = (Operator::shift(1, (Poly(Complex(N)) - x) * tan2) + Operator::multiplication(mid) -
                         Operator::shift(-1, x * cot2)) *
                        half_s;
            break;
        }
        case Family::Su11Elliptic: {
            Complex k(p.kappa);
            Complex f(-p.pair.s / Rational(2));
            Complex th2(p.pair.tan_half() * p.pair.tan_half());
            Poly xk = x + Poly(k);
            Poly mid = x * Complex(-2) - Poly(k);
            out["J-"] = (Operator::shift(1, xk) + Operator::multiplication(mid) + Operator::shift(-1, x)) * f;
            out["J+"] = (Operator::shift(1, xk * th2) + Operator::multiplication(mid) +
                         Operator::shift(-1, x * th2.inv())) *
                        f;
            break;
        }
        case Family::Su11Hyperbolic: {
            const Complex i = Complex::i();
            Complex e = p.pair.unit();
            Complex pre = e / (Complex(2) * i * Complex(p.pair.s));
            Poly up = Poly(Complex(p.lambda)) - x * i;
            Poly down = Poly(Complex(p.lambda)) + x * i;
            for (int sg : {1, -1}) {
                Complex ep = sg > 0 ? e : e.inv();
                Complex em = sg > 0 ? e.inv() : e;
                out[sg > 0 ? "J+" : "J-"] = (Operator::shift(i, up * ep) + Operator::multiplication(x * (Complex(2) * i)) -
                                             Operator::shift(-i, down * em)) *
                                            pre;
            }
            break;
        }
        case Family::Su11Parabolic: {
            Complex a1 = Complex(p.a) + Complex(1);
            out["J-"] = Operator::derivative(2, x) + Operator::derivative(1, Poly(a1));
            out["J+"] = Operator::derivative(2, x) + Operator::derivative(1, Poly(a1) - x * Complex(2)) +
                        Operator::multiplication(x - Poly(a1));
            break;
        }
        case Family::Ho: break;
    }
    return out;
}

/// Compares J+- = J1 +- i J2 with the displayed ladder operators.
inline CheckList verify_displayed_ladders(const LieModel& m) {
    CheckList out;
    for (const auto& [name, shown] : displayed_ladders(m)) out.add_zero(name + " displayed", m.gen(name) - shown);
    return out;
}

namespace detail {

inline void finish_su(LieModel& m, const Operator& J3, const Operator& Xshown) {
    const Complex i = Complex::i();
    Operator J1 = (Xshown - J3 * m.alpha) * m.beta.inv();
    Operator J2 = commutator(J3, J1) * (-i);
    m.generators["J1"] = J1;
    m.generators["J2"] = J2;
    m.generators["J3"] = J3;
    m.generators["J+"] = J1 + J2 * i;
    m.generators["J-"] = J1 - J2 * i;
}

inline void require(const CheckList& checks) {
    for (const auto& c : checks.checks)
        if (!c.pass) throw ModelError(c.name, c.detail);
}

inline Operator grid_J3(const ModelParams& p) {
    const Poly x = Poly::x();
    Complex N(Rational(p.N));
    return Operator::shift(1, (x - Poly(N)) * Complex(p.pair.sin2_half())) +
           Operator::multiplication((x - Poly(N * Complex(Rational(1, 2)))) * Complex(p.pair.c)) -
           Operator::shift(-1, x * Complex(p.pair.cos2_half()));
}

}  // namespace detail

/// Builds and verifies a model. Throws std::invalid_argument for bad
/// parameters and ModelError if any defining identity fails.
inline LieModel build_model(Family family, const ModelParams& params) {
    LieModel m;
    m.family = family;
    m.params = params;
    const Poly x = Poly::x();
    const Complex i = Complex::i();
    const auto& p = params;
    auto check_pair = [&](int signature) {
        (void)TrigPair::make(p.pair.c, p.pair.s, signature);
        if (p.pair.signature != signature)
            throw std::invalid_argument(to_string(family) + " needs a " +
                                        (signature == 1 ? "circular" : "hyperbolic") + " pair");
    };
    Operator Xshown;
    switch (family) {
        case Family::Su2Grid:
        case Family::Su2Symmetric: {
            if (p.N < 1) throw std::invalid_argument("N must be a positive integer");
            check_pair(1);
            Complex N(Rational(p.N));
            m.alpha = Complex(p.pair.c);
            m.beta = Complex(-p.pair.s);
            Operator J3 = detail::grid_J3(p);
            Xshown = Operator::multiplication(x - Poly(N * Complex(Rational(1, 2))));
            detail::finish_su(m, J3, Xshown);
            if (family == Family::Su2Grid) {
                m.X = Xshown;
                m.Y = J3;
                m.consts = {m.alpha, m.alpha, -1, -1, 0, 0};
            } else {
                if (p.beta.is_zero()) throw std::invalid_argument("beta must be nonzero");
                Complex b(p.beta);
                const Operator& J1 = m.gen("J1");
                m.X = J3 + J1 * b;
                m.Y = J3 - J1 * b;
                m.alpha = Complex(1);
                m.beta = b;
                Complex ab = Complex(1) - b * b;
                Complex cc = -(Complex(1) + b * b);
                m.consts = {ab, ab, cc, cc, 0, 0};
            }
            break;
        }
        case Family::Su11Elliptic: {
            check_pair(-1);
            if (p.kappa.sign() <= 0) throw std::invalid_argument("kappa must be positive");
            Complex k(p.kappa);
            m.alpha = Complex(p.pair.c);
            m.beta = Complex(-p.pair.s);
            Operator J3 = Operator::shift(1, (x + Poly(k)) * Complex(-p.pair.sin2_half())) +
                          Operator::multiplication((x + Poly(k * Complex(Rational(1, 2)))) * Complex(p.pair.c)) -
                          Operator::shift(-1, x * Complex(p.pair.cos2_half()));
            Xshown = Operator::multiplication(x + Poly(k * Complex(Rational(1, 2))));
            detail::finish_su(m, J3, Xshown);
            m.X = Xshown;
            m.Y = J3;
            break;
        }
        case Family::Su11Hyperbolic: {
            check_pair(1);
            if (p.pair.s.sign() <= 0) throw std::invalid_argument("hyperbolic class needs s > 0");
            if (p.lambda.sign() <= 0) throw std::invalid_argument("lambda must be positive");
            Complex e = p.pair.unit();
            Complex lam(p.lambda);
            Complex pre = (Complex(2) * i * Complex(p.pair.s)).inv();
            Operator J3 = (Operator::shift(i, (Poly(lam) - x * i) * e) +
                           Operator::multiplication(x * (Complex(2) * i * Complex(p.pair.c))) -
                           Operator::shift(-i, (Poly(lam) + x * i) * e.inv())) *
                          pre;
            m.alpha = Complex(-p.pair.c);
            m.beta = Complex(1);
            Xshown = Operator::multiplication(x * Complex(p.pair.s));
            detail::finish_su(m, J3, Xshown);
            m.X = Xshown;
            m.Y = J3;
            break;
        }
        case Family::Su11Parabolic: {
            if (!(p.a > Rational(-1))) throw std::invalid_argument("a must exceed -1");
            Complex a1 = Complex(p.a) + Complex(1);
            Operator J3 = Operator::derivative(2, -x) + Operator::derivative(1, x - Poly(a1)) +
                          Operator::scalar(a1 * Complex(Rational(1, 2)));
            m.alpha = Complex(1);
            m.beta = Complex(1);
            Xshown = Operator::multiplication(x * Complex(Rational(1, 2)));
            detail::finish_su(m, J3, Xshown);
            m.X = Xshown;
            m.Y = J3;
            break;
        }
        case Family::Ho: {
            if (p.chi.is_zero()) throw std::invalid_argument("chi must be nonzero");
            Complex chi(p.chi);
            Complex chi2 = chi * chi;
            Operator N = Operator::shift(-1, -x) + Operator::multiplication(x + Poly(chi2)) -
                         Operator::shift(1, Poly(chi2));
            Operator Ad = Operator::scalar(-chi) + Operator::shift(-1, x * chi.inv());
            Operator A = (Operator::shift(1) - Complex(1)) * chi;
            m.generators["N"] = N;
            m.generators["A"] = A;
            m.generators["A+"] = Ad;
            m.X = N + (A + Ad) * chi + chi2;
            m.Y = N;
            m.consts = {1, 1, -1, -1, chi2, chi2};
            Xshown = Operator::x();
            break;
        }
    }
    if (is_su11(family)) m.consts = {m.alpha, m.alpha, -1, m.beta * m.beta - m.alpha * m.alpha, 0, 0};

    CheckList checks;
    if (family != Family::Su2Symmetric) checks.add_zero("X display", m.X - Xshown);
    checks.append(verify_lie_relations(m));
    checks.append(verify_bispectral_frame(m).checks);
    checks.add_equal("c2 value", m.consts.c2, expected_c2(m));
    detail::require(checks);
    CasimirData cas = casimir(m);
    detail::require(cas.checks);
    m.casimir_scalar = cas.scalar;
    m.frak = cas.frak;
    return m;
}

inline LieModel build_model(Family family) { return build_model(family, default_params(family)); }

}  // namespace heunlie

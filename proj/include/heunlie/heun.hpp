#pragma once

// The algebraic Heun operator W = r1[X,Y] + r2{X,Y} + r3 X + r4 Y + r5, its
// structure constants, the central element Omega, the map to the Hahn
// algebra, the X <-> Y dual constants and the gyrostat decomposition.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunlie/check.hpp"
#include "heunlie/exactnum.hpp"
#include "heunlie/lie_models.hpp"
#include "heunlie/linsolve.hpp"
#include "heunlie/operator.hpp"

namespace heunlie {

struct HeunParams {
    Complex r1, r2, r3, r4, r5;

    std::array<Complex, 5> as_array() const { return {r1, r2, r3, r4, r5}; }
    static HeunParams from(const std::array<Complex, 5>& r) { return {r[0], r[1], r[2], r[3], r[4]}; }
    std::string str() const {
        return "(" + r1.str() + ", " + r2.str() + ", " + r3.str() + ", " + r4.str() + ", " + r5.str() + ")";
    }
    friend bool operator==(const HeunParams&, const HeunParams&) = default;
};

/// Selects the formula as printed or the form that the operator algebra confirms.
enum class Form { Printed, Corrected };

struct StructureConsts {
    Complex x0, x1, x2, x3;
    Complex y0, y1, y2, y3;
    std::array<Complex, 9> z{};  // z[0] = z1 ... z[8] = z9
    std::optional<Complex> rho4, rho5;

    std::array<Complex, 8> xy() const { return {x0, x1, x2, x3, y0, y1, y2, y3}; }
};

inline const char* const kXYNames[8] = {"x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"};

/// Componentwise differences of the x/y constants, empty when equal.
inline std::string xy_mismatch(const StructureConsts& a, const StructureConsts& b) {
    std::string out;
    auto xa = a.xy();
    auto xb = b.xy();
    for (std::size_t k = 0; k < 8; ++k) {
        if (xa[k] == xb[k]) continue;
        if (!out.empty()) out += ", ";
        out += std::string(kXYNames[k]) + ": " + xa[k].str() + " vs " + xb[k].str();
    }
    return out;
}

inline std::array<Complex, 9> omega_coefficients(const StructureConsts& s) {
    const Complex three(3), two(2);
    return {two * s.y0 - s.x3 * s.y2 / three,
            -(s.x2 * s.x3) + two * s.x0,
            s.x1,
            two * s.x2,
            s.y1 - s.x3 * s.y3 / two,
            s.x3,
            Complex(1),
            two * s.y2 / three,
            s.y3 / two};
}

inline Operator build_W(const Operator& X, const Operator& Y, const HeunParams& r) {
    return commutator(X, Y) * r.r1 + anticommutator(X, Y) * r.r2 + X * r.r3 + Y * r.r4 + Operator::scalar(r.r5);
}

inline Operator build_W(const LieModel& m, const HeunParams& r) { return build_W(m.X, m.Y, r); }

/// rho4 / rho5 of the displayed Heun operators (absent where the display has none).
inline std::pair<std::optional<Complex>, std::optional<Complex>> closed_form_rho(const LieModel& m,
                                                                                  const HeunParams& r) {
    const auto& p = m.params;
    const Complex half(Rational(1, 2));
    switch (m.family) {
        case Family::Su2Grid: {
            Complex c(p.pair.c), N(Rational(p.N));
            return {c * (r.r4 - Complex(2) * N * r.r2) + r.r3,
                    half * c * N * (N * r.r2 - r.r4) - N * r.r3 * half + r.r5};
        }
        case Family::Su11Elliptic: {
            Complex C(p.pair.c), k(p.kappa);
            return {C * (Complex(2) * r.r2 * k + r.r4) + r.r3,
                    C * k * half * (r.r2 * k + r.r4) + r.r3 * k * half + r.r5};
        }
        case Family::Su11Hyperbolic: {
            Complex c(p.pair.c), s(p.pair.s);
            return {s * r.r3 + c / s * r.r4, std::nullopt};
        }
        case Family::Su11Parabolic: {
            Complex a(p.a);
            return {half * (r.r3 - r.r1 + (a + Complex(2)) * r.r2), r.r5 + half * (r.r1 - r.r2 + r.r4) * (a + Complex(1))};
        }
        default: return {std::nullopt, std::nullopt};
    }
}

/// The generic formulas in terms of (b, c1, c2, d1, d2) and the Casimir value C.
inline StructureConsts generic_constants(const AlgebraConstants& k, const Complex& C, const HeunParams& r) {
    const auto& [r1, r2, r3, r4, r5] = r;
    const Complex &b = k.b, &c1 = k.c1, &c2 = k.c2, &d1 = k.d1, &d2 = k.d2;
    Complex q = r1 * r1 - r2 * r2;
    StructureConsts s;
    s.x0 = d2 * r4 - c2 * r5;
    s.x1 = Complex(2) * d2 * r2 - c2 * r3 + b * r4;
    s.x2 = Complex(2) * b * r2;
    s.x3 = c2;
    s.y0 = -(d2 * r4 * r3) - Complex(2) * d2 * r5 * r2 + c2 * r5 * r3 + d1 * r4 * r4 + (d1 * c2 - b * d2) * q -
           b * r5 * r4 - Complex(2) * r2 * r4 * C;
    s.y1 = Complex(-4) * d2 * r3 * r2 + c2 * r3 * r3 + Complex(8) * d1 * r4 * r2 + c1 * r4 * r4 +
           (c1 * c2 - b * b) * q - Complex(2) * b * r4 * r3 - Complex(4) * b * r5 * r2 - Complex(4) * r2 * r2 * C;
    s.y2 = Complex(12) * d1 * r2 * r2 + Complex(6) * c1 * r4 * r2 - Complex(6) * b * r3 * r2;
    s.y3 = Complex(8) * c1 * r2 * r2;
    s.z = omega_coefficients(s);
    return s;
}

inline StructureConsts structure_constants(const LieModel& m, const HeunParams& r) {
    StructureConsts s = generic_constants(m.consts, m.casimir_scalar, r);
    std::tie(s.rho4, s.rho5) = closed_form_rho(m, r);
    return s;
}

/// Family-specialized formulas. Throws std::invalid_argument for su2-symmetric,
/// which has no specialized list.
inline StructureConsts structure_constants_special(const LieModel& m, const HeunParams& r, Form form = Form::Printed) {
    const auto& [r1, r2, r3, r4, r5] = r;
    const Complex& C = m.casimir_scalar;
    StructureConsts s;
    if (m.family == Family::Su2Symmetric)
        throw std::invalid_argument("no specialized structure constants for su2-symmetric");
    if (m.family == Family::Ho) {
        Complex chi2(m.params.chi * m.params.chi);
        s.x0 = chi2 * r4 + r5;
        s.x1 = Complex(2) * chi2 * r2 + r3 + r4;
        s.x2 = Complex(2) * r2;
        s.x3 = Complex(-1);
        Complex inner = form == Form::Printed
                            ? Complex(2) * r1 * r1 - Complex(2) * r2 * r2 - r4 * r4 - r3 * r4 + Complex(2) * r2 * r5
                            : Complex(-2) * r1 * r1 + Complex(2) * r2 * r2 + r4 * r4 - r3 * r4 - Complex(2) * r2 * r5;
        s.y0 = chi2 * inner - (r3 + r4) * r5 - Complex(2) * r2 * r4 * C;
        s.y1 = Complex(4) * chi2 * r2 * (Complex(2) * r4 - r3) - (r3 + r4) * (r3 + r4) - Complex(4) * r2 * r5 -
               Complex(4) * r2 * r2 * C;
        s.y2 = Complex(12) * chi2 * r2 * r2 - Complex(6) * r2 * (r3 + r4);
        s.y3 = Complex(-8) * r2 * r2;
    } else {
        const Complex& al = m.alpha;
        Complex c2 = is_su2(m.family) ? Complex(-1) : m.beta * m.beta - al * al;
        s.x0 = -(c2 * r5);
        s.x1 = r4 * al - c2 * r3;
        s.x2 = Complex(2) * r2 * al;
        s.x3 = c2;
        s.y0 = r5 * (c2 * r3 - al * r4) - Complex(2) * r2 * r4 * C;
        s.y1 = (r2 * r2 - r1 * r1) * (c2 + al * al) - Complex(4) * r2 * r5 * al + c2 * r3 * r3 -
               Complex(2) * al * r3 * r4 - r4 * r4 - Complex(4) * r2 * r2 * C;
        s.y2 = Complex(-6) * r2 * (r4 + al * r3);
        s.y3 = Complex(-8) * r2 * r2;
    }
    s.z = omega_coefficients(s);
    std::tie(s.rho4, s.rho5) = closed_form_rho(m, r);
    return s;
}

struct HeunResiduals {
    Operator h1;  // [[X,W],X] - (x0 + x1 X + x2 X^2 + x3 W)
    Operator h2;  // [W,[X,W]] - (y0 + y1 X + y2 X^2 + y3 X^3 + x1 W + x2 {X,W})
    bool pass() const { return h1.is_zero() && h2.is_zero(); }
};

inline HeunResiduals verify_heun_relations(const Operator& X, const Operator& W, const StructureConsts& s) {
    Operator XW = commutator(X, W);
    Operator X2 = X * X;
    HeunResiduals out;
    out.h1 = commutator(XW, X) - (Operator::scalar(s.x0) + X * s.x1 + X2 * s.x2 + W * s.x3);
    out.h2 = commutator(W, XW) - (Operator::scalar(s.y0) + X * s.y1 + X2 * s.y2 + X2 * X * s.y3 + W * s.x1 +
                                  anticommutator(X, W) * s.x2);
    return out;
}

inline HeunResiduals verify_heun_relations(const LieModel& m, const HeunParams& r, const StructureConsts& s) {
    return verify_heun_relations(m.X, build_W(m, r), s);
}

inline HeunResiduals verify_heun_relations(const LieModel& m, const HeunParams& r) {
    return verify_heun_relations(m, r, structure_constants(m, r));
}

/// Reads x0..x3 and y0..y3 off the operators by exact decomposition.
/// Empty if W is degenerate (the bases {1,X,X^2,W} or {1,X,X^2,X^3} dependent)
/// or the relations do not hold for any constants.
inline std::optional<StructureConsts> extract_constants(const Operator& X, const Operator& W) {
    Operator one = Operator::identity();
    Operator X2 = X * X;
    Operator XW = commutator(X, W);
    std::vector<Operator> b1{one, X, X2, W};
    auto s1 = decompose(commutator(XW, X), b1);
    if (!s1) return std::nullopt;
    StructureConsts s;
    s.x0 = (*s1)[0];
    s.x1 = (*s1)[1];
    s.x2 = (*s1)[2];
    s.x3 = (*s1)[3];
    std::vector<Operator> b2{one, X, X2, X2 * X};
    Operator lhs = commutator(W, XW) - W * s.x1 - anticommutator(X, W) * s.x2;
    auto s2 = decompose(lhs, b2);
    if (!s2) return std::nullopt;
    s.y0 = (*s2)[0];
    s.y1 = (*s2)[1];
    s.y2 = (*s2)[2];
    s.y3 = (*s2)[3];
    for (const auto& v : {b1, b2}) {
        // a dependent basis would make the solve above non-unique
        for (std::size_t k = 0; k < v.size(); ++k) {
            std::vector<Operator> rest;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (j != k) rest.push_back(v[j]);
            if (decompose(v[k], rest)) return std::nullopt;
        }
    }
    s.z = omega_coefficients(s);
    return s;
}

struct OmegaResult {
    Operator omega;
    Complex scalar;
    std::optional<Complex> family_value;  // the family's own Omega formula, if it has one
    Complex generic_printed;
    Complex generic_corrected;
    CheckList checks;
};

/// Omega of the Heun algebra, evaluated from the family's Omega-in-terms-of-C formula.
inline std::optional<Complex> omega_family_formula(const LieModel& m, const HeunParams& r) {
    const auto& [r1, r2, r3, r4, r5] = r;
    const Complex& C = m.casimir_scalar;
    if (m.family == Family::Su2Symmetric) return std::nullopt;
    if (m.family == Family::Ho) {
        Complex chi2(m.params.chi * m.params.chi);
        return (r4 * r4 + r2 * r2 - r1 * r1) * C + chi2 * chi2 * (r1 * r1 - r2 * r2) -
               Complex(2) * chi2 * r4 * (r2 - r5) + Complex(2) * r2 * r5 + r5 * r5;
    }
    const Complex& c2 = m.consts.c2;
    return (c2 * (r1 * r1 - r2 * r2) + r4 * r4) * C - c2 * r5 * (Complex(2) * r2 * m.alpha + r5);
}

inline Complex omega_generic_formula(const AlgebraConstants& k, const Complex& C, const HeunParams& r, Form form) {
    const auto& [r1, r2, r3, r4, r5] = r;
    Complex q = r1 * r1 - r2 * r2;
    Complex r5sq = form == Form::Printed ? Complex(2) * k.c2 * r5 * r5 : k.c2 * r5 * r5;
    return (r4 * r4 + k.c2 * q) * C - Complex(2) * k.c2 * r5 * r2 * k.b - r5sq + Complex(2) * r4 * k.c2 * r2 * k.d1 +
           Complex(2) * k.d2 * r4 * r5 + k.d2 * k.d2 * q;
}

/// Builds Omega from the structure constants, checks centrality and evaluates
/// the scalar identities. Throws ModelError if Omega is not scalar on 1, x, x^2.
inline OmegaResult omega(const LieModel& m, const HeunParams& r, const StructureConsts& s) {
    Operator W = build_W(m, r);
    const Operator& X = m.X;
    Operator XW = commutator(X, W);
    Operator X2 = X * X;
    const auto& z = s.z;
    OmegaResult out;
    out.omega = X * z[0] + W * z[1] + anticommutator(X, W) * z[2] + X * W * X * z[3] + X2 * z[4] + W * W * z[5] +
                XW * XW * z[6] + X2 * X * z[7] + X2 * X2 * z[8];
    out.checks.add_zero("[Omega,X]=0", commutator(out.omega, X));
    out.checks.add_zero("[Omega,W]=0", commutator(out.omega, W));
    auto k = scalar_action(out.omega);
    if (!k) throw ModelError("Omega scalar", "Omega is not scalar on 1, x, x^2");
    out.scalar = *k;
    out.checks.add_zero("Omega=scalar", out.omega - Operator::scalar(*k));
    out.family_value = omega_family_formula(m, r);
    if (out.family_value)
        out.checks.add_equal(m.family == Family::Ho ? "Omega oscillator formula" : "Omega su formula", out.scalar,
                             *out.family_value);
    out.generic_printed = omega_generic_formula(m.consts, m.casimir_scalar, r, Form::Printed);
    out.generic_corrected = omega_generic_formula(m.consts, m.casimir_scalar, r, Form::Corrected);
    out.checks.add_equal("Omega generic formula (printed)", out.scalar, out.generic_printed);
    out.checks.add_equal("Omega generic formula (corrected)", out.scalar, out.generic_corrected);
    return out;
}

inline OmegaResult omega(const LieModel& m, const HeunParams& r) { return omega(m, r, structure_constants(m, r)); }

// ---------------------------------------------------------------------------
// Hahn map

enum class HahnClass { RealDistinct, RealDouble, ComplexPair, RealSingle, None };

inline std::string to_string(HahnClass c) {
    switch (c) {
        case HahnClass::RealDistinct: return "real-distinct";
        case HahnClass::RealDouble: return "real-double";
        case HahnClass::ComplexPair: return "complex-pair";
        case HahnClass::RealSingle: return "real-single";
        case HahnClass::None: return "none";
    }
    return "?";
}

struct HahnSolution {
    Complex mu, nu;
    Complex bx0, bx1, bx2, bx3, by0, by1;

    std::array<Complex, 6> barred() const { return {bx0, bx1, bx2, bx3, by0, by1}; }
};

struct HahnMap {
    HahnClass cls = HahnClass::None;
    Complex discriminant;
    std::vector<HahnSolution> solutions;
    std::vector<Complex> rejected_nu;  // nu roots for which the mu equation has no solution
    std::string note;
};

inline HahnSolution barred_constants(const StructureConsts& s, const Complex& mu, const Complex& nu) {
    HahnSolution h;
    h.mu = mu;
    h.nu = nu;
    h.bx0 = s.x0;
    h.bx1 = s.x1 - mu * s.x3;
    h.bx2 = s.x2 - nu * s.x3;
    h.bx3 = s.x3;
    h.by0 = s.y0 - mu * s.x0;
    h.by1 = s.y1 - Complex(2) * mu * s.x1 - Complex(2) * nu * s.x0 + mu * mu * s.x3;
    return h;
}

/// Solves 2 nu^2 x3 - 4 nu x2 + y3 = 0 and y2 - 3 mu x2 - 3 nu x1 + 3 mu nu x3 = 0 over Q(i).
inline HahnMap hahn_map(const StructureConsts& s) {
    HahnMap out;
    std::vector<Complex> nus;
    if (!s.x3.is_zero()) {
        out.discriminant = Complex(16) * s.x2 * s.x2 - Complex(8) * s.x3 * s.y3;
        auto root = sqrt_exact(out.discriminant);
        if (!root) {
            out.note = "discriminant " + out.discriminant.str() + " has no square root in Q(i)";
            return out;
        }
        Complex den = Complex(4) * s.x3;
        nus.push_back((Complex(4) * s.x2 + *root) / den);
        if (!root->is_zero()) nus.push_back((Complex(4) * s.x2 - *root) / den);
    } else if (!s.x2.is_zero()) {
        nus.push_back(s.y3 / (Complex(4) * s.x2));
    } else {
        out.note = s.y3.is_zero() ? "nu equation vanishes identically" : "nu equation inconsistent";
        return out;
    }
    for (const auto& nu : nus) {
        Complex coeff = Complex(3) * nu * s.x3 - Complex(3) * s.x2;
        Complex rhs = Complex(3) * nu * s.x1 - s.y2;
        if (coeff.is_zero()) {
            out.rejected_nu.push_back(nu);
            if (!out.note.empty()) out.note += "; ";
            out.note += rhs.is_zero() ? "mu undetermined for nu = " + nu.str()
                                      : "mu equation reduces to " + (-rhs).str() + " = 0 for nu = " + nu.str();
            continue;
        }
        out.solutions.push_back(barred_constants(s, rhs / coeff, nu));
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const HahnSolution& a, const HahnSolution& b) { return ComplexLess{}(a.nu, b.nu); });
    if (out.solutions.empty()) {
        out.cls = HahnClass::None;
    } else if (s.x3.is_zero()) {
        out.cls = HahnClass::RealSingle;
    } else if (out.discriminant.is_zero()) {
        out.cls = HahnClass::RealDouble;
    } else {
        bool real = std::all_of(out.solutions.begin(), out.solutions.end(),
                                [](const HahnSolution& h) { return h.nu.is_real() && h.mu.is_real(); });
        out.cls = real ? HahnClass::RealDistinct : HahnClass::ComplexPair;
    }
    return out;
}

struct HahnResiduals {
    Operator h1, h2;
    bool pass() const { return h1.is_zero() && h2.is_zero(); }
};

/// Verifies the Hahn relations for Wbar = W + mu X + nu X^2 with the barred constants.
inline HahnResiduals hahn_verify(const Operator& X, const Operator& W, const HahnSolution& h) {
    Operator X2 = X * X;
    Operator Wb = W + X * h.mu + X2 * h.nu;
    Operator XW = commutator(X, Wb);
    HahnResiduals out;
    out.h1 = commutator(XW, X) - (Operator::scalar(h.bx0) + X * h.bx1 + X2 * h.bx2 + Wb * h.bx3);
    out.h2 = commutator(Wb, XW) - (Operator::scalar(h.by0) + X * h.by1 + Wb * h.bx1 + anticommutator(X, Wb) * h.bx2);
    return out;
}

inline HahnResiduals hahn_verify(const LieModel& m, const HeunParams& r, const HahnSolution& h) {
    return hahn_verify(m.X, build_W(m, r), h);
}

/// Closed-form (mu, nu) and barred constants stated per family: the su(1,1)
/// pairs with their barred list, and the complex su(2) pair. Parabolic keeps
/// only the upper sign. Empty for the other families.
inline std::vector<HahnSolution> hahn_closed_form(const LieModel& m, const HeunParams& r) {
    std::vector<HahnSolution> out;
    const auto& [r1, r2, r3, r4, r5] = r;
    const Complex& al = m.alpha;
    const Complex& be = m.beta;
    const Complex& C = m.casimir_scalar;
    if (is_su11(m.family)) {
        for (int sg : {1, -1}) {
            Complex sign(sg);
            Complex den = al + sign * be;
            if (den.is_zero()) continue;
            HahnSolution h;
            h.nu = Complex(-2) * r2 / den;
            h.mu = -r4 / den - r3;
            h.bx0 = (al * al - be * be) * r5;
            h.bx1 = sign * be * r4;
            h.bx2 = sign * Complex(2) * be * r2;
            h.bx3 = be * be - al * al;
            h.by0 = -(sign * be * r4 * r5) - Complex(2) * r2 * r4 * C;
            h.by1 = be * be * (r2 * r2 - r1 * r1) - sign * Complex(4) * be * r2 * r5 - Complex(4) * r2 * r2 * C;
            out.push_back(h);
        }
    } else if (m.family == Family::Su2Grid) {
        StructureConsts s = structure_constants(m, r);
        for (int sg : {1, -1}) {
            Complex e = al - Complex(sg) * Complex::i() * be;  // e^{+-i theta}
            out.push_back(barred_constants(s, -r3 - e * r4, Complex(-2) * r2 * e));
        }
    }
    std::sort(out.begin(), out.end(), [](const HahnSolution& a, const HahnSolution& b) { return ComplexLess{}(a.nu, b.nu); });
    return out;
}

// ---------------------------------------------------------------------------
// Duality and gyrostat

struct DualResult {
    StructureConsts substitution;
    std::optional<StructureConsts> direct;
    bool agree() const { return direct && xy_mismatch(substitution, *direct).empty(); }
};

/// Constants for the pair (Y, W): by swapping c1 <-> c2, d1 <-> d2, r1 -> -r1,
/// r3 <-> r4 in the generic formulas, and by direct extraction from operators.
inline DualResult dual_constants(const LieModel& m, const HeunParams& r) {
    AlgebraConstants k = m.consts;
    std::swap(k.c1, k.c2);
    std::swap(k.d1, k.d2);
    HeunParams rd{-r.r1, r.r2, r.r4, r.r3, r.r5};
    DualResult out;
    out.substitution = generic_constants(k, m.casimir_scalar, rd);
    out.direct = extract_constants(m.Y, build_W(m, r));
    return out;
}

struct GyrostatFit {
    Complex sigma, m1, m2, m3, m4;
    Operator residual;
    bool solved = false;
};

/// Expresses W in the basis {J3^2 - beta^2 J1^2, J1, J2, J3, 1} by exact solve.
/// Throws std::invalid_argument unless the model is su2-symmetric.
inline GyrostatFit fit_gyrostat(const LieModel& m, const HeunParams& r) {
    if (m.family != Family::Su2Symmetric) throw std::invalid_argument("fit_gyrostat needs the su2-symmetric model");
    const auto& J1 = m.gen("J1");
    const auto& J2 = m.gen("J2");
    const auto& J3 = m.gen("J3");
    std::vector<Operator> basis{J3 * J3 - J1 * J1 * (m.beta * m.beta), J1, J2, J3, Operator::identity()};
    Operator W = build_W(m, r);
    GyrostatFit fit;
    auto c = decompose(W, basis);
    if (!c) {
        fit.residual = W;
        return fit;
    }
    fit.solved = true;
    fit.sigma = (*c)[0];
    fit.m1 = (*c)[1];
    fit.m2 = (*c)[2];
    fit.m3 = (*c)[3];
    fit.m4 = (*c)[4];
    fit.residual = W - combine(*c, basis);
    return fit;
}

}  // namespace heunlie

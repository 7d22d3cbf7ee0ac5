#include <gtest/gtest.h>

#include "heunlie/families.hpp"
#include "heunlie/suite.hpp"
#include "parameter_points.hpp"

using namespace heunlie;

namespace {

const Poly X = Poly::x();

HeunParams R(Complex r1, Complex r2, Complex r3, Complex r4, Complex r5) { return {r1, r2, r3, r4, r5}; }

}  // namespace

// ---- polynomials against their three-term recurrences

TEST(OrthoPoly, Examples) {
    EXPECT_EQ(ortho_poly(krawtchouk_spec(Rational(1, 5), 4), 0), Poly(1));
    EXPECT_EQ(ortho_poly(krawtchouk_spec(Rational(1, 5), 4), 1), Poly({1, Rational(-5, 4)}));
    EXPECT_EQ(ortho_poly(charlier_spec(Rational(1, 4)), 1), Poly({1, -4}));
    EXPECT_THROW(ortho_poly(krawtchouk_spec(Rational(1, 5), 4), 5), std::out_of_range);
    EXPECT_THROW(ortho_poly(charlier_spec(1), -1), std::out_of_range);
}

TEST(OrthoPoly, KrawtchoukRecurrence) {
    Rational p(2, 7);
    long N = 10;
    auto spec = krawtchouk_spec(p, N);
    Complex P(p), Q(Rational(1) - p);
    for (long n = 1; n < N; ++n) {
        // -x K_n = p(N-n) K_{n+1} - [p(N-n) + n(1-p)] K_n + n(1-p) K_{n-1}
        Complex a = P * Complex(N - n), c = Complex(n) * Q;
        EXPECT_EQ(-X * ortho_poly(spec, n),
                  ortho_poly(spec, n + 1) * a - ortho_poly(spec, n) * (a + c) + ortho_poly(spec, n - 1) * c);
    }
}

TEST(OrthoPoly, MeixnerRecurrence) {
    Rational beta(3, 2), c(1, 4);
    auto spec = meixner_spec(beta, c);
    Complex B(beta), C(c);
    for (long n = 1; n <= 10; ++n) {
        // (c-1) x M_n = c(n+beta) M_{n+1} - [n + (n+beta) c] M_n + n M_{n-1}
        Complex nn(n);
        EXPECT_EQ(X * (C - Complex(1)) * ortho_poly(spec, n),
                  ortho_poly(spec, n + 1) * (C * (nn + B)) - ortho_poly(spec, n) * (nn + (nn + B) * C) +
                      ortho_poly(spec, n - 1) * nn);
    }
}

TEST(OrthoPoly, MeixnerPollaczekRecurrence) {
    Complex e(Rational(3, 5), Rational(4, 5));
    Rational lambda(5, 4);
    auto spec = meixner_pollaczek_spec(lambda, e);
    Complex cs(Rational(3, 5)), sn(Rational(4, 5)), L(lambda);
    for (long n = 1; n <= 10; ++n) {
        // (n+1) P_{n+1} - 2[x sin + (n+lambda) cos] P_n + (n+2 lambda-1) P_{n-1} = 0
        Complex nn(n);
        Poly lhs = ortho_poly(spec, n + 1) * (nn + Complex(1)) -
                   (X * sn + Poly((nn + L) * cs)) * Complex(2) * ortho_poly(spec, n) +
                   ortho_poly(spec, n - 1) * (nn + Complex(2) * L - Complex(1));
        EXPECT_TRUE(lhs.is_zero()) << n << ": " << lhs.str();
    }
}

TEST(OrthoPoly, LaguerreRecurrence) {
    Rational a(1, 3);
    auto spec = laguerre_spec(a);
    for (long n = 1; n <= 10; ++n) {
        // (n+1) L_{n+1} - (2n+a+1-x) L_n + (n+a) L_{n-1} = 0
        Complex nn(n), A(a);
        Poly lhs = ortho_poly(spec, n + 1) * (nn + Complex(1)) -
                   (Poly(Complex(2) * nn + A + Complex(1)) - X) * ortho_poly(spec, n) +
                   ortho_poly(spec, n - 1) * (nn + A);
        EXPECT_TRUE(lhs.is_zero()) << n;
    }
}

TEST(OrthoPoly, CharlierRecurrence) {
    Rational a(3, 4);
    auto spec = charlier_spec(a);
    Complex A(a);
    for (long n = 1; n <= 10; ++n) {
        // -x C_n = a C_{n+1} - (n+a) C_n + n C_{n-1}
        Complex nn(n);
        EXPECT_EQ(-X * ortho_poly(spec, n),
                  ortho_poly(spec, n + 1) * A - ortho_poly(spec, n) * (nn + A) + ortho_poly(spec, n - 1) * nn);
    }
}

TEST(OrthoPoly, JacobiLowDegrees) {
    Complex al(Rational(1, 2)), be(Rational(-1, 3));
    auto spec = jacobi_spec(al, be);
    EXPECT_EQ(ortho_poly(spec, 0), Poly(1));
    // P_1 = (al+1) + (al+be+2)(x-1)/2
    Complex half(Rational(1, 2));
    EXPECT_EQ(ortho_poly(spec, 1), Poly(al + Complex(1)) + (X - Poly(1)) * ((al + be + Complex(2)) * half));
    // P_n(1) = (al+1)_n / n!
    for (long n = 0; n <= 8; ++n) {
        auto k = static_cast<std::size_t>(n);
        EXPECT_EQ(ortho_poly(spec, n).eval(Complex(1)), pochhammer(al + Complex(1), k) / Complex(factorial(k)));
    }
}

TEST(OrthoPoly, ContinuousHahnSymmetricCase) {
    // with a = c, b = d real the polynomial has real coefficients up to i^n and p_n(-x) = (-1)^n p_n(x)
    Complex a(Rational(1, 2)), b(Rational(3, 4));
    auto spec = continuous_hahn_spec(a, b, a, b);
    for (long n = 0; n <= 6; ++n) {
        Poly p = ortho_poly(spec, n);
        EXPECT_EQ(p.degree(), n);
        EXPECT_EQ(p.compose_affine(-1, 0), n % 2 ? -p : p);
    }
}

// ---- eigenvalues and ladders

TEST(Eigen, Examples) {
    auto grid = build_model(Family::Su2Grid);
    EXPECT_EQ(family_spec(grid).param("p"), Complex(Rational(1, 5)));
    EXPECT_TRUE(y_eigenvalue(grid, 2).is_zero());
    auto K2 = ortho_poly(family_spec(grid), 2);
    EXPECT_TRUE(apply(grid.Y, K2).is_zero());
    auto ho = build_model(Family::Ho);
    auto C3 = ortho_poly(family_spec(ho), 3);
    EXPECT_EQ(apply(ho.Y, C3), C3 * Complex(3));
    auto par = build_model(Family::Su11Parabolic);
    EXPECT_EQ(apply(par.Y, Poly(1)), Poly(1));
    EXPECT_THROW(family_spec(build_model(Family::Su2Symmetric)), std::invalid_argument);
}

TEST(Ladder, Examples) {
    auto grid = build_model(Family::Su2Grid);
    auto spec = family_spec(grid);
    EXPECT_TRUE(apply(grid.gen("J-"), ortho_poly(spec, 0)).is_zero());
    EXPECT_EQ(apply(grid.gen("J-"), ortho_poly(spec, 1)), ortho_poly(spec, 0) * Complex(2));
    auto ho = build_model(Family::Ho);
    auto cs = family_spec(ho);
    EXPECT_EQ(apply(ho.gen("A"), ortho_poly(cs, 1)), ortho_poly(cs, 0) * Complex(-2));
}

TEST(EigenLadder, ThreePointsPerFamily) {
    for (Family f : points::kPolyFamilies) {
        for (const auto& m : points::parameter_points(f)) {
            auto spec = family_spec(m);
            auto e = verify_eigen(m, spec, 10);
            auto l = verify_ladder(m, spec, 10);
            EXPECT_TRUE(e.pass()) << to_string(f) << ": " << e.failures();
            EXPECT_TRUE(l.pass()) << to_string(f) << ": " << l.failures();
            EXPECT_GE(e.checks.size(), 11u) << to_string(f);
        }
    }
}

TEST(EigenLadder, WrongConventionIsCaught) {
    auto m = build_model(Family::Su2Grid);
    auto spec = family_spec(m);
    spec.params["p"] = Complex(Rational(4, 5));  // cos^2 instead of sin^2
    EXPECT_FALSE(verify_eigen(m, spec, 3).pass());
}

// ---- displayed Heun operators

TEST(ClosedForm, GridReducesToY) {
    auto m = build_model(Family::Su2Grid);
    HeunParams r = R(0, 0, 0, 1, 0);
    EXPECT_EQ(closed_form_W(m, r), m.Y);
    EXPECT_TRUE(compare_closed_form(m, r).pass);
}

TEST(ClosedForm, OscillatorCommutator) {
    auto m = build_model(Family::Ho);
    Complex chi2(Rational(1, 4));
    // [x, -x T^- + x + chi^2 - chi^2 T^+] = -x T^- + chi^2 T^+
    Operator want = Operator::shift(-1, -X) + Operator::shift(1, Poly(chi2));
    HeunParams r = R(1, 0, 0, 0, 0);
    EXPECT_EQ(build_W(m, r), want);
    EXPECT_EQ(closed_form_W(m, r), want);
}

TEST(ClosedForm, LaguerreRho5) {
    auto m = build_model(Family::Su11Parabolic);
    for (const auto& r : random_r(31, 5)) {
        Complex want = r.r5 + Complex(Rational(1, 2)) * (r.r1 - r.r2 + r.r4) * (Complex(m.params.a) + Complex(1));
        EXPECT_EQ(*closed_form_rho(m, r).second, want);
        EXPECT_EQ(build_W(m, r).diff_coeff(0).coeff(0), want);
    }
}

TEST(ClosedForm, MatchesForFourFamilies) {
    for (Family f : {Family::Su2Grid, Family::Su11Parabolic, Family::Ho}) {
        for (const auto& m : points::parameter_points(f))
            for (const auto& r : random_r(32, 5)) {
                auto c = compare_closed_form(m, r);
                EXPECT_TRUE(c.pass) << to_string(f) << ": " << c.detail;
            }
    }
}

TEST(ClosedForm, MeixnerDisplayNeedsCorrection) {
    for (const auto& m : points::parameter_points(Family::Su11Elliptic))
        for (const auto& r : random_r(33, 5, {1})) {
            auto printed = compare_closed_form(m, r, Form::Printed);
            EXPECT_FALSE(printed.pass);
            EXPECT_NE(printed.detail.find("S[-1]"), std::string::npos);
            EXPECT_EQ(printed.detail.find("S[1]"), std::string::npos);
            EXPECT_TRUE(compare_closed_form(m, r, Form::Corrected).pass);
        }
}

TEST(ClosedForm, MeixnerPollaczekDisplayNeedsPhase) {
    for (const auto& m : points::parameter_points(Family::Su11Hyperbolic))
        for (const auto& r : random_r(34, 5, {1})) {
            auto printed = compare_closed_form(m, r, Form::Printed);
            EXPECT_FALSE(printed.pass);
            EXPECT_NE(printed.detail.find("S[1i]"), std::string::npos);
            EXPECT_EQ(printed.detail.find("S[-1i]"), std::string::npos);
            EXPECT_TRUE(compare_closed_form(m, r, Form::Corrected).pass);
        }
}

TEST(ClosedForm, PerturbedRhoIsReported) {
    auto m = build_model(Family::Su2Grid);
    HeunParams r = R(1, 2, 3, 4, 5);
    auto diffs = term_differences(build_W(m, r), closed_form_W(m, r) + Operator::x());
    ASSERT_EQ(diffs.size(), 1u);
    EXPECT_EQ(diffs[0].rfind("1: ", 0), 0u);
}

// ---- tridiagonality

TEST(Tridiagonal, DiagonalForY) {
    for (Family f : points::kPolyFamilies) {
        auto m = build_model(f);
        auto spec = family_spec(m);
        long top = spec.max_degree ? std::min(*spec.max_degree, 10L) : 10;
        for (long n = 0; n <= top; ++n) {
            auto want = y_eigenvalue(m, n).is_zero() ? std::vector<long>{} : std::vector<long>{n};
            EXPECT_EQ(tridiagonal_support(build_W(m, R(0, 0, 0, 1, 0)), spec, n), want) << to_string(f);
        }
    }
}

TEST(Tridiagonal, ThreeTermForX) {
    for (Family f : points::kPolyFamilies) {
        auto m = points::parameter_points(f).front();
        auto spec = family_spec(m);
        for (long n = 1; n <= 9; ++n) {
            auto s = tridiagonal_support(m.X, spec, n);
            ASSERT_FALSE(s.empty());
            EXPECT_EQ(s.front(), n - 1) << to_string(f);
            EXPECT_EQ(s.back(), n + 1) << to_string(f);
            EXPECT_LE(s.size(), 3u);
        }
    }
}

TEST(Tridiagonal, XTimesK1) {
    auto spec = krawtchouk_spec(Rational(1, 5), 4);
    std::vector<Poly> basis;
    for (long n = 0; n <= 2; ++n) basis.push_back(ortho_poly(spec, n));
    auto c = expand_in_basis(X * basis[1], basis);
    ASSERT_EQ(c.size(), 3u);
    for (const auto& v : c) EXPECT_FALSE(v.is_zero());
    EXPECT_EQ(expand_in_basis(basis[0], basis), std::vector<Complex>{Complex(1)});
}

TEST(Tridiagonal, GenericW) {
    for (Family f : points::kPolyFamilies)
        for (const auto& m : points::parameter_points(f))
            for (const auto& r : random_r(35, 3)) {
                auto spec = family_spec(m);
                auto t = tridiagonality(m, spec, r, 10);
                EXPECT_TRUE(t.pass()) << to_string(f) << ": " << t.failures();
                if (!spec.max_degree || *spec.max_degree >= 11) {
                    EXPECT_EQ(t.checks.size(), 11u);
                }
            }
}

// ---- conjugated operators

TEST(EllipticHahn, CorrectedIdentityHolds) {
    auto m = build_model(Family::Su11Elliptic);
    EXPECT_EQ(m.params.pair.tan_half(), Rational(1, 3));
    EXPECT_EQ(m.params.pair.exp_minus(), Rational(1, 2));
    for (const auto& r : random_r(41, 10, {1})) {
        EXPECT_TRUE(elliptic_hahn_identity(m, r, Form::Corrected).pass()) << r.str();
        EXPECT_FALSE(elliptic_hahn_identity(m, r, Form::Printed).pass()) << r.str();
    }
    EXPECT_TRUE(elliptic_hahn_identity(m, R(0, 1, 0, 0, 0), Form::Corrected).pass());
    EXPECT_THROW(elliptic_hahn_identity(m, R(1, 0, 1, 1, 1)), std::invalid_argument);
}

TEST(EllipticHahn, OtherPairs) {
    for (const auto& m : points::parameter_points(Family::Su11Elliptic))
        for (const auto& r : random_r(42, 3, {1})) EXPECT_TRUE(elliptic_hahn_identity(m, r, Form::Corrected).pass());
}

TEST(ContinuousHahn, GroundState) {
    auto m = build_model(Family::Su11Hyperbolic);
    HeunParams r = R(Rational(2, 3), Rational(-3, 2), Rational(1, 5), Rational(7, 4), Rational(-1, 3));
    auto c = hyperbolic_continuous_hahn(m, r, 0);
    ASSERT_TRUE(c.pass()) << c.failures();
    Complex lam(m.params.lambda);
    Complex want = -lam + (lam * r.r1 + r.r5) / r.r2;
    EXPECT_EQ(c.checks[0].detail, "eigenvalue " + want.str());
}

TEST(ContinuousHahn, PureAnticommutator) {
    auto m = build_model(Family::Su11Hyperbolic);
    auto c = hyperbolic_continuous_hahn(m, R(0, 1, 0, 0, 0), 6);
    ASSERT_TRUE(c.pass()) << c.failures();
    for (long n = 0; n <= 6; ++n)
        EXPECT_EQ(c.checks[static_cast<std::size_t>(n)].detail, "eigenvalue " + Complex(-n * n - (2 * n + 1)).str());
}

TEST(ContinuousHahn, RandomDraws) {
    for (const auto& m : points::parameter_points(Family::Su11Hyperbolic))
        for (const auto& r : random_r(43, 4, {1})) {
            auto c = hyperbolic_continuous_hahn(m, r, 6);
            EXPECT_TRUE(c.pass()) << c.failures();
        }
}

TEST(ContinuousHahn, WrongFourthParameterFailsAtOne) {
    auto m = build_model(Family::Su11Hyperbolic);
    HeunParams r = R(1, 2, 3, 4, 5);
    auto c = hyperbolic_continuous_hahn(m, r, 3, continuous_hahn_b(m, r));
    EXPECT_TRUE(c.checks[0].pass);
    EXPECT_FALSE(c.checks[1].pass);
}

TEST(Jacobi, SpecExample) {
    auto m = points::model(Family::Su11Parabolic, [](ModelParams& p) { p.a = 0; });
    auto c = parabolic_jacobi(m, R(2, 1, 0, 1, 0), 2, Form::Corrected);
    ASSERT_TRUE(c.pass()) << c.failures();
    for (long n = 0; n <= 2; ++n) {
        Complex want = Complex(n) + Complex(Rational(1, 2)) - Complex(n * n);
        EXPECT_EQ(c.find("Jacobi P_" + std::to_string(n))->detail, "eigenvalue " + want.str());
    }
}

TEST(Jacobi, GroundState) {
    auto m = build_model(Family::Su11Parabolic);
    HeunParams r = R(Rational(5, 2), Rational(-1, 3), 2, Rational(3, 4), Rational(1, 7));
    auto c = parabolic_jacobi(m, r, 0);
    ASSERT_TRUE(c.pass()) << c.failures();
    Complex want = (r.r1 - r.r2) * (Complex(m.params.a) + Complex(1)) * Complex(Rational(1, 2)) + r.r5;
    EXPECT_EQ(c.find("Jacobi P_0")->detail, "eigenvalue " + want.str());
}

TEST(Jacobi, ConjugatedOperatorAtYPoint) {
    for (const auto& m : points::parameter_points(Family::Su11Parabolic)) {
        HeunParams r = R(0, 0, 0, 1, 0);
        EXPECT_EQ(parabolic_conjugated(m, r), jacobi_operator(m, r, Form::Printed));
    }
}

TEST(Jacobi, PrintedDisplayOnlyAtUnitA) {
    for (const auto& m : points::parameter_points(Family::Su11Parabolic))
        for (const auto& r : random_r(44, 4, {1, 3})) {
            EXPECT_TRUE(parabolic_jacobi(m, r, 6, Form::Corrected).pass());
            bool printed = parabolic_jacobi(m, r, 6, Form::Printed).pass();
            EXPECT_EQ(printed, m.params.a == Rational(1)) << m.params.a.str();
        }
}

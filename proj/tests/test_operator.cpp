#include <gtest/gtest.h>

#include "engine_properties.hpp"
#include "generators.hpp"
#include "heunlie/linsolve.hpp"
#include "heunlie/operator.hpp"
#include "heunlie/poly.hpp"

using namespace heunlie;

namespace {

const Poly X = Poly::x();
const Complex I = Complex::i();

Operator Tp() { return Operator::shift(1); }
Operator Tm() { return Operator::shift(-1); }
Operator D() { return Operator::derivative(1); }

std::map<Complex, Complex, ComplexLess> integer_character(const Complex& base, long span) {
    std::map<Complex, Complex, ComplexLess> m;
    for (long s = -span; s <= span; ++s) m.emplace(Complex(s), base.pow(s));
    return m;
}

}  // namespace

// ---- polynomials

TEST(Poly, TrimsAndDegrees) {
    EXPECT_EQ(Poly({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_TRUE(Poly(Complex()).is_zero());
    EXPECT_EQ((X * X - X * X).degree(), -1);
}

TEST(Poly, EvalComposeDerivative) {
    Poly p{1, -3, 2};  // 2x^2 - 3x + 1
    EXPECT_EQ(p.eval(Complex(2)), Complex(3));
    EXPECT_EQ(p.shifted(1), Poly({0, 1, 2}));
    EXPECT_EQ(p.derivative(), Poly({-3, 4}));
    EXPECT_EQ(p.derivative(3), Poly());
    EXPECT_EQ(p.compose_affine(2, 0), Poly({1, -6, 8}));
    EXPECT_EQ(p.str(), "2x^2-3x+1");
}

TEST(Poly, Pochhammer) {
    EXPECT_EQ(pochhammer(Complex(3), 4), Complex(360));
    EXPECT_EQ(pochhammer(X, 2), Poly({0, 1, 1}));
    EXPECT_EQ(factorial(5), Rational(120));
}

TEST(Poly, HypergeometricTerminates) {
    // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
    Poly f = hypergeometric(2, {Poly(-2), Poly(3)}, {Complex(4)}, X);
    EXPECT_EQ(f, Poly({1, Rational(-3, 2), Rational(3, 5)}));
    EXPECT_THROW(hypergeometric(2, {Poly(-2)}, {Complex(-1)}, X), std::domain_error);
}

TEST(Poly, ExpandInBasis) {
    std::vector<Poly> mono{Poly(1), X, X * X};
    auto c = expand_in_basis(X * X, mono);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], Complex());
    EXPECT_EQ(c[1], Complex());
    EXPECT_EQ(c[2], Complex(1));
    EXPECT_THROW(expand_in_basis(X * X * X, mono), std::invalid_argument);
    EXPECT_THROW(expand_in_basis(X, {Poly(1), Poly(2)}), std::invalid_argument);
}

TEST(PolyProperty, DegreeOfProduct) {
    gen::Source g(21);
    for (int k = 0; k < 300; ++k) {
        Poly p = g.poly(4), q = g.poly(4);
        if (p.is_zero() || q.is_zero()) continue;
        EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
        Complex at = g.complex();
        EXPECT_EQ((p * q).eval(at), p.eval(at) * q.eval(at));
    }
}

// ---- application

TEST(Apply, Shifts) {
    EXPECT_EQ(apply(Tp(), X * X), Poly({1, 2, 1}));
    EXPECT_EQ(apply(Operator::shift(I), X * X), Poly({-1, Complex(0, 2), 1}));
}

TEST(Apply, Derivative) { EXPECT_EQ(apply(D(), X * X * X), Poly({0, 0, 3})); }

// ---- composition

TEST(Compose, ShiftPastMultiplication) { EXPECT_EQ(Tp() * Operator::x(), Operator::shift(1, X + Poly(1))); }

TEST(Compose, Leibniz) { EXPECT_EQ(D() * Operator::x(), Operator::derivative(1, X) + Operator::identity()); }

TEST(Compose, ShiftSquare) {
    Operator a = Operator::shift(-1, X);
    Operator got = a * a;
    EXPECT_EQ(got, Operator::shift(-2, X * (X - Poly(1))));
    for (std::size_t k = 0; k <= 2; ++k) {
        Poly m = Poly::monomial(k);
        EXPECT_EQ(apply(got, m), apply(a, apply(a, m)));
    }
}

TEST(Compose, KindMismatch) {
    EXPECT_THROW(Tp() * D(), KindMismatch);
    EXPECT_THROW(Tp() + D(), KindMismatch);
    EXPECT_NO_THROW(Operator::x() * D());
    EXPECT_NO_THROW(Operator::x() * Tp());
}

TEST(Commutator, Weyl) { EXPECT_EQ(commutator(D(), Operator::x()), Operator::identity()); }

TEST(Commutator, ShiftsCommute) { EXPECT_TRUE(commutator(Tp(), Tm()).is_zero()); }

TEST(Commutator, AnticommutatorExample) {
    Operator got = anticommutator(Operator::x(), Operator::shift(1, X));
    EXPECT_EQ(got, Operator::shift(1, X * (X * Complex(2) + Poly(1))));
    for (std::size_t k = 0; k <= 1; ++k) {
        Poly m = Poly::monomial(k);
        Poly want = X * apply(Operator::shift(1, X), m) + apply(Operator::shift(1, X), X * m);
        EXPECT_EQ(apply(got, m), want);
    }
}

TEST(Zero, ShiftInverse) {
    Operator r = Tp() * Tm() - Operator::identity();
    EXPECT_TRUE(r.is_zero());
    EXPECT_TRUE(probe_zero(r));
}

TEST(Render, Notation) {
    Operator op = Operator::shift(1, X * X - Poly(1)) + Operator::shift(-1, X * Complex(2));
    EXPECT_EQ(op.str(), "(2x)*S[-1] + (x^2-1)*S[1]");
    Operator d = Operator::derivative(2, X) + Operator::derivative(1, Poly(1) - X);
    EXPECT_EQ(d.str(), "(-x+1)*D^1 + (x)*D^2");
    EXPECT_EQ(Operator().str(), "0");
}

// ---- conjugations

TEST(Character, ScalesShiftCoefficient) {
    Operator op = Operator::shift(1, X * X);
    auto got = conjugate_by_character(op, {{Complex(1), Complex(Rational(1, 3))}});
    EXPECT_EQ(got, Operator::shift(1, X * X * Complex(Rational(1, 3))));
}

TEST(Character, TrivialCharacter) {
    Operator op = Operator::shift(1, X) + Operator::shift(-1, Poly(3)) + Operator::x();
    EXPECT_EQ(conjugate_by_character(op, integer_character(Complex(1), 2)), op);
}

TEST(Character, MinusOneToTheIx) {
    Poly q{1, 2};
    auto got = conjugate_by_character(Operator::shift(-I, q), {{I, Complex(-1)}, {-I, Complex(-1)}});
    EXPECT_EQ(got, Operator::shift(-I, -q));
}

TEST(Character, RejectsNonCharacters) {
    Operator op = Operator::shift(1);
    EXPECT_THROW(conjugate_by_character(op, {{Complex(1), Complex(2)}, {Complex(2), Complex(3)}}),
                 std::invalid_argument);
    EXPECT_THROW(conjugate_by_character(op, {{Complex(1), Complex()}}), std::invalid_argument);
    EXPECT_THROW(conjugate_by_character(op, {{Complex(-1), Complex(2)}}), std::invalid_argument);
    EXPECT_THROW(conjugate_by_character(D(), {{Complex(1), Complex(2)}}), std::invalid_argument);
}

TEST(Exponential, Examples) {
    Complex half(Rational(1, 2));
    EXPECT_EQ(conjugate_exponential(D(), half), D() + half);
    Operator xd2 = Operator::derivative(2, X);
    EXPECT_EQ(conjugate_exponential(xd2, half),
              xd2 + Operator::derivative(1, X) + Operator::multiplication(X * Complex(Rational(1, 4))));
    EXPECT_EQ(conjugate_exponential(xd2, Complex()), xd2);
    EXPECT_THROW(conjugate_exponential(Tp(), half), std::invalid_argument);
}

// ---- exact linear algebra

TEST(Linsolve, SolvesAndDetectsInconsistency) {
    Matrix a{{Complex(1), Complex(1)}, {Complex(1), Complex(-1)}};
    auto x = solve_linear(a, {Complex(3), Complex(1)});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Complex(2));
    EXPECT_EQ((*x)[1], Complex(1));
    Matrix s{{Complex(1), Complex(1)}, {Complex(2), Complex(2)}};
    EXPECT_FALSE(solve_linear(s, {Complex(1), Complex(3)}).has_value());
}

TEST(Linsolve, DecomposeOperators) {
    std::vector<Operator> basis{Operator::identity(), Operator::x(), Tp()};
    Operator target = Operator::x() * Complex(3) - Tp() + Complex(2);
    auto c = decompose(target, basis);
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)[0], Complex(2));
    EXPECT_EQ((*c)[1], Complex(3));
    EXPECT_EQ((*c)[2], Complex(-1));
    EXPECT_EQ(combine(*c, basis), target);
    EXPECT_FALSE(decompose(Tm(), basis).has_value());
}

// ---- engine soundness properties (1000 random cases in total)

class EngineProperty : public ::testing::TestWithParam<int> {};

TEST_P(EngineProperty, RandomCase) {
    auto bad = gen::engine_case(GetParam());
    EXPECT_TRUE(bad.empty()) << gen::join_names(bad);
}

INSTANTIATE_TEST_SUITE_P(ThousandCases, EngineProperty, ::testing::Range(0, 1000));

#include <gtest/gtest.h>

#include "generators.hpp"
#include "heunlie/exactnum.hpp"

using namespace heunlie;

namespace {

Complex c(long re, long rd, long im, long id) { return {Rational(re, rd), Rational(im, id)}; }

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational q(6, -8);
    EXPECT_EQ(q.num(), -3);
    EXPECT_EQ(q.den(), 4);
    EXPECT_EQ(Rational(0, 5).den(), 1);
    EXPECT_EQ(Rational(10, 5).str(), "2");
    EXPECT_EQ(Rational(-1, 3).str(), "-1/3");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), DivisionByZero); }

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
    EXPECT_FALSE(Rational(0).try_inverse().has_value());
}

TEST(Rational, PowAndSqrt) {
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(Rational(9, 16).sqrt(), Rational(3, 4));
    EXPECT_FALSE(Rational(2).sqrt().has_value());
    EXPECT_FALSE(Rational(-4).sqrt().has_value());
}

TEST(Complex, ConjugateSum) { EXPECT_EQ(c(1, 2, 1, 3) + c(1, 2, -1, 3), Complex(1)); }

TEST(Complex, UnitModulusPair) { EXPECT_EQ(c(3, 5, 4, 5) * c(3, 5, -4, 5), Complex(1)); }

TEST(Complex, Inverse) {
    Complex z(2, 1);
    EXPECT_EQ(z.inv(), c(2, 5, -1, 5));
    EXPECT_EQ(z * z.inv(), Complex(1));
}

TEST(Complex, DivisionByZero) {
    EXPECT_THROW(Complex(1) / Complex(), DivisionByZero);
    EXPECT_THROW(Complex().inv(), DivisionByZero);
    EXPECT_FALSE(try_div(Complex(1), Complex()).has_value());
    EXPECT_EQ(*try_div(Complex(1), Complex(2)), Complex(Rational(1, 2)));
}

TEST(Complex, Powers) {
    Complex i = Complex::i();
    EXPECT_EQ(i.pow(2), Complex(-1));
    EXPECT_EQ(i.pow(-1), -i);
    EXPECT_EQ(Complex(1, 1).pow(4), Complex(-4));
}

TEST(Complex, SqrtExact) {
    EXPECT_EQ(*sqrt_exact(Complex(-4)), Complex(0, 2));
    auto r = sqrt_exact(Complex(3, 4));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, Complex(3, 4));
    EXPECT_FALSE(sqrt_exact(Complex(2)).has_value());
    EXPECT_FALSE(sqrt_exact(Complex(0, 1)).has_value());
}

TEST(Scalar, ParseExamples) {
    EXPECT_EQ(parse_scalar("3/5"), Complex(Rational(3, 5)));
    EXPECT_EQ(parse_scalar("-1/4+2/3i"), c(-1, 4, 2, 3));
    EXPECT_TRUE(parse_scalar("0/5").is_zero());
    EXPECT_EQ(parse_scalar("2i"), Complex(0, 2));
    EXPECT_EQ(parse_scalar("1-1/2i"), c(1, 1, -1, 2));
}

TEST(Scalar, ParseErrorsCarryPosition) {
    auto pos = [](const char* s) -> long {
        try {
            (void)parse_scalar(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(pos(""), 0);
    EXPECT_EQ(pos("1/0"), 2);
    EXPECT_EQ(pos("abc"), 0);
    EXPECT_EQ(pos("1+2"), 3);
    EXPECT_EQ(pos("1/2x"), 3);
    EXPECT_EQ(pos("1--2i"), 2);
}

TEST(Scalar, RenderForms) {
    EXPECT_EQ(render(Complex()), "0");
    EXPECT_EQ(render(c(1, 2, -3, 4)), "1/2-3/4i");
    EXPECT_EQ(render(Complex(0, -1)), "-1i");
    EXPECT_EQ(render(Complex(Rational(7, 3))), "7/3");
}

TEST(ComplexLess, StrictWeakOrder) {
    ComplexLess less;
    Complex a(1, 0), b(1, 1), d(0, 5);
    EXPECT_TRUE(less(a, b));
    EXPECT_FALSE(less(b, a));
    EXPECT_TRUE(less(d, a));
    EXPECT_FALSE(less(a, a));
}

TEST(ExactnumProperty, FieldAxioms) {
    gen::Source g(11);
    for (int k = 0; k < 500; ++k) {
        Complex a = g.complex(), b = g.complex(), d = g.complex();
        EXPECT_EQ((a + b) + d, a + (b + d));
        EXPECT_EQ((a * b) * d, a * (b * d));
        EXPECT_EQ(a * (b + d), a * b + a * d);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, Complex());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inv(), Complex(1));
        }
        EXPECT_EQ(a.conj().conj(), a);
        EXPECT_GE(a.norm2().sign(), 0);
        EXPECT_EQ(Complex(a.norm2()), a * a.conj());
    }
}

TEST(ExactnumProperty, AlwaysReduced) {
    gen::Source g(12);
    for (int k = 0; k < 500; ++k) {
        Rational a = g.rational(50), b = g.nonzero_rational(50);
        for (const Rational& q : {a + b, a - b, a * b, a / b}) {
            EXPECT_GT(q.den(), 0);
            mpz_class gcd;
            mpz_gcd(gcd.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
            EXPECT_EQ(gcd, 1);
        }
    }
}

TEST(ExactnumProperty, ParseRenderRoundTrip) {
    gen::Source g(13);
    for (int k = 0; k < 500; ++k) {
        Complex z = g.complex(1000);
        EXPECT_EQ(parse_scalar(render(z)), z) << render(z);
    }
}

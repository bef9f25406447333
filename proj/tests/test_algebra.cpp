#include <gtest/gtest.h>

#include "quartic/algebra/matrix.hpp"
#include "quartic/algebra/mpoly.hpp"
#include "quartic/algebra/parse.hpp"
#include "quartic/algebra/quadext.hpp"
#include "quartic/algebra/ratfun.hpp"
#include "quartic/algebra/rational.hpp"
#include "quartic/algebra/scale.hpp"
#include "support.hpp"

namespace quartic {
namespace {

using testing::Gen;
using testing::xyzt;
using QPoly = UniPoly<Rational>;

QPoly qpoly(const std::string& s) { return parse_scalar<QA>(s).numerator(); }

TEST(Scalar, RationalArithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational::from_string("-4/6"), Rational(-2, 3));
    EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
    EXPECT_THROW(Rational(0).inv(), DivisionByZero);
    EXPECT_THROW(Rational::from_string("1/x"), ParseError);
}

TEST(Scalar, EpsilonInverse) {
    const QuadExt e = QuadExt::eps();
    EXPECT_EQ(e.inv(), QuadExt(1) - e);
    EXPECT_EQ(e * (QuadExt(1) - e), QuadExt(1));
}

TEST(Scalar, EpsilonIsPrimitiveSixthRoot) {
    const QuadExt e = QuadExt::eps();
    EXPECT_TRUE((e * e - e + QuadExt(1)).is_zero());
    EXPECT_EQ(power(e, 3), QuadExt(-1));
    EXPECT_EQ(power(e, 6), QuadExt(1));
    EXPECT_NE(power(e, 2), QuadExt(1));
}

TEST(Scalar, RatFunNormalization) {
    const QA r = parse_scalar<QA>("(a^2-1)/(a-1)");
    EXPECT_EQ(r, parse_scalar<QA>("a+1"));
    EXPECT_TRUE(r.is_polynomial());
    EXPECT_EQ(r.to_string(), "a+1");
    const QA s = parse_scalar<QA>("(2*a)/(4*a+2)");
    EXPECT_EQ(s.denominator(), qpoly("a+1/2"));
    EXPECT_EQ(s.to_string(), "(1/2*a)/(a+1/2)");
    EXPECT_EQ(parse_scalar<QA>(s.to_string()), s);
    EXPECT_THROW(QA(0).inv(), DivisionByZero);
    EXPECT_THROW(parse_scalar<QA>("1/(a-a)"), DivisionByZero);
}

TEST(Scalar, TextualGrammar) {
    EXPECT_EQ(parse_scalar<Rational>("7/3"), Rational(7, 3));
    EXPECT_EQ(parse_scalar<QuadExt>("1/2-3*eps"), QuadExt(Rational(1, 2), Rational(-3)));
    EXPECT_EQ(QuadExt(Rational(1, 2), Rational(-3)).to_string(), "1/2-3*eps");
    EXPECT_EQ(QuadExt(Rational(0), Rational(1)).to_string(), "eps");
    EXPECT_THROW(parse_scalar<Rational>("eps"), ParseError);
    EXPECT_THROW(parse_scalar<QA>("eps"), ParseError);
    const QAB b = parse_scalar<QAB>("(a+1)*b^2/(a*b)");
    EXPECT_EQ(b, parse_scalar<QAB>("(1+1/a)*b"));
    EXPECT_EQ(parse_scalar<QAB>(b.to_string()), b);
}

TEST(UnivariateGcd, Examples) {
    EXPECT_EQ(gcd(qpoly("a^2-1"), qpoly("a-1")), qpoly("a-1"));
    EXPECT_EQ(gcd(qpoly("a^2-a+1"), qpoly("a-1")), qpoly("1"));
    EXPECT_TRUE(gcd(QPoly(), QPoly()).is_zero());
    EXPECT_EQ(gcd(qpoly("3*a^2+3"), QPoly()), qpoly("a^2+1"));
    EXPECT_EQ(squarefree_part(qpoly("a^3*(a-1)^2")), qpoly("a^2-a"));
}

TEST(MultiPolyOps, Substitute) {
    const auto vars = std::vector<std::string>{"x", "y"};
    const auto f = parse_poly<Rational>("x^2*y", vars);
    const auto x = MultiPoly<Rational>::variable(vars, 0);
    const auto y = MultiPoly<Rational>::variable(vars, 1);
    EXPECT_EQ(substitute(f, {{"x", y}, {"y", x}}), parse_poly<Rational>("y^2*x", vars));
    EXPECT_THROW(substitute(f, {{"z", x}}), PreconditionError);
}

TEST(MultiPolyOps, SubstituteTZero) {
    const auto f3 = parse_poly<Rational>("x^3+y*z^2", xyzt());
    const auto f4 = parse_poly<Rational>("x*y*z*(x-y)", xyzt());
    const auto t = MultiPoly<Rational>::variable(xyzt(), "t");
    const MultiPoly<Rational> zero(xyzt());
    EXPECT_EQ(substitute(t * f3 + f4, {{"t", zero}}), f4);
}

TEST(MultiPolyOps, RohnOnPlaneXPlusYPlusZ) {
    const auto rohn = parse_poly<Rational>("t*((x+y+z)^3+x*y*z)+(x+y+z)*(x-y)*(y-z)*(z-x)", xyzt());
    const auto r = substitute(rohn, {{"z", parse_poly<Rational>("-x-y", xyzt())}});
    EXPECT_EQ(r, parse_poly<Rational>("t*x*y*(-x-y)", xyzt()));
}

TEST(MultiPolyOps, ExactDivide) {
    const auto vars = std::vector<std::string>{"x", "y"};
    EXPECT_EQ(exact_divide(parse_poly<Rational>("x^2-y^2", vars), parse_poly<Rational>("x-y", vars)),
              parse_poly<Rational>("x+y", vars));
    EXPECT_THROW(exact_divide(parse_poly<Rational>("x^2", vars), parse_poly<Rational>("y", vars)), NotDivisible);
    EXPECT_EQ(exact_divide(parse_poly<Rational>("t*x*y*(-x-y)", xyzt()), parse_poly<Rational>("x*y", xyzt())),
              parse_poly<Rational>("-t*(x+y)", xyzt()));
}

TEST(MultiPolyOps, Gradient) {
    const auto g = gradient(parse_poly<Rational>("x^2+y*t", xyzt()), xyzt());
    ASSERT_EQ(g.size(), 4U);
    EXPECT_EQ(g[0], parse_poly<Rational>("2*x", xyzt()));
    EXPECT_EQ(g[1], parse_poly<Rational>("t", xyzt()));
    EXPECT_TRUE(g[2].is_zero());
    EXPECT_EQ(g[3], parse_poly<Rational>("y", xyzt()));
    for (const auto& p : gradient(parse_poly<Rational>("5", xyzt()), xyzt())) EXPECT_TRUE(p.is_zero());
}

TEST(MultiPolyOps, CoeffVector) {
    EXPECT_EQ(monomials_of_degree(4, 4).size(), 35U);
    EXPECT_EQ(monomials_of_degree(3, 3).size(), 10U);
    const auto v = parse_poly<Rational>("x^4", xyzt()).coeff_vector(4);
    ASSERT_EQ(v.size(), 35U);
    EXPECT_EQ(v[0], Rational(1));
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_TRUE(v[i].is_zero());
    // graded lex x > y > z > t: x^4, x^3y, x^3z, x^3t, x^2y^2, ...
    const auto order = monomials_of_degree(4, 4);
    EXPECT_EQ(order[1], (Exponent{3, 1, 0, 0}));
    EXPECT_EQ(order[3], (Exponent{3, 0, 0, 1}));
    EXPECT_EQ(order[4], (Exponent{2, 2, 0, 0}));
    EXPECT_EQ(order[34], (Exponent{0, 0, 0, 4}));
    EXPECT_THROW(parse_poly<Rational>("x^4+y", xyzt()).coeff_vector(4), PreconditionError);
}

template <class F, class Make>
void check_field_axioms(Make&& make, int trials) {
    for (int i = 0; i < trials; ++i) {
        const F x = make(), y = make(), z = make();
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_TRUE((x - x).is_zero());
        if (!x.is_zero()) {
            EXPECT_EQ(x * x.inv(), F(1L));
            EXPECT_EQ((y / x) * x, y);
        }
    }
}

TEST(FieldProperties, Rational) {
    Gen g(1);
    check_field_axioms<Rational>([&] { return g.rational(); }, 200);
}

TEST(FieldProperties, QuadExt) {
    Gen g(2);
    check_field_axioms<QuadExt>([&] { return g.quadext(); }, 200);
}

TEST(FieldProperties, RatFun) {
    Gen g(3);
    check_field_axioms<QA>([&] { return g.ratfun(); }, 60);
}

TEST(FieldProperties, RatFunEvaluationIsHomomorphism) {
    Gen g(4);
    for (int i = 0; i < 100; ++i) {
        const QA x = g.ratfun(), y = g.ratfun();
        const Rational a0 = g.rational(20);
        try {
            const Rational xv = x.eval(a0), yv = y.eval(a0);
            EXPECT_EQ((x + y).eval(a0), xv + yv);
            EXPECT_EQ((x * y).eval(a0), xv * yv);
            if (!y.is_zero() && !yv.is_zero()) EXPECT_EQ((x / y).eval(a0), xv / yv);
        } catch (const DivisionByZero&) {
            // a0 hit a pole of one operand
        }
    }
}

TEST(MultiPolyProperties, ExactDivideInvertsMultiplication) {
    Gen g(5);
    for (int i = 0; i < 60; ++i) {
        const auto f = g.mpoly<Rational>(xyzt(), 3, 4, [&] { return g.rational(); });
        auto d = g.mpoly<Rational>(xyzt(), 2, 3, [&] { return g.rational(); });
        if (d.is_zero()) continue;
        EXPECT_EQ(exact_divide(f * d, d), f);
    }
}

TEST(MultiPolyProperties, SubstitutionComposes) {
    Gen g(6);
    using P = MultiPoly<Rational>;
    auto random_linear = [&] {
        std::vector<Rational> c;
        for (int k = 0; k < 4; ++k) c.push_back(g.rational(4));
        return P::linear(xyzt(), c);
    };
    for (int i = 0; i < 20; ++i) {
        const auto f = g.mpoly<Rational>(xyzt(), 4, 6, [&] { return g.rational(); });
        std::map<std::string, P> b1, b2;
        for (const auto& v : xyzt()) {
            b1[v] = random_linear();
            b2[v] = random_linear();
        }
        std::map<std::string, P> composed;
        for (const auto& v : xyzt()) composed[v] = substitute(b1.at(v), b2);
        EXPECT_EQ(substitute(substitute(f, b1), b2), substitute(f, composed));
        if (f.is_homogeneous() && !f.is_zero()) {
            const auto h = substitute(f, b1);
            EXPECT_TRUE(h.is_homogeneous());
        }
    }
}

TEST(LinearAlgebra, KernelExamples) {
    const auto id = Matrix<Rational>::identity(4);
    auto k = kernel(id);
    EXPECT_EQ(k.rank, 4U);
    EXPECT_TRUE(k.basis.empty());
    k = kernel(Matrix<Rational>(2, 3));
    EXPECT_EQ(k.rank, 0U);
    EXPECT_EQ(k.basis.size(), 3U);
}

TEST(LinearAlgebra, KernelProperty) {
    Gen g(7);
    for (int i = 0; i < 40; ++i) {
        const std::size_t r = static_cast<std::size_t>(g.integer(1, 5));
        const std::size_t c = static_cast<std::size_t>(g.integer(1, 6));
        Matrix<Rational> m(r, c);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < c; ++b) m(a, b) = g.integer(0, 2) == 0 ? Rational(0) : g.rational(3);
        const auto k = kernel(m);
        EXPECT_EQ(k.rank + k.basis.size(), c);
        for (const auto& v : k.basis) {
            for (const auto& e : m * v) EXPECT_TRUE(e.is_zero());
        }
    }
}

TEST(LinearAlgebra, DeterminantAndAdjugate) {
    Gen g(8);
    for (int i = 0; i < 20; ++i) {
        Matrix<QA> m(4, 4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) m(a, b) = QA(g.poly(1), QA::Poly(Rational(1)));
        const QA d = determinant(m);
        EXPECT_EQ(m * adjugate(m), Matrix<QA>::identity(4) * d);
    }
}

TEST(Scale, SimplifyProjectiveClearsDenominators) {
    std::vector<QA> v{parse_scalar<QA>("1/(2*a)"), parse_scalar<QA>("(a+1)/a^2"), QA(0)};
    const auto orig = v;
    simplify_projective(std::span<QA>(v));
    EXPECT_TRUE(v[0].is_polynomial());
    EXPECT_TRUE(v[1].is_polynomial());
    EXPECT_EQ(v[0], parse_scalar<QA>("a"));
    EXPECT_EQ(v[1], parse_scalar<QA>("2*a+2"));
    EXPECT_TRUE(proportional(std::span<const QA>(v), std::span<const QA>(orig)));
}

}  // namespace
}  // namespace quartic

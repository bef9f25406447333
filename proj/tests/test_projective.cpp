#include <gtest/gtest.h>

#include "quartic/algebra/parse.hpp"
#include "quartic/algebra/ratfun.hpp"
#include "quartic/projective.hpp"
#include "support.hpp"

namespace quartic {
namespace {

using testing::Gen;
using P = ProjPoint<Rational>;
using L = ProjLine<Rational>;
using Poly = MultiPoly<Rational>;

P pt(long x, long y, long z, long t) { return P(x, y, z, t); }
Poly poly(const std::string& s) { return parse_poly<Rational>(s, space_vars()); }

P random_point(Gen& g) {
    for (;;) {
        std::array<Rational, 4> c{g.rational(5), g.rational(5), g.rational(5), g.rational(5)};
        if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero())) return P(c);
    }
}

std::array<P, 5> random_frame(Gen& g) {
    for (;;) {
        std::array<P, 5> f{random_point(g), random_point(g), random_point(g), random_point(g), random_point(g)};
        bool ok = true;
        for (std::size_t skip = 0; skip < 5 && ok; ++skip) {
            std::vector<P> four;
            for (std::size_t k = 0; k < 5; ++k)
                if (k != skip) four.push_back(f[k]);
            ok = !coplanar(four[0], four[1], four[2], four[3]);
        }
        if (ok) return f;
    }
}

Projectivity<Rational> random_projectivity(Gen& g) {
    for (;;) {
        Matrix<Rational> m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = g.rational(4);
        if (!determinant(m).is_zero()) return Projectivity<Rational>(m);
    }
}

TEST(Collinear, Examples) {
    EXPECT_TRUE(collinear(pt(0, 0, 1, 0), pt(1, 0, 1, 0), pt(2, 0, 1, 0)));
    EXPECT_FALSE(collinear(pt(0, 0, 1, 0), pt(1, 0, 1, 0), pt(0, 1, 1, 0)));
    EXPECT_TRUE(collinear(pt(1, 2, 3, 4), pt(2, 4, 6, 8), pt(0, 1, 1, 0)));
}

TEST(ProjPointType, EqualityAndCanonicalForm) {
    EXPECT_EQ(pt(2, 4, 0, 6), pt(1, 2, 0, 3));
    EXPECT_NE(pt(1, 2, 0, 3), pt(1, 2, 0, 4));
    const auto c = P(Rational(0), Rational(3), Rational(6), Rational(-3)).canonical();
    EXPECT_EQ(c[1], Rational(1));
    EXPECT_EQ(c[2], Rational(2));
    EXPECT_THROW(pt(0, 0, 0, 0), PreconditionError);
}

TEST(LineIntersect, AxesThroughOrigin) {
    const L xaxis(pt(1, 0, 0, 0), pt(0, 0, 0, 1));
    const L yaxis(pt(0, 1, 0, 0), pt(0, 0, 0, 1));
    auto p = line_intersect(xaxis, yaxis);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(*p, P::origin());
}

TEST(LineIntersect, SkewLines) {
    const L xaxis(pt(1, 0, 0, 0), pt(0, 0, 0, 1));
    const L other(pt(0, 1, 0, 1), pt(0, 1, 1, 1));
    EXPECT_FALSE(line_intersect(xaxis, other).has_value());
    EXPECT_THROW(line_intersect(xaxis, xaxis), PreconditionError);
}

TEST(LineIntersect, BaseSextupleAxes) {
    const L l01(pt(1, 0, 0, 1), pt(2, 0, 0, 1));
    const L l23(pt(0, 1, 0, 1), pt(0, 2, 0, 1));
    auto p = line_intersect(l01, l23);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(*p, P::origin());
}

TEST(PlaneRestrict, Examples) {
    const ProjPlane<Rational> t0({Rational(0), Rational(0), Rational(0), Rational(1)});
    EXPECT_TRUE(plane_restrict(poly("t"), t0).form.is_zero());
    const ProjPlane<Rational> x0({Rational(1), Rational(0), Rational(0), Rational(0)});
    EXPECT_TRUE(plane_restrict(poly("x"), x0).form.is_zero());
    EXPECT_THROW(plane_restrict(poly("x^2+y"), x0), PreconditionError);
}

TEST(PlaneRestrict, RohnSplitsIntoFourLinearFactors) {
    const auto rohn = poly("t*((x+y+z)^3+x*y*z)+(x+y+z)*(x-y)*(y-z)*(z-x)");
    const ProjPlane<Rational> plane({Rational(1), Rational(1), Rational(1), Rational(0)});
    const auto r = plane_restrict(rohn, plane);
    // Pull back t, x, y, z along the basis; their product is proportional to
    // the restricted quartic.
    Poly product(plane_vars(), Rational(1));
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Rational> c;
        for (const auto& b : r.basis) c.push_back(b[i]);
        product = product * Poly::linear(plane_vars(), c);
    }
    const auto lhs = r.form.coeff_vector(4);
    const auto rhs = product.coeff_vector(4);
    EXPECT_TRUE(proportional(std::span<const Rational>(lhs), std::span<const Rational>(rhs)));
    EXPECT_FALSE(r.form.is_zero());
}

TEST(Projectivity, FiveStandardPoints) {
    const std::array<P, 5> frame{pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1), pt(1, 1, 1, 1)};
    EXPECT_EQ(projectivity_from_five_points<Rational>(frame, frame), Projectivity<Rational>::identity());
    const std::array<P, 5> swapped{pt(0, 1, 0, 0), pt(1, 0, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1), pt(1, 1, 1, 1)};
    const Projectivity<Rational> transposition(
        Matrix<Rational>{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    EXPECT_EQ(projectivity_from_five_points<Rational>(frame, swapped), transposition);
}

TEST(Projectivity, GeneralPositionViolation) {
    const std::array<P, 5> bad{pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(1, 1, 0, 0), pt(0, 0, 0, 1), pt(1, 1, 1, 1)};
    const std::array<P, 5> frame{pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1), pt(1, 1, 1, 1)};
    EXPECT_THROW(projectivity_from_five_points<Rational>(bad, frame), GeneralPositionError);
    const std::array<P, 5> bad5{pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1), pt(1, 1, 0, 1)};
    try {
        projectivity_from_five_points<Rational>(frame, bad5);
        FAIL() << "expected GeneralPositionError";
    } catch (const GeneralPositionError& e) {
        EXPECT_NE(std::string(e.what()).find("0,1,3,4"), std::string::npos) << e.what();
    }
}

TEST(Projectivity, ApplyPoint) {
    EXPECT_EQ(Projectivity<Rational>::identity().apply(pt(3, 1, 4, 1)), pt(3, 1, 4, 1));
    const Projectivity<Rational> d(Matrix<Rational>{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    EXPECT_EQ(d.apply(pt(1, 1, 0, 0)), pt(2, 1, 0, 0));
}

TEST(Projectivity, ApplyForm) {
    const auto f = poly("x^3*y+z*t^3-2*x*y*z*t");
    EXPECT_EQ(Projectivity<Rational>::identity().apply_form(f), f);
    const Projectivity<Rational> swap(Matrix<Rational>{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    // the adjugate of a transposition is -1 times its inverse
    const auto img = swap.apply_form(poly("x")).coeff_vector(1);
    const auto y = poly("y").coeff_vector(1);
    EXPECT_TRUE(proportional(std::span<const Rational>(img), std::span<const Rational>(y)));
    EXPECT_THROW(Projectivity<Rational>(Matrix<Rational>(4, 4)), PreconditionError);
}

TEST(ProjectiveProperties, ZerosMapToZeros) {
    Gen g(21);
    for (int i = 0; i < 25; ++i) {
        // a random point R and a random quadric through it
        const P r = random_point(g);
        auto f = g.mpoly<Rational>(space_vars(), 2, 6, [&] { return g.rational(); });
        Poly hom(space_vars());
        for (const auto& [e, c] : f.terms())
            if (total_degree(e) == 2) hom.add_term(e, c);
        if (hom.is_zero()) continue;
        std::vector<Rational> rv(r.coords().begin(), r.coords().end());
        hom -= Poly(space_vars(), hom.evaluate(rv)) * poly("x^2+y^2+z^2+t^2") *
               (poly("x^2+y^2+z^2+t^2").evaluate(rv)).inv();
        ASSERT_TRUE(hom.evaluate(rv).is_zero());
        const auto m = random_projectivity(g);
        const auto img = m.apply(r);
        const auto mf = m.apply_form(hom);
        EXPECT_TRUE(mf.evaluate(std::vector<Rational>(img.coords().begin(), img.coords().end())).is_zero());
    }
}

TEST(ProjectiveProperties, CollinearityIsInvariant) {
    Gen g(22);
    for (int i = 0; i < 50; ++i) {
        const P p = random_point(g), q = random_point(g);
        if (p == q) continue;
        const L line(p, q);
        EXPECT_TRUE(line.plucker_relation().is_zero());
        // third point on the line and a generic one
        std::array<Rational, 4> on;
        const Rational s = g.rational(), u = g.rational();
        for (std::size_t k = 0; k < 4; ++k) on[k] = s * p[k] + u * q[k];
        const auto m = random_projectivity(g);
        if (!(on[0].is_zero() && on[1].is_zero() && on[2].is_zero() && on[3].is_zero())) {
            EXPECT_TRUE(collinear(m.apply(p), m.apply(q), m.apply(P(on))));
        }
        const P r = random_point(g);
        EXPECT_EQ(collinear(p, q, r), collinear(m.apply(p), m.apply(q), m.apply(r)));
    }
}

TEST(ProjectiveProperties, FivePointReproducesTargets) {
    Gen g(23);
    for (int i = 0; i < 25; ++i) {
        const auto src = random_frame(g);
        const auto dst = random_frame(g);
        const auto m = projectivity_from_five_points<Rational>(src, dst);
        for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(m.apply(src[k]), dst[k]);
        // uniqueness: a different ordering of the frame gives the same class
        const std::array<P, 5> src2{src[4], src[2], src[0], src[3], src[1]};
        const std::array<P, 5> dst2{dst[4], dst[2], dst[0], dst[3], dst[1]};
        EXPECT_EQ(projectivity_from_five_points<Rational>(src2, dst2), m);
    }
}

TEST(ProjectiveProperties, ApplyFormComposesContravariantly) {
    Gen g(24);
    for (int i = 0; i < 10; ++i) {
        Poly f(space_vars());
        auto raw = g.mpoly<Rational>(space_vars(), 3, 8, [&] { return g.rational(); });
        for (const auto& [e, c] : raw.terms())
            if (total_degree(e) == 3) f.add_term(e, c);
        if (f.is_zero()) continue;
        const auto m1 = random_projectivity(g), m2 = random_projectivity(g);
        const auto lhs = (m1 * m2).apply_form(f);
        const auto rhs = m1.apply_form(m2.apply_form(f));
        EXPECT_TRUE(lhs.is_homogeneous());
        EXPECT_EQ(lhs.degree(), 3);
        const auto a = lhs.coeff_vector(3), b = rhs.coeff_vector(3);
        EXPECT_TRUE(proportional(std::span<const Rational>(a), std::span<const Rational>(b)));
    }
}

TEST(ProjectiveProperties, SymbolicPointsStayPolynomial) {
    const auto a = QA::generator();
    const ProjPoint<QA> p(a / (a + QA(1)), QA(1) / a, QA(0), QA(2));
    for (const auto& c : p.coords()) EXPECT_TRUE(c.is_polynomial());
    EXPECT_EQ(p, ProjPoint<QA>(a * a, a + QA(1), QA(0), QA(2) * a * (a + QA(1))));
}

}  // namespace
}  // namespace quartic

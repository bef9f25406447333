#include <gtest/gtest.h>

#include <set>

#include "quartic/configuration.hpp"
#include "support.hpp"

namespace quartic {
namespace {

using testing::Gen;

Rational random_nondegenerate(Gen& g) {
    for (;;) {
        const Rational a = g.rational(30);
        if (!is_degenerate(a, Flavor::Original) && !is_degenerate(a, Flavor::Normalized)) return a;
    }
}

TEST(TripleList, PartialLinearSpace) {
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& t : triple_list()) {
        EXPECT_TRUE(t[0] < t[1] && t[1] < t[2]);
        ++pair_count[{t[0], t[1]}];
        ++pair_count[{t[0], t[2]}];
        ++pair_count[{t[1], t[2]}];
    }
    EXPECT_EQ(triple_list().size(), 19U);
    for (const auto& [p, n] : pair_count) EXPECT_EQ(n, 1) << p.first << "," << p.second;
}

TEST(TripleList, IncidenceCounts) {
    const std::array<int, 12> expected{5, 5, 4, 5, 5, 5, 5, 5, 5, 4, 5, 4};
    EXPECT_EQ(incidence_counts(), expected);
}

TEST(AdmissibleTriplets, CountAndExamples) {
    const auto t = admissible_triplets();
    EXPECT_EQ(t.size(), 720U);
    auto has = [&](Triple x) { return std::find(t.begin(), t.end(), x) != t.end(); };
    EXPECT_TRUE(has({0, 1, 3}));
    EXPECT_TRUE(has({11, 10, 9}));
    EXPECT_FALSE(has({0, 1, 2}));
    std::set<Triple> unordered;
    for (const auto& x : t) unordered.insert(sorted(x));
    EXPECT_EQ(unordered.size(), 120U);
}

TEST(BuildPoints, Coordinates) {
    const auto c = build_points(Rational(3), Flavor::Original);
    EXPECT_EQ(c[7], ProjPoint<Rational>(4, 1, 5, 0));
    EXPECT_EQ(c[5], ProjPoint<Rational>(Rational(1), Rational(1), Rational(3, 2), Rational(0)));
    const auto n = build_points(Rational(3), Flavor::Normalized);
    EXPECT_EQ(n[8], ProjPoint<Rational>(3, -5, 3, 0));
    EXPECT_EQ(n[3], ProjPoint<Rational>(1, 5, -3, 0));
    for (const auto& p : c.points) EXPECT_TRUE(p[3].is_zero());
}

TEST(BuildPoints, DegenerateParameter) {
    EXPECT_THROW(build_points(Rational(0), Flavor::Original), DegenerateParameter);
    for (const auto& d : degeneracy_set()) EXPECT_THROW(build_points(d, Flavor::Normalized), DegenerateParameter);
}

TEST(VerifyCollinearities, GenericRational) {
    const auto r = verify_collinearities(build_points(Rational(3), Flavor::Original));
    EXPECT_EQ(r.present, triple_list());
    EXPECT_TRUE(r.extra.empty());
    EXPECT_TRUE(r.distinct());
    Gen g(31);
    for (int i = 0; i < 50; ++i) {
        const Rational a = random_nondegenerate(g);
        for (auto flavor : {Flavor::Original, Flavor::Normalized}) {
            EXPECT_TRUE(verify_collinearities(build_points(a, flavor)).exact()) << a.to_string();
        }
    }
}

TEST(VerifyCollinearities, DegenerateValuesPerFlavor) {
    for (auto flavor : {Flavor::Original, Flavor::Normalized}) {
        for (long n = -12; n <= 12; ++n)
            for (long d = 1; d <= 4; ++d) {
                const Rational a(n, d);
                const auto r = verify_collinearities(raw_points(a, flavor));
                EXPECT_EQ(r.degeneracy(), actual_degeneracy(a, flavor)) << to_string(flavor) << " a=" << a.to_string();
            }
    }
}

TEST(VerifyCollinearities, StatedClassification) {
    // The point-coincidence half holds for the Original coordinates.
    for (const auto& a : {Rational(-1), Rational(0)}) {
        EXPECT_EQ(verify_collinearities(raw_points(a, Flavor::Original)).degeneracy(), stated_degeneracy(a));
    }
    EXPECT_EQ(verify_collinearities(raw_points(Rational(1), Flavor::Original)).degeneracy(),
              Degeneracy::ExtraCollinearity);
    // Original coordinates stay generic at 1/2 and 2 and degenerate at the
    // opposite values.
    EXPECT_TRUE(verify_collinearities(raw_points(Rational(1, 2), Flavor::Original)).exact());
    EXPECT_TRUE(verify_collinearities(raw_points(Rational(2), Flavor::Original)).exact());
    EXPECT_FALSE(verify_collinearities(raw_points(Rational(-1, 2), Flavor::Original)).exact());
    EXPECT_FALSE(verify_collinearities(raw_points(Rational(-2), Flavor::Original)).exact());
    // The Normalized coordinates degenerate exactly on D.
    for (const auto& a : degeneracy_set()) {
        EXPECT_FALSE(verify_collinearities(raw_points(a, Flavor::Normalized)).exact()) << a.to_string();
    }
}

TEST(DegeneracyLocus, SymbolicScanMatchesTables) {
    auto roots_poly = [](const std::vector<Rational>& roots) {
        UniPoly<Rational> p(Rational(1));
        for (const auto& r : roots) p = p * UniPoly<Rational>(std::vector<Rational>{-r, Rational(1)});
        return p;
    };
    for (auto flavor : {Flavor::Original, Flavor::Normalized}) {
        const auto loc = degeneracy_locus(flavor);
        EXPECT_EQ(loc.coincide, roots_poly(degenerate_values(flavor).coincide)) << loc.coincide.to_string("a");
        EXPECT_EQ(loc.collinear, roots_poly(degenerate_values(flavor).collinear)) << loc.collinear.to_string("a");
    }
}

TEST(BuildPoints, RejectsOriginalDegeneracies) {
    EXPECT_THROW(build_points(Rational(-2), Flavor::Original), DegenerateParameter);
    EXPECT_THROW(build_points(Rational(-1, 2), Flavor::Original), DegenerateParameter);
    EXPECT_NO_THROW(build_points(Rational(-2), Flavor::Normalized));
}

TEST(VerifyCollinearities, Symbolic) {
    for (auto flavor : {Flavor::Original, Flavor::Normalized}) {
        const auto r = verify_collinearities(build_points(QA::generator(), flavor));
        EXPECT_EQ(r.present, triple_list());
        EXPECT_TRUE(r.exact());
    }
}

TEST(Cubic, AtThree) {
    const auto c = cubic_through_points(build_points(Rational(3), Flavor::Original));
    const auto expected = parse_poly<Rational>(
        "2*x^3+35*x^2*y-6*x^2*z+22*x*y^2+4*x*z^2-42*x*y*z+4*y^3-12*y^2*z+8*y*z^2", plane_xyz());
    EXPECT_TRUE(proportional(c, expected));
    EXPECT_TRUE(proportional(printed_cubic(Rational(3)), expected));
}

TEST(Cubic, SymbolicMatchesPrintedCubic) {
    const auto a = QA::generator();
    const auto c = cubic_through_points(build_points(a, Flavor::Original));
    EXPECT_TRUE(proportional(c, printed_cubic(a)));
}

TEST(Cubic, NormalizedFlavorHasUniqueCubic) {
    const auto cfg = build_points(Rational(3), Flavor::Normalized);
    const auto c = cubic_through_points(cfg);
    for (const auto& p : cfg.points) {
        EXPECT_TRUE(c.evaluate({p[0], p[1], p[2]}).is_zero());
    }
}

TEST(QuarticSystem, AtThree) {
    const auto s = quartic_system(build_points(Rational(3), Flavor::Original));
    EXPECT_EQ(s.rank, 11U);
    EXPECT_EQ(s.dim, 4U);
    EXPECT_TRUE(s.basis_spans);
    EXPECT_TRUE(proportional(s.basis[3], printed_quartic(Rational(3))));
    // x passes through P0 = (0,0,1), so x is skipped as an auxiliary line
    EXPECT_NE(s.lines[0], MultiPoly<Rational>::linear(plane_xyz(), {Rational(1), Rational(0), Rational(0)}));
}

TEST(QuarticSystem, SymbolicProductQuartic) {
    const auto a = QA::generator();
    const auto s = quartic_system(build_points(a, Flavor::Original));
    EXPECT_EQ(s.dim, 4U);
    EXPECT_TRUE(s.basis_spans);
    EXPECT_TRUE(proportional(s.basis[3], printed_quartic(a)));
}

TEST(QuarticSystem, MinorLocusZeroAndMinusOne) {
    const auto r = quartic_minor_locus(build_points(QA::generator(), Flavor::Original));
    EXPECT_EQ(r.reduced_rank, 5U);
    EXPECT_TRUE(r.maximal_minors_vanish);
    // rank drops at a = 0 and also at a = -1, where P3 = P7, P4 = P8, P5 = P6
    EXPECT_EQ(r.gcd, parse_scalar<QA>("a^6*(a+1)^2").numerator());
    EXPECT_EQ(r.locus, parse_scalar<QA>("a*(a+1)").numerator());
}

}  // namespace
}  // namespace quartic

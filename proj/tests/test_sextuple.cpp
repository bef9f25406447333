#include <gtest/gtest.h>

#include "quartic/sextuple.hpp"
#include "random_geometry.hpp"
#include "support.hpp"

namespace quartic {
namespace {

using testing::Gen;
using testing::random_convergent_sextuple;

template <Field F>
ProjPoint<F> pt(const std::array<std::string, 4>& c, const std::map<std::string, F>& bind = {}) {
    return ProjPoint<F>(parse_scalar<F>(c[0], bind), parse_scalar<F>(c[1], bind), parse_scalar<F>(c[2], bind),
                        parse_scalar<F>(c[3], bind));
}

TEST(IsConvergent, BaseSextuple) {
    const auto r = is_convergent(base_sextuple<Rational>());
    EXPECT_TRUE(r.ok) << r.failure;
    ASSERT_TRUE(r.apex.has_value());
    EXPECT_EQ(*r.apex, ProjPoint<Rational>::origin());
}

TEST(IsConvergent, CoplanarAndRepeated) {
    auto p = [](long x, long y) { return pt<Rational>({std::to_string(x), std::to_string(y), "0", "1"}); };
    const std::array<ProjPoint<Rational>, 6> flat{p(1, 0), p(2, 0), p(0, 1), p(0, 2), p(1, 3), p(2, 6)};
    const auto r = is_convergent(flat);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.failure, "the six points are coplanar");

    auto rep = base_sextuple<Rational>().e;
    rep[5] = rep[4];
    EXPECT_FALSE(is_convergent(rep).ok);
    EXPECT_EQ(is_convergent(rep).failure, "E4 and E5 coincide");

    auto col = base_sextuple<Rational>().e;
    col[2] = pt<Rational>({"3", "0", "0", "1"});
    EXPECT_FALSE(is_convergent(col).ok);
}

TEST(StandardSextuple, QabTriple013Symbolic) {
    const QAB a(QA::generator());
    const QAB b = QAB::generator();
    const auto s = build_qab(a, b);
    const auto e = standard_sextuple(s, {0, 1, 3});
    const std::map<std::string, QAB> bind{{"a", a}, {"b", b}};
    const std::array<std::array<std::string, 4>, 6> expected{{{"0", "0", "1", "0"},
                                                              {"0", "0", "1", "4*a*b"},
                                                              {"1", "0", "1", "0"},
                                                              {"1", "0", "1", "-(a+1)*b"},
                                                              {"0", "1", "1", "2*(2*a+1)*b"},
                                                              {"0", "1", "1", "(2*a+1)*b"}}};
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(e[i], pt<QAB>(expected[i], bind)) << "E" << i;
}

TEST(StandardSextuple, QaTriple11_10_9IsBase) {
    const auto s = build_qa(QA::generator());
    const auto e = standard_sextuple(s, {11, 10, 9});
    const auto base = base_sextuple<QA>();
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(e[i], base[i]) << "E" << i;
}

TEST(StandardSextuple, SixLinesOnSurface) {
    const auto s = build_qa(Rational(3));
    const auto adm = admissible_triplets();
    for (const Triple t : {Triple{0, 1, 3}, Triple{11, 10, 9}, adm[137], adm[611]}) {
        const auto e = standard_sextuple(s, t);
        for (const auto [p, q] : {std::pair{0, 1}, {2, 3}, {4, 5}, {0, 2}, {3, 5}, {1, 4}}) {
            EXPECT_TRUE(line_on_surface(s, ProjLine(e[static_cast<std::size_t>(p)], e[static_cast<std::size_t>(q)])));
        }
    }
}

TEST(StandardSextuple, InadmissibleTriple) {
    const auto s = build_qa(Rational(3));
    EXPECT_THROW(standard_sextuple(s, {0, 1, 2}), PreconditionError);
}

TEST(StandardSextuple, All720AtThreeConvergeAtOrigin) {
    const auto s = build_qa(Rational(3));
    std::size_t n = 0;
    for (const auto& t : admissible_triplets()) {
        const auto e = standard_sextuple(s, t);
        const auto r = is_convergent(e);
        EXPECT_TRUE(r.ok) << r.failure;
        EXPECT_EQ(*r.apex, ProjPoint<Rational>::origin());
        ++n;
    }
    EXPECT_EQ(n, 720U);
}

TEST(SextupleProjectivity, IdentityAndCycle) {
    const auto base = base_sextuple<Rational>();
    EXPECT_EQ(sextuple_projectivity(base, base), Projectivity<Rational>::identity());
    const Sextuple<Rational> cyc{{base[2], base[3], base[4], base[5], base[0], base[1]}, std::nullopt};
    const Projectivity<Rational> expected(Matrix<Rational>{{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    EXPECT_EQ(sextuple_projectivity(base, cyc), expected);
}

TEST(SextupleProjectivity, CompositionAndUniqueness) {
    Gen g(2024);
    for (int n = 0; n < 10; ++n) {
        const auto e = random_convergent_sextuple(g);
        const auto f = random_convergent_sextuple(g);
        const auto h = random_convergent_sextuple(g);
        const auto ef = sextuple_projectivity(e, f);
        EXPECT_EQ(sextuple_projectivity(f, h) * ef, sextuple_projectivity(e, h));
        EXPECT_EQ(ef, sextuple_projectivity(e, f, FrameChoice::A2));
        EXPECT_EQ(sextuple_projectivity(e, e), Projectivity<Rational>::identity());
    }
}

TEST(AuxCollinearity, BaseAndRandom) {
    EXPECT_TRUE(aux_collinearity_check(base_sextuple<Rational>()));
    Gen g(99);
    for (int n = 0; n < 30; ++n) EXPECT_TRUE(aux_collinearity_check(random_convergent_sextuple(g)));
    auto bad = base_sextuple<Rational>();
    bad.e[1] = bad.e[0];
    EXPECT_THROW(aux_collinearity_check(bad), PreconditionError);
}

TEST(BIndependence, TransportIsFreeOfB) {
    const QAB a(QA::generator());
    const QAB b = QAB::generator();
    const auto s = build_qab(a, b);
    for (const Triple t : {Triple{0, 1, 3}, Triple{11, 10, 9}}) {
        const auto m = sextuple_projectivity(standard_sextuple(s, t), base_sextuple<QAB>());
        auto c = m.apply_form(s.poly).coeff_vector(4, space_vars());
        simplify_projective(std::span<QAB>(c));
        for (const auto& v : c) EXPECT_TRUE(v.is_constant()) << v.to_string();
    }
}

TEST(BIndependence, ConcreteValues) {
    for (const Triple t : {Triple{0, 1, 3}, Triple{11, 10, 9}}) {
        std::vector<MultiPoly<Rational>> images;
        for (const long b : {1L, 5L, -2L}) {
            const auto s = build_qab(Rational(3), Rational(b));
            const auto m = sextuple_projectivity(standard_sextuple(s, t), base_sextuple<Rational>());
            images.push_back(m.apply_form(s.poly));
        }
        EXPECT_TRUE(proportional(images[0], images[1]));
        EXPECT_TRUE(proportional(images[0], images[2]));
    }
}

}  // namespace
}  // namespace quartic

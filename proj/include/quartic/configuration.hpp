#pragma once

/// @file configuration.hpp
/// The twelve plane points P0..P11 with 19 collinear triples, their
/// parametrization by a, degeneracy analysis, and the linear systems of
/// cubics and quartics through them.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/matrix.hpp"
#include "quartic/algebra/mpoly.hpp"
#include "quartic/algebra/parse.hpp"
#include "quartic/algebra/ratfun.hpp"
#include "quartic/projective.hpp"

namespace quartic {

using Triple = std::array<int, 3>;

inline constexpr int kNumPoints = 12;

/// The 19 collinear triples, each sorted, in list order.
inline const std::vector<Triple>& triple_list() {
    static const std::vector<Triple> list{
        {0, 1, 2},  {0, 3, 4},  {0, 5, 6},  {0, 7, 8}, {0, 9, 10}, {1, 3, 7},  {1, 4, 5},
        {1, 6, 8},  {1, 10, 11}, {2, 3, 5}, {2, 6, 7}, {2, 9, 11}, {3, 6, 10}, {3, 8, 11},
        {4, 6, 9},  {4, 7, 11}, {4, 8, 10}, {5, 7, 10}, {5, 8, 9}};
    return list;
}

inline Triple sorted(Triple t) {
    std::sort(t.begin(), t.end());
    return t;
}

inline bool is_listed_triple(Triple t) {
    const auto& l = triple_list();
    return std::find(l.begin(), l.end(), sorted(t)) != l.end();
}

/// Label completing {i, j} to a listed triple, if any.
inline std::optional<int> third_point(int i, int j) {
    for (const auto& t : triple_list()) {
        const bool hi = t[0] == i || t[1] == i || t[2] == i;
        const bool hj = t[0] == j || t[1] == j || t[2] == j;
        if (hi && hj && i != j) {
            for (int k : t)
                if (k != i && k != j) return k;
        }
    }
    return std::nullopt;
}

/// Listed triple containing both labels.
inline std::optional<Triple> triple_through(int i, int j) {
    if (auto k = third_point(i, j)) return sorted({i, j, *k});
    return std::nullopt;
}

/// Number of listed triples through each label.
inline std::array<int, kNumPoints> incidence_counts() {
    std::array<int, kNumPoints> c{};
    for (const auto& t : triple_list())
        for (int k : t) ++c[static_cast<std::size_t>(k)];
    return c;
}

/// Ordered triples (i, j, k) that are not collinear but whose three pairs
/// each extend to a listed triple. These index the standard sextuples.
inline std::vector<Triple> admissible_triplets() {
    std::vector<Triple> out;
    for (int i = 0; i < kNumPoints; ++i)
        for (int j = 0; j < kNumPoints; ++j)
            for (int k = 0; k < kNumPoints; ++k) {
                if (i == j || i == k || j == k) continue;
                if (is_listed_triple({i, j, k})) continue;
                if (third_point(i, j) && third_point(i, k) && third_point(j, k)) out.push_back({i, j, k});
            }
    return out;
}

enum class Flavor { Original, Normalized };

inline std::string to_string(Flavor f) { return f == Flavor::Original ? "original" : "normalized"; }

/// The set D = {-1, 0, 1/2, 1, 2} of excluded parameter values.
inline const std::vector<Rational>& degeneracy_set() {
    static const std::vector<Rational> d{Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    return d;
}

enum class Degeneracy { None, PointsCoincide, ExtraCollinearity };

inline std::string to_string(Degeneracy d) {
    switch (d) {
        case Degeneracy::None: return "none";
        case Degeneracy::PointsCoincide: return "points coincide";
        case Degeneracy::ExtraCollinearity: return "extra collinearity";
    }
    return "?";
}

template <Field F>
bool in_degeneracy_set(const F& a) {
    const auto& d = degeneracy_set();
    return std::any_of(d.begin(), d.end(), [&](const Rational& r) { return a == F(r); });
}

/// Classification as stated for D: a in {-1, 0} makes points coincide,
/// a in {1/2, 1, 2} adds collinearities.
template <Field F>
Degeneracy stated_degeneracy(const F& a) {
    if (a == F(-1L) || a == F(0L)) return Degeneracy::PointsCoincide;
    if (a == F(Rational(1, 2)) || a == F(1L) || a == F(2L)) return Degeneracy::ExtraCollinearity;
    return Degeneracy::None;
}

/// Degenerate parameter values of each coordinate flavor, as found by the
/// symbolic scan in degeneracy_locus(). The Original coordinates
/// degenerate on {-2, -1, -1/2, 0, 1}; the Normalized ones on D.
struct DegenerateValues {
    std::vector<Rational> coincide;   ///< some points coincide
    std::vector<Rational> collinear;  ///< points distinct, extra collinear triples
};

inline const DegenerateValues& degenerate_values(Flavor f) {
    static const DegenerateValues original{{Rational(-1), Rational(0)}, {Rational(-2), Rational(-1, 2), Rational(1)}};
    static const DegenerateValues normalized{{Rational(-1), Rational(0), Rational(1)}, {Rational(1, 2), Rational(2)}};
    return f == Flavor::Original ? original : normalized;
}

template <Field F>
Degeneracy actual_degeneracy(const F& a, Flavor flavor) {
    const auto& v = degenerate_values(flavor);
    auto hit = [&](const std::vector<Rational>& set) {
        return std::any_of(set.begin(), set.end(), [&](const Rational& r) { return a == F(r); });
    };
    if (hit(v.coincide)) return Degeneracy::PointsCoincide;
    if (hit(v.collinear)) return Degeneracy::ExtraCollinearity;
    return Degeneracy::None;
}

/// True when a is in D or degenerates the given flavor.
template <Field F>
bool is_degenerate(const F& a, Flavor flavor) {
    return in_degeneracy_set(a) || actual_degeneracy(a, flavor) != Degeneracy::None;
}

namespace detail {
inline const std::array<std::array<const char*, 3>, kNumPoints>& original_coordinates() {
    static const std::array<std::array<const char*, 3>, kNumPoints> c{{
        {"0", "0", "1"},
        {"1", "0", "1"},
        {"2", "0", "1"},
        {"0", "1", "1"},
        {"0", "2", "1"},
        {"1", "1", "3/2"},
        {"1", "1", "a/2+2"},
        {"a+1", "1", "a+2"},
        {"a+1", "1", "3*a/2+2"},
        {"1", "-a+1", "2"},
        {"1", "-a+1", "-a/2+2"},
        {"a+1", "-a+1", "a/2+2"},
    }};
    return c;
}
inline const std::array<std::array<const char*, 3>, kNumPoints>& normalized_coordinates() {
    static const std::array<std::array<const char*, 3>, kNumPoints> c{{
        {"0", "1", "-1"},
        {"1", "-1", "0"},
        {"1", "0", "-1"},
        {"1", "2*a-1", "-a"},
        {"1", "a-2", "1"},
        {"a", "-2*a+1", "-1"},
        {"1", "a-2", "-a"},
        {"a", "-a+2", "-1"},
        {"a", "-2*a+1", "a"},
        {"0", "0", "1"},
        {"0", "1", "0"},
        {"1", "0", "0"},
    }};
    return c;
}
}  // namespace detail

/// The twelve points for parameter a without any degeneracy check. They
/// lie in the plane t = 0.
template <Field F>
std::array<ProjPoint<F>, kNumPoints> raw_points(const F& a, Flavor flavor) {
    const auto& table = flavor == Flavor::Original ? detail::original_coordinates() : detail::normalized_coordinates();
    const std::map<std::string, F> bind{{"a", a}};
    std::vector<ProjPoint<F>> pts;
    for (const auto& row : table) {
        pts.emplace_back(parse_scalar<F>(row[0], bind), parse_scalar<F>(row[1], bind), parse_scalar<F>(row[2], bind),
                         F(0L));
    }
    return {pts[0], pts[1], pts[2], pts[3], pts[4], pts[5], pts[6], pts[7], pts[8], pts[9], pts[10], pts[11]};
}

template <Field F>
struct Configuration {
    F a;
    Flavor flavor;
    std::array<ProjPoint<F>, kNumPoints> points;

    const ProjPoint<F>& operator[](int i) const { return points[static_cast<std::size_t>(i)]; }
};

template <Field F>
Configuration<F> build_points(const F& a, Flavor flavor) {
    if (auto d = actual_degeneracy(a, flavor); d != Degeneracy::None) {
        throw DegenerateParameter("degenerate parameter a = " + a.to_string() + ": " + to_string(d));
    }
    if (in_degeneracy_set(a)) {
        throw DegenerateParameter("degenerate parameter a = " + a.to_string() + ": a is in D = {-1, 0, 1/2, 1, 2}");
    }
    return {a, flavor, raw_points(a, flavor)};
}

struct CollinearityReport {
    std::vector<Triple> present;   ///< listed triples that are collinear
    std::vector<Triple> missing;   ///< listed triples that are not
    std::vector<Triple> extra;     ///< collinear triples of distinct points that are not listed
    std::vector<std::pair<int, int>> coincident;
    bool distinct() const { return coincident.empty(); }
    bool exact() const { return distinct() && missing.empty() && extra.empty(); }
    Degeneracy degeneracy() const {
        if (!distinct()) return Degeneracy::PointsCoincide;
        if (!extra.empty() || !missing.empty()) return Degeneracy::ExtraCollinearity;
        return Degeneracy::None;
    }
};

/// Scans all 220 triples of labels. Triples containing a coincident pair
/// are not reported as extra collinearities.
template <Field F>
CollinearityReport verify_collinearities(const std::array<ProjPoint<F>, kNumPoints>& pts) {
    CollinearityReport r;
    for (int i = 0; i < kNumPoints; ++i)
        for (int j = i + 1; j < kNumPoints; ++j)
            if (pts[static_cast<std::size_t>(i)] == pts[static_cast<std::size_t>(j)]) r.coincident.emplace_back(i, j);
    auto same = [&](int i, int j) {
        return std::find(r.coincident.begin(), r.coincident.end(), std::pair<int, int>{i, j}) != r.coincident.end();
    };
    for (int i = 0; i < kNumPoints; ++i)
        for (int j = i + 1; j < kNumPoints; ++j)
            for (int k = j + 1; k < kNumPoints; ++k) {
                const bool col = collinear(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)],
                                           pts[static_cast<std::size_t>(k)]);
                const bool listed = is_listed_triple({i, j, k});
                if (listed) {
                    (col ? r.present : r.missing).push_back({i, j, k});
                } else if (col && !same(i, j) && !same(i, k) && !same(j, k)) {
                    r.extra.push_back({i, j, k});
                }
            }
    return r;
}

template <Field F>
CollinearityReport verify_collinearities(const Configuration<F>& c) {
    return verify_collinearities(c.points);
}

inline const std::vector<std::string>& plane_xyz() {
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}

/// Interpolation matrix: one row per point, one column per monomial of
/// `degree` in (x, y, z).
template <Field F>
Matrix<F> interpolation_matrix(const std::array<ProjPoint<F>, kNumPoints>& pts, unsigned degree) {
    const auto monos = monomials_of_degree(degree, 3);
    Matrix<F> m(kNumPoints, monos.size());
    for (std::size_t i = 0; i < kNumPoints; ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) {
            F v(1L);
            for (std::size_t k = 0; k < 3; ++k) {
                if (monos[j][k] != 0) v = v * power(pts[i][k], monos[j][k]);
            }
            m(i, j) = v;
        }
    return m;
}

template <Field F>
MultiPoly<F> form_from_coefficients(const std::vector<F>& coefs, unsigned degree,
                                    const std::vector<std::string>& vars) {
    const auto monos = monomials_of_degree(degree, vars.size());
    MultiPoly<F> p(vars);
    for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], coefs[j]);
    return p;
}

/// The plane cubic through the twelve points (unique up to scale).
template <Field F>
MultiPoly<F> cubic_through_points(const Configuration<F>& c) {
    auto k = kernel(interpolation_matrix(c.points, 3));
    if (k.basis.size() != 1) {
        throw DegenerateParameter("cubic interpolation has nullity " + std::to_string(k.basis.size()) + ", expected 1");
    }
    simplify_projective(std::span<F>(k.basis[0]));
    return form_from_coefficients(k.basis[0], 3, plane_xyz());
}

/// Cubic F3(a) as printed with the coordinates of the Original flavor.
template <Field F>
MultiPoly<F> printed_cubic(const F& a) {
    return parse_poly<F>(
        "(a-1)*x^3+(2*a^2+6*a-1)*x^2*y-3*(a-1)*x^2*z+(a^2+4*a+1)*x*y^2"
        "+2*(a-1)*x*z^2-2*a*(a+4)*x*y*z+(a+1)*y^3-3*(a+1)*y^2*z+2*(a+1)*y*z^2",
        plane_xyz(), {{"a", a}});
}

/// Quartic F4(a): product of the four lines through the triples
/// (0,1,2), (3,6,10), (4,7,11), (5,8,9) for the Original flavor.
template <Field F>
MultiPoly<F> printed_quartic(const F& a) {
    return parse_poly<F>("y*(3*a*x-2*a*z+x-y)*(2*a*x+a*y-2*a*z+3*x+y-2*z)*(a*x+2*x+2*y-2*z)", plane_xyz(),
                         {{"a", a}});
}

/// Linear form of the plane line through two points of t = 0.
template <Field F>
MultiPoly<F> line_form(const ProjPoint<F>& p, const ProjPoint<F>& q) {
    std::vector<F> c{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) throw PreconditionError("line through coincident points");
    simplify_projective(std::span<F>(c));
    return MultiPoly<F>::linear(plane_xyz(), c);
}

template <Field F>
struct QuarticSystem {
    std::size_t rank = 0;               ///< rank of the 12 x 15 interpolation matrix
    std::size_t dim = 0;                ///< dimension of the space of quartics through the points
    std::vector<MultiPoly<F>> lines;    ///< the three auxiliary lines l1, l2, l3
    std::vector<MultiPoly<F>> basis;    ///< C3*l1, C3*l2, C3*l3, r1*r2*r3*r4
    bool basis_spans = false;           ///< basis lies in the kernel and is independent
};

/// The four lines r1..r4 of the product quartic.
inline const std::array<Triple, 4>& product_quartic_triples() {
    static const std::array<Triple, 4> t{{{0, 1, 2}, {3, 6, 10}, {4, 7, 11}, {5, 8, 9}}};
    return t;
}

template <Field F>
QuarticSystem<F> quartic_system(const Configuration<F>& c) {
    if (is_degenerate(c.a, c.flavor)) throw DegenerateParameter("degenerate parameter a = " + c.a.to_string());
    const auto m = interpolation_matrix(c.points, 4);
    const auto k = kernel(m);
    QuarticSystem<F> out;
    out.rank = k.rank;
    out.dim = k.basis.size();
    if (out.rank != 11) {
        throw DegenerateParameter("quartic interpolation matrix has rank " + std::to_string(out.rank) + ", expected 11");
    }
    const auto cubic = cubic_through_points(c);

    // Three independent lines avoiding all twelve points, in a fixed order.
    static const std::vector<std::array<long, 3>> candidates{
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 3}, {3, 1, 2}, {2, 3, 1}, {1, 3, 7}, {5, 2, 11}, {7, 11, 2}};
    Matrix<F> chosen(0, 3);
    std::vector<std::array<long, 3>> picked;
    for (const auto& cand : candidates) {
        if (picked.size() == 3) break;
        bool hits = false;
        for (const auto& p : c.points) {
            F s = F(cand[0]) * p[0] + F(cand[1]) * p[1] + F(cand[2]) * p[2];
            hits = hits || s.is_zero();
        }
        if (hits) continue;
        Matrix<F> trial(picked.size() + 1, 3);
        for (std::size_t i = 0; i < picked.size(); ++i)
            for (std::size_t j = 0; j < 3; ++j) trial(i, j) = F(picked[i][j]);
        for (std::size_t j = 0; j < 3; ++j) trial(picked.size(), j) = F(cand[j]);
        if (rank(trial) == picked.size() + 1) picked.push_back(cand);
    }
    if (picked.size() != 3) throw DegenerateParameter("no three generic lines avoid the configuration");
    for (const auto& l : picked) {
        auto line = MultiPoly<F>::linear(plane_xyz(), {F(l[0]), F(l[1]), F(l[2])});
        out.basis.push_back(cubic * line);
        out.lines.push_back(std::move(line));
    }
    MultiPoly<F> product(plane_xyz(), F(1L));
    for (const auto& t : product_quartic_triples()) product = product * line_form(c[t[0]], c[t[1]]);
    out.basis.push_back(product);

    bool in_kernel = true;
    Matrix<F> coeffs(out.basis.size(), 15);
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
        const auto v = out.basis[i].coeff_vector(4, plane_xyz());
        for (const auto& e : m * v) in_kernel = in_kernel && e.is_zero();
        for (std::size_t j = 0; j < 15; ++j) coeffs(i, j) = v[j];
    }
    out.basis_spans = in_kernel && rank(coeffs) == out.dim && out.dim == out.basis.size();
    return out;
}

/// Symbolic derivation of the degenerate parameter values of a flavor: the
/// square-free polynomial whose roots make two points coincide, and the one
/// whose roots (other than coincidence roots) make an unlisted triple
/// collinear or a listed triple non-collinear.
struct DegeneracyLocus {
    UniPoly<Rational> coincide;
    UniPoly<Rational> collinear;
};

namespace detail {
/// Monic gcd of the numerators of a list of Q(a) scalars; zero when all
/// vanish identically.
inline UniPoly<Rational> common_root_poly(const std::vector<QA>& xs) {
    UniPoly<Rational> g;
    for (const auto& x : xs) g = gcd(g, x.numerator());
    return g;
}
}  // namespace detail

inline DegeneracyLocus degeneracy_locus(Flavor flavor) {
    const auto pts = raw_points(QA::generator(), flavor);
    UniPoly<Rational> coincide(Rational(1));
    for (std::size_t i = 0; i < kNumPoints; ++i)
        for (std::size_t j = i + 1; j < kNumPoints; ++j) {
            std::vector<QA> minors;
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t q = p + 1; q < 4; ++q) minors.push_back(pts[i][p] * pts[j][q] - pts[i][q] * pts[j][p]);
            const auto g = detail::common_root_poly(minors);
            if (g.is_zero()) throw DegenerateParameter("points coincide identically in a");
            coincide = lcm(coincide, squarefree_part(g));
        }
    UniPoly<Rational> collinear(Rational(1));
    for (int i = 0; i < kNumPoints; ++i)
        for (int j = i + 1; j < kNumPoints; ++j)
            for (int k = j + 1; k < kNumPoints; ++k) {
                if (is_listed_triple({i, j, k})) continue;
                const auto& a = pts[static_cast<std::size_t>(i)].coords();
                const auto& b = pts[static_cast<std::size_t>(j)].coords();
                const auto& c = pts[static_cast<std::size_t>(k)].coords();
                const auto g = detail::common_root_poly({detail::det3(a, b, c, 0, 1, 2), detail::det3(a, b, c, 0, 1, 3),
                                                         detail::det3(a, b, c, 0, 2, 3), detail::det3(a, b, c, 1, 2, 3)});
                if (g.is_zero()) throw DegenerateParameter("unlisted triple is collinear identically in a");
                collinear = lcm(collinear, squarefree_part(g));
            }
    auto shared = gcd(collinear, coincide);
    remove_factor(collinear, shared);
    return {coincide.monic(), collinear.monic()};
}

/// Where the quartic interpolation conditions drop rank, over Q(a). The
/// six rows of P0..P5 are constant; eliminating them leaves a 6 x 9 block
/// whose rank is 5 generically. `locus` is the square-free monic gcd of
/// all its 5 x 5 minors: the full matrix has rank < 11 exactly at its roots.
struct QuarticMinorLocus {
    std::size_t reduced_rank = 0;     ///< rank of the 6 x 9 block over Q(a)
    bool maximal_minors_vanish = false;
    UniPoly<Rational> gcd;             ///< monic gcd of the 5 x 5 minors
    UniPoly<Rational> locus;           ///< its square-free part
};

inline QuarticMinorLocus quartic_minor_locus(const Configuration<QA>& c) {
    const auto m = interpolation_matrix(c.points, 4);
    // Reduced row echelon form of the constant block.
    Matrix<QA> top(6, 15);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 15; ++j) {
            if (!m(i, j).is_constant()) throw PreconditionError("rows of P0..P5 are expected to be constant");
            top(i, j) = m(i, j);
        }
    auto ech = echelon(top);
    if (ech.rank() != 6) throw DegenerateParameter("constant block does not have rank 6");
    auto& u = ech.reduced;
    for (std::size_t k = 6; k-- > 0;) {
        const QA piv = u(k, ech.pivots[k]);
        for (std::size_t j = 0; j < 15; ++j) u(k, j) = u(k, j) / piv;
        for (std::size_t i = 0; i < k; ++i) {
            const QA f = u(i, ech.pivots[k]);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < 15; ++j) u(i, j) = u(i, j) - f * u(k, j);
        }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < 15; ++j)
        if (std::find(ech.pivots.begin(), ech.pivots.end(), j) == ech.pivots.end()) free_cols.push_back(j);
    Matrix<QA> reduced(6, free_cols.size());
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<QA> row = m.row(i + 6);
        for (std::size_t k = 0; k < 6; ++k) {
            const QA f = row[ech.pivots[k]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < 15; ++j) row[j] = row[j] - f * u(k, j);
        }
        for (std::size_t j = 0; j < free_cols.size(); ++j) reduced(i, j) = row[free_cols[j]];
    }

    QuarticMinorLocus out;
    out.reduced_rank = rank(reduced);
    out.maximal_minors_vanish = out.reduced_rank < 6;
    UniPoly<Rational> g;
    std::vector<std::size_t> rs(5), cs(5);
    // rows: drop one of six; columns: 5-subsets of the 9 free columns
    for (std::size_t drop = 0; drop < 6; ++drop) {
        for (std::size_t i = 0, k = 0; i < 6; ++i)
            if (i != drop) rs[k++] = i;
        std::vector<bool> pick(free_cols.size(), false);
        std::fill(pick.begin(), pick.begin() + 5, true);
        do {
            for (std::size_t j = 0, k = 0; j < pick.size(); ++j)
                if (pick[j]) cs[k++] = j;
            const QA d = determinant(reduced.submatrix(rs, cs));
            g = gcd(g, d.numerator());
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    out.gcd = g;
    out.locus = squarefree_part(g);
    return out;
}

}  // namespace quartic

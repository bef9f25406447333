#pragma once

/// @file monoid.hpp
/// Quartic monoid surfaces t*F3 + F4 with a triple point at the origin:
/// the families Q(a, b) and Q(a), Rohn's surface, the 31 lines and the
/// smoothness certificate.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/matrix.hpp"
#include "quartic/algebra/mpoly.hpp"
#include "quartic/algebra/parse.hpp"
#include "quartic/algebra/ratfun.hpp"
#include "quartic/algebra/unipoly.hpp"
#include "quartic/configuration.hpp"
#include "quartic/projective.hpp"

namespace quartic {

enum class SurfaceFlavor { Qab, Qa, Rohn, Transformed };

inline std::string to_string(SurfaceFlavor f) {
    switch (f) {
        case SurfaceFlavor::Qab: return "qab";
        case SurfaceFlavor::Qa: return "qa";
        case SurfaceFlavor::Rohn: return "rohn";
        case SurfaceFlavor::Transformed: return "transformed";
    }
    return "?";
}

template <Field F>
struct MonoidSurface {
    SurfaceFlavor flavor;
    MultiPoly<F> poly;  ///< in (x, y, z, t)
    std::optional<F> a;
    std::optional<F> b;
    std::optional<Configuration<F>> config;  ///< Qab: Original points, Qa: Normalized points
};

/// Q(a) of the family through the base sextuple.
inline constexpr const char* kQaText =
    "2*a*x^3*y + 4*a*x^2*y^2 + 2*a*x*y^3 - (2*a-1)*(a-2)*x^3*z"
    " - (5*a^2-17*a+5)*x^2*y*z - 3*(a^2-4*a+1)*x*y^2*z + a*y^3*z"
    " - 3*(2*a-1)*(a-2)*x^2*z^2 - (7*a^2-19*a+7)*x*y*z^2 + 2*a*y^2*z^2"
    " - 2*(2*a-1)*(a-2)*x*z^3 + a*y*z^3 - 2*a*t*x^2*y - 2*a*t*x*y^2 + 2*(2*a-1)*(a-2)*t*x^2*z"
    " + 4*(a^2-3*a+1)*t*x*y*z - 2*a*t*y^2*z + 2*(2*a-1)*(a-2)*t*x*z^2 - 2*a*t*y*z^2";

/// Q(a) at a root of a^2 - a + 1, with rational coefficients.
inline constexpr const char* kQPrimeText =
    "x^3*y + 2*x^2*y^2 + x*y^3 + 3/2*x^3*z + 6*x^2*y*z + 9/2*x*y^2*z + 1/2*y^3*z + 9/2*x^2*z^2"
    " + 6*x*y*z^2 + y^2*z^2 + 3*x*z^3 + 1/2*y*z^3 - x^2*y*t - x*y^2*t - 3*x^2*z*t - 4*x*y*z*t"
    " - y^2*z*t - 3*x*z^2*t - y*z^2*t";

inline constexpr const char* kRohnText = "t*((x+y+z)^3+x*y*z)+(x+y+z)*(x-y)*(y-z)*(z-x)";

namespace detail {
template <Field F>
void check_triple_point(const MultiPoly<F>& q) {
    if (q.is_zero() || !q.is_homogeneous() || q.degree() != 4) throw PreconditionError("not a quartic form");
    if (q.min_degree_in({0, 1, 2}) < 3) throw PreconditionError("origin is not a triple point");
}
}  // namespace detail

/// Q(a, b) = t F3(a) + b F4(a) on the Original points.
template <Field F>
MonoidSurface<F> build_qab(const F& a, const F& b) {
    if (b.is_zero()) throw DegenerateParameter("degenerate parameter b = 0");
    auto config = build_points(a, Flavor::Original);
    const auto t = MultiPoly<F>::variable(space_vars(), "t");
    auto q = t * printed_cubic(a).in_ring(space_vars()) + printed_quartic(a).in_ring(space_vars()) * b;
    return {SurfaceFlavor::Qab, std::move(q), a, b, std::move(config)};
}

template <Field F>
MonoidSurface<F> build_qa(const F& a) {
    auto config = build_points(a, Flavor::Normalized);
    auto q = parse_poly<F>(kQaText, space_vars(), {{"a", a}});
    return {SurfaceFlavor::Qa, std::move(q), a, std::nullopt, std::move(config)};
}

template <Field F>
MonoidSurface<F> build_rohn() {
    return {SurfaceFlavor::Rohn, parse_poly<F>(kRohnText, space_vars()), std::nullopt, std::nullopt, std::nullopt};
}

template <Field F>
MultiPoly<F> q_prime() {
    return parse_poly<F>(kQPrimeText, space_vars());
}

/// Image M . S of a surface; the configuration is dropped since the image
/// is no longer in monoid-normal position.
template <Field F>
MonoidSurface<F> transform_surface(const Projectivity<F>& m, const MonoidSurface<F>& s) {
    return {SurfaceFlavor::Transformed, m.apply_form(s.poly), s.a, s.b, std::nullopt};
}

template <Field F>
MonoidSurface<F> build_surface(SurfaceFlavor flavor, const std::optional<F>& a, const std::optional<F>& b) {
    switch (flavor) {
        case SurfaceFlavor::Qab:
            if (!a || !b) throw PreconditionError("Q(a, b) needs both parameters");
            return build_qab(*a, *b);
        case SurfaceFlavor::Qa:
            if (!a) throw PreconditionError("Q(a) needs the parameter a");
            return build_qa(*a);
        case SurfaceFlavor::Rohn: return build_rohn<F>();
        case SurfaceFlavor::Transformed: break;
    }
    throw PreconditionError("transformed surfaces come from transform_surface");
}

template <Field F>
bool line_on_surface(const MultiPoly<F>& q, const ProjLine<F>& l) {
    const std::array<ProjPoint<F>, 2> span{l.first(), l.second()};
    return restrict_to_span(q, std::span<const ProjPoint<F>>(span), {"u", "v"}).is_zero();
}

template <Field F>
bool line_on_surface(const MonoidSurface<F>& s, const ProjLine<F>& l) {
    return line_on_surface(s.poly, l);
}

template <Field F>
struct SurfaceLine {
    ProjLine<F> line;
    int origin_index = -1;        ///< i for the line O + Pi
    std::optional<Triple> triple;  ///< sorted triple for a residual line

    bool through_origin() const { return origin_index >= 0; }
    std::string provenance() const {
        if (through_origin()) return "O+P" + std::to_string(origin_index);
        const auto& t = *triple;
        return "residual(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    }
};

namespace detail {
template <Field F>
const Configuration<F>& require_config(const MonoidSurface<F>& s) {
    if (!s.config) throw PreconditionError("surface has no point configuration");
    return *s.config;
}
}  // namespace detail

template <Field F>
SurfaceLine<F> origin_line(const MonoidSurface<F>& s, int i) {
    const auto& c = detail::require_config(s);
    SurfaceLine<F> l{ProjLine<F>(ProjPoint<F>::origin(), c[i]), i, std::nullopt};
    if (!line_on_surface(s, l.line)) throw DegenerateParameter("line O+P" + std::to_string(i) + " is not on the surface");
    return l;
}

template <Field F>
std::vector<SurfaceLine<F>> origin_lines(const MonoidSurface<F>& s) {
    std::vector<SurfaceLine<F>> out;
    for (int i = 0; i < kNumPoints; ++i) out.push_back(origin_line(s, i));
    return out;
}

/// The fourth line cut on the surface by the plane O + Pi + Pj, for a
/// listed triple (i, j, k).
template <Field F>
SurfaceLine<F> residual_line(const MonoidSurface<F>& s, Triple triple) {
    if (!is_listed_triple(triple)) throw PreconditionError("residual lines exist only for listed triples");
    triple = sorted(triple);
    const auto& c = detail::require_config(s);
    const auto& pi = c[triple[0]];
    const auto& pj = c[triple[1]];
    const auto& pk = c[triple[2]];

    // pk ~ alpha pi + beta pj
    Matrix<F> rel(4, 3);
    for (std::size_t r = 0; r < 4; ++r) {
        rel(r, 0) = pi[r];
        rel(r, 1) = pj[r];
        rel(r, 2) = pk[r];
    }
    const auto k = kernel(rel);
    if (k.basis.size() != 1 || k.basis[0][2].is_zero()) throw DegenerateParameter("triple is not collinear");
    const F alpha = k.basis[0][0];
    const F beta = k.basis[0][1];

    const std::array<ProjPoint<F>, 3> basis{ProjPoint<F>::origin(), pi, pj};
    const auto& uvw = plane_vars();
    const auto restricted = restrict_to_span(s.poly, std::span<const ProjPoint<F>>(basis), uvw);
    const auto v = MultiPoly<F>::variable(uvw, "v");
    const auto w = MultiPoly<F>::variable(uvw, "w");
    const auto known = v * w * MultiPoly<F>::linear(uvw, {F(0L), beta, -alpha});
    MultiPoly<F> rest;
    try {
        rest = exact_divide(restricted, known);
    } catch (const NotDivisible&) {
        throw DegenerateParameter("plane section does not contain the three origin lines");
    }
    if (rest.degree() != 1) throw DegenerateParameter("plane section has no residual line");
    const auto lin = rest.coeff_vector(1, uvw);
    if (lin[0].is_zero()) throw DegenerateParameter("residual line passes through the origin");

    const auto zeros = kernel(Matrix<F>::from_rows({lin}));
    std::vector<ProjPoint<F>> pts;
    for (const auto& z : zeros.basis) {
        std::vector<F> p(4, F(0L));
        for (std::size_t m = 0; m < 3; ++m)
            for (std::size_t r = 0; r < 4; ++r) p[r] = p[r] + z[m] * basis[m][r];
        pts.push_back(ProjPoint<F>::from_vector(p));
    }
    return {ProjLine<F>(pts[0], pts[1]), -1, triple};
}

/// The 12 origin lines (by index) followed by the 19 residual lines (by
/// sorted triple).
template <Field F>
std::vector<SurfaceLine<F>> all_lines(const MonoidSurface<F>& s) {
    auto out = origin_lines(s);
    for (const auto& t : triple_list()) out.push_back(residual_line(s, t));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!line_on_surface(s, out[i].line)) throw DegenerateParameter(out[i].provenance() + " is not on the surface");
        for (std::size_t j = 0; j < i; ++j)
            if (out[i].line == out[j].line) {
                throw DegenerateParameter(out[i].provenance() + " coincides with " + out[j].provenance());
            }
    }
    return out;
}

/// Symmetric 0/1 matrix of intersecting pairs (diagonal 0).
template <Field F>
std::vector<std::vector<int>> incidence_matrix(const std::vector<SurfaceLine<F>>& lines) {
    std::vector<std::vector<int>> m(lines.size(), std::vector<int>(lines.size(), 0));
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            m[i][j] = m[j][i] = lines[i].line.meets(lines[j].line) ? 1 : 0;
    return m;
}

// Smoothness ---------------------------------------------------------------

template <Field F>
struct LineSmoothness {
    int index = 0;
    std::vector<UniPoly<F>> gradient;  ///< the four partials along O + lambda Pi
    UniPoly<F> gcd;
    bool lambda_squared = false;
};

template <Field F>
struct SmoothnessReport {
    std::vector<LineSmoothness<F>> lines;
    bool certified = false;  ///< every per-line gcd is lambda^2
};

namespace detail {
template <Field F>
UniPoly<F> to_unipoly(const MultiPoly<F>& p) {
    std::vector<F> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, F(0L));
    for (const auto& [e, v] : p.terms()) c[e[0]] = v;
    return UniPoly<F>(std::move(c));
}
}  // namespace detail

/// Gradient of Q along T = O + lambda Pi for each of the 12 origin lines.
/// A singular point other than O would be a common root lambda != 0.
template <Field F>
SmoothnessReport<F> smoothness_certificate(const MonoidSurface<F>& s) {
    const auto& c = detail::require_config(s);
    const std::vector<std::string> lam{"l"};
    const auto grad = gradient(s.poly, space_vars());
    const auto l = MultiPoly<F>::variable(lam, 0);
    const UniPoly<F> lambda2 = UniPoly<F>::monomial(F(1L), 2);
    SmoothnessReport<F> out;
    out.certified = true;
    for (int i = 0; i < kNumPoints; ++i) {
        std::map<std::string, MultiPoly<F>> bind;
        for (std::size_t r = 0; r < 3; ++r) bind[space_vars()[r]] = l * c[i][r];
        bind["t"] = MultiPoly<F>(lam, F(1L));
        LineSmoothness<F> ls;
        ls.index = i;
        for (const auto& g : grad) {
            ls.gradient.push_back(detail::to_unipoly(substitute(g, bind, lam)));
            ls.gcd = gcd(ls.gcd, ls.gradient.back());
        }
        ls.lambda_squared = ls.gcd == lambda2;
        out.certified = out.certified && ls.lambda_squared;
        out.lines.push_back(std::move(ls));
    }
    return out;
}

/// Resultant via the Sylvester determinant.
template <Field K>
K resultant(const UniPoly<K>& p, const UniPoly<K>& q) {
    if (p.is_zero() || q.is_zero()) return K(0L);
    const auto m = static_cast<std::size_t>(p.degree());
    const auto n = static_cast<std::size_t>(q.degree());
    if (m + n == 0) return K(1L);
    Matrix<K> s(m + n, m + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = p.coeff(m - i);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = q.coeff(n - i);
    return determinant(s);
}

/// Parameter values of Q(a, 1) where some origin line might carry a
/// singular point besides O. Q(a, b) and Q(a, 1) differ by t -> t/b.
struct SingularLocus {
    UniPoly<Rational> locus;                   ///< square-free, monic
    std::vector<std::string> known_factors;    ///< linear factors of the locus among the candidates
    UniPoly<Rational> unexplained;             ///< locus with the candidates removed
};

inline const std::vector<std::pair<std::string, Rational>>& singular_candidates() {
    // roots of a(a-1)(a+1)(a+2)(a+1/2) and the rest of D
    static const std::vector<std::pair<std::string, Rational>> c{
        {"a", Rational(0)},       {"a-1", Rational(1)},      {"a+1", Rational(-1)}, {"a+2", Rational(-2)},
        {"a+1/2", Rational(-1, 2)}, {"a-2", Rational(2)}, {"a-1/2", Rational(1, 2)}};
    return c;
}

inline SingularLocus singular_parameter_locus() {
    const QA a = QA::generator();
    const auto t = MultiPoly<QA>::variable(space_vars(), "t");
    const auto q = t * printed_cubic(a).in_ring(space_vars()) + printed_quartic(a).in_ring(space_vars());
    const auto pts = raw_points(a, Flavor::Original);
    MonoidSurface<QA> s{SurfaceFlavor::Qab, q, a, QA(1L), Configuration<QA>{a, Flavor::Original, pts}};
    const auto report = smoothness_certificate(s);

    UniPoly<Rational> locus(Rational(1));
    for (const auto& line : report.lines) {
        std::vector<UniPoly<QA>> cof;
        for (const auto& g : line.gradient)
            if (!g.is_zero()) cof.push_back(g.shift_down(2));
        UniPoly<Rational> g;
        for (std::size_t i = 0; i < cof.size(); ++i)
            for (std::size_t j = i + 1; j < cof.size(); ++j) g = gcd(g, resultant(cof[i], cof[j]).numerator());
        if (cof.size() == 1) g = cof[0].is_constant() ? cof[0].coeff(0).numerator() : UniPoly<Rational>();
        if (g.is_zero()) throw DegenerateParameter("gradient cofactors share a root for every a");
        locus = lcm(locus, squarefree_part(g));
    }
    SingularLocus out{locus.monic(), {}, locus.monic()};
    for (const auto& [name, root] : singular_candidates()) {
        const UniPoly<Rational> f(std::vector<Rational>{-root, Rational(1)});
        if (remove_factor(out.unexplained, f) > 0) out.known_factors.push_back(name);
    }
    out.unexplained = out.unexplained.monic();
    return out;
}

}  // namespace quartic

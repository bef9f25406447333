#pragma once

/// @file projective.hpp
/// Exact projective geometry in P^3 over a Field: points, lines (span plus
/// Pluecker coordinates), planes, restriction of forms to linear subspaces
/// and projectivities acting on points and on forms.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/field.hpp"
#include "quartic/algebra/matrix.hpp"
#include "quartic/algebra/mpoly.hpp"
#include "quartic/algebra/scale.hpp"

namespace quartic {

inline const std::vector<std::string>& space_vars() {
    static const std::vector<std::string> v{"x", "y", "z", "t"};
    return v;
}

template <Field F>
class ProjPoint {
public:
    using Coords = std::array<F, 4>;

    ProjPoint(const F& x, const F& y, const F& z, const F& t) : ProjPoint(Coords{x, y, z, t}) {}
    explicit ProjPoint(Coords c) : c_(std::move(c)) {
        bool all_zero = true;
        for (const auto& v : c_) all_zero = all_zero && v.is_zero();
        if (all_zero) throw PreconditionError("projective point with all coordinates zero");
        simplify_projective(std::span<F>(c_));
    }
    static ProjPoint from_vector(const std::vector<F>& v) {
        if (v.size() != 4) throw PreconditionError("projective point needs 4 coordinates");
        return ProjPoint(Coords{v[0], v[1], v[2], v[3]});
    }
    static ProjPoint origin() { return ProjPoint(F(0L), F(0L), F(0L), F(1L)); }

    const Coords& coords() const { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }

    /// Representative whose first nonzero coordinate is 1.
    Coords canonical() const {
        Coords c = c_;
        make_canonical(std::span<F>(c));
        return c;
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        for (const auto& v : canonical()) out.push_back(v.to_string());
        return out;
    }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
        return proportional(std::span<const F>(p.c_), std::span<const F>(q.c_));
    }

private:
    Coords c_;
};

namespace detail {
template <Field F>
F det3(const std::array<F, 4>& a, const std::array<F, 4>& b, const std::array<F, 4>& c, std::size_t i,
       std::size_t j, std::size_t k) {
    return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
           a[k] * (b[i] * c[j] - b[j] * c[i]);
}
}  // namespace detail

/// True iff the three points lie on a common line (every 3x3 minor of the
/// 3x4 coordinate matrix vanishes). Coincident points count as collinear.
template <Field F>
bool collinear(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r) {
    const auto& a = p.coords();
    const auto& b = q.coords();
    const auto& c = r.coords();
    return detail::det3(a, b, c, 0, 1, 2).is_zero() && detail::det3(a, b, c, 0, 1, 3).is_zero() &&
           detail::det3(a, b, c, 0, 2, 3).is_zero() && detail::det3(a, b, c, 1, 2, 3).is_zero();
}

/// True iff the four points lie in a common plane.
template <Field F>
bool coplanar(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r, const ProjPoint<F>& s) {
    Matrix<F> m(4, 4);
    const std::array<const ProjPoint<F>*, 4> pts{&p, &q, &r, &s};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = (*pts[i])[j];
    return determinant(m).is_zero();
}

/// Line spanned by two distinct points, with Pluecker coordinates
/// (p01, p02, p03, p12, p13, p23), pij = u_i v_j - u_j v_i.
template <Field F>
class ProjLine {
public:
    ProjLine(ProjPoint<F> u, ProjPoint<F> v) : u_(std::move(u)), v_(std::move(v)) {
        if (u_ == v_) throw PreconditionError("a line needs two distinct points");
        const auto& a = u_.coords();
        const auto& b = v_.coords();
        constexpr std::array<std::array<std::size_t, 2>, 6> idx{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
        for (std::size_t k = 0; k < 6; ++k) {
            const auto [i, j] = idx[k];
            p_[k] = a[i] * b[j] - a[j] * b[i];
        }
        simplify_projective(std::span<F>(p_));
    }

    const ProjPoint<F>& first() const { return u_; }
    const ProjPoint<F>& second() const { return v_; }
    const std::array<F, 6>& plucker() const { return p_; }

    /// p01 p23 - p02 p13 + p03 p12, zero for every genuine line.
    F plucker_relation() const { return p_[0] * p_[5] - p_[1] * p_[4] + p_[2] * p_[3]; }

    bool contains(const ProjPoint<F>& r) const { return collinear(u_, v_, r); }

    /// Zero iff the two lines are coplanar.
    friend F plucker_product(const ProjLine& l, const ProjLine& m) {
        const auto& p = l.p_;
        const auto& q = m.p_;
        return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0];
    }
    bool meets(const ProjLine& o) const { return plucker_product(*this, o).is_zero(); }

    friend bool operator==(const ProjLine& l, const ProjLine& m) {
        return proportional(std::span<const F>(l.p_), std::span<const F>(m.p_));
    }

private:
    ProjPoint<F> u_;
    ProjPoint<F> v_;
    std::array<F, 6> p_;
};

/// Common point of two distinct lines, or nullopt when they are skew.
template <Field F>
std::optional<ProjPoint<F>> line_intersect(const ProjLine<F>& l1, const ProjLine<F>& l2) {
    if (l1 == l2) throw PreconditionError("intersection of a line with itself");
    if (!l1.meets(l2)) return std::nullopt;
    Matrix<F> m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, 0) = l1.first()[i];
        m(i, 1) = l1.second()[i];
        m(i, 2) = l2.first()[i];
        m(i, 3) = l2.second()[i];
    }
    const auto k = kernel(m);
    if (k.basis.size() != 1) throw Error("coplanar distinct lines must meet in exactly one point");
    const auto& c = k.basis[0];
    std::array<F, 4> p;
    for (std::size_t i = 0; i < 4; ++i) p[i] = c[0] * l1.first()[i] + c[1] * l1.second()[i];
    return ProjPoint<F>(p);
}

template <Field F>
class ProjPlane {
public:
    explicit ProjPlane(std::array<F, 4> coefs) : c_(std::move(coefs)) {
        bool all_zero = true;
        for (const auto& v : c_) all_zero = all_zero && v.is_zero();
        if (all_zero) throw PreconditionError("degenerate plane: all coefficients zero");
        simplify_projective(std::span<F>(c_));
    }
    static ProjPlane through(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r) {
        Matrix<F> m(3, 4);
        const std::array<const ProjPoint<F>*, 3> pts{&p, &q, &r};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = (*pts[i])[j];
        const auto k = kernel(m);
        if (k.basis.size() != 1) throw GeneralPositionError("plane through collinear points");
        return ProjPlane({k.basis[0][0], k.basis[0][1], k.basis[0][2], k.basis[0][3]});
    }

    const std::array<F, 4>& coefs() const { return c_; }
    bool contains(const ProjPoint<F>& p) const {
        F s(0L);
        for (std::size_t i = 0; i < 4; ++i) s = s + c_[i] * p[i];
        return s.is_zero();
    }
    /// Three independent points spanning the plane.
    std::array<ProjPoint<F>, 3> basis() const {
        Matrix<F> m(1, 4);
        for (std::size_t j = 0; j < 4; ++j) m(0, j) = c_[j];
        const auto k = kernel(m);
        return {ProjPoint<F>::from_vector(k.basis[0]), ProjPoint<F>::from_vector(k.basis[1]),
                ProjPoint<F>::from_vector(k.basis[2])};
    }

    friend bool operator==(const ProjPlane& a, const ProjPlane& b) {
        return proportional(std::span<const F>(a.c_), std::span<const F>(b.c_));
    }

private:
    std::array<F, 4> c_;
};

/// f restricted to the span of `basis`: the form f(sum_k s_k * basis_k) in
/// the variables `params` (one per basis point).
template <Field F>
MultiPoly<F> restrict_to_span(const MultiPoly<F>& f, std::span<const ProjPoint<F>> basis,
                              const std::vector<std::string>& params) {
    if (params.size() != basis.size()) throw PreconditionError("one parameter per basis point required");
    std::map<std::string, MultiPoly<F>> bind;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<F> c;
        for (const auto& b : basis) c.push_back(b[i]);
        bind[space_vars()[i]] = MultiPoly<F>::linear(params, c);
    }
    return substitute(f.in_ring(space_vars()), bind, params);
}

template <Field F>
struct PlaneRestriction {
    MultiPoly<F> form;                    ///< in (u, v, w)
    std::array<ProjPoint<F>, 3> basis;    ///< point (u, v, w) <-> u*b0 + v*b1 + w*b2
};

inline const std::vector<std::string>& plane_vars() {
    static const std::vector<std::string> v{"u", "v", "w"};
    return v;
}

template <Field F>
PlaneRestriction<F> plane_restrict(const MultiPoly<F>& f, const ProjPlane<F>& plane) {
    if (!f.is_homogeneous()) throw PreconditionError("plane restriction needs a homogeneous form");
    auto basis = plane.basis();
    auto form = restrict_to_span(f, std::span<const ProjPoint<F>>(basis), plane_vars());
    return {std::move(form), std::move(basis)};
}

/// Element of PGL(4): an invertible 4x4 matrix up to a nonzero scalar.
template <Field F>
class Projectivity {
public:
    explicit Projectivity(Matrix<F> m) : m_(std::move(m)) {
        if (m_.rows() != 4 || m_.cols() != 4) throw PreconditionError("projectivity needs a 4x4 matrix");
        if (determinant(m_).is_zero()) throw PreconditionError("singular matrix is not a projectivity");
        auto data = m_.data();
        simplify_projective(std::span<F>(data));
        for (std::size_t i = 0; i < 16; ++i) m_(i / 4, i % 4) = data[i];
    }
    static Projectivity identity() { return Projectivity(Matrix<F>::identity(4)); }

    const Matrix<F>& matrix() const { return m_; }

    /// Entries scaled so the first nonzero one is 1.
    Matrix<F> canonical() const {
        auto data = m_.data();
        make_canonical(std::span<F>(data));
        Matrix<F> c(4, 4);
        for (std::size_t i = 0; i < 16; ++i) c(i / 4, i % 4) = data[i];
        return c;
    }
    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        const auto c = canonical();
        for (const auto& v : c.data()) out.push_back(v.to_string());
        return out;
    }

    ProjPoint<F> apply(const ProjPoint<F>& p) const {
        const auto v = m_ * std::vector<F>(p.coords().begin(), p.coords().end());
        return ProjPoint<F>::from_vector(v);
    }

    /// M . f = f(M^{-1} (x, y, z, t)^T), with the adjugate standing in for
    /// the inverse.
    MultiPoly<F> apply_form(const MultiPoly<F>& f) const {
        if (!f.is_homogeneous()) throw PreconditionError("projectivities act on homogeneous forms");
        const Matrix<F> inv = adjugate(m_);
        std::map<std::string, MultiPoly<F>> bind;
        for (std::size_t i = 0; i < 4; ++i) bind[space_vars()[i]] = MultiPoly<F>::linear(space_vars(), inv.row(i));
        return substitute(f.in_ring(space_vars()), bind, space_vars());
    }

    Projectivity inverse() const { return Projectivity(adjugate(m_)); }

    friend Projectivity operator*(const Projectivity& a, const Projectivity& b) {
        return Projectivity(a.m_ * b.m_);
    }
    friend bool operator==(const Projectivity& a, const Projectivity& b) {
        return proportional(std::span<const F>(a.m_.data()), std::span<const F>(b.m_.data()));
    }

private:
    Matrix<F> m_;
};

/// Unique projectivity with M src[i] ~ dst[i] for two quintuples in general
/// position (no four coplanar). The first four points are scaled so the
/// fifth is their sum, on both sides.
template <Field F>
Projectivity<F> projectivity_from_five_points(std::span<const ProjPoint<F>> src,
                                              std::span<const ProjPoint<F>> dst) {
    if (src.size() != 5 || dst.size() != 5) throw PreconditionError("five source and five target points required");
    auto frame = [](std::span<const ProjPoint<F>> pts, const char* which) {
        Matrix<F> basis(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) basis(i, j) = pts[j][i];
        if (determinant(basis).is_zero()) {
            throw GeneralPositionError(std::string(which) + " points 0,1,2,3 are coplanar");
        }
        const auto lambda = solve(basis, std::vector<F>(pts[4].coords().begin(), pts[4].coords().end()));
        for (std::size_t j = 0; j < 4; ++j) {
            if (lambda[j].is_zero()) {
                std::string quad;
                for (std::size_t k = 0; k < 5; ++k) {
                    if (k == j) continue;
                    quad += (quad.empty() ? "" : ",") + std::to_string(k);
                }
                throw GeneralPositionError(std::string(which) + " points " + quad + " are coplanar");
            }
            for (std::size_t i = 0; i < 4; ++i) basis(i, j) = basis(i, j) * lambda[j];
        }
        return basis;
    };
    const Matrix<F> s = frame(src, "source");
    const Matrix<F> d = frame(dst, "target");
    return Projectivity<F>(d * adjugate(s));
}

}  // namespace quartic

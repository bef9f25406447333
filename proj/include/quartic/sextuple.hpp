#pragma once

/// @file sextuple.hpp
/// Convergent sextuples, the standard sextuples cut out on a monoid by an
/// admissible triplet, and the projectivity between two convergent
/// sextuples.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/matrix.hpp"
#include "quartic/configuration.hpp"
#include "quartic/monoid.hpp"
#include "quartic/projective.hpp"

namespace quartic {

template <Field F>
struct Sextuple {
    std::array<ProjPoint<F>, 6> e;
    std::optional<Triple> triple;  ///< ordered triplet for a standard sextuple

    const ProjPoint<F>& operator[](std::size_t i) const { return e[i]; }
};

template <Field F>
Sextuple<F> base_sextuple() {
    auto p = [](long x, long y, long z) { return ProjPoint<F>(F(x), F(y), F(z), F(1L)); };
    return {{p(1, 0, 0), p(2, 0, 0), p(0, 1, 0), p(0, 2, 0), p(0, 0, 1), p(0, 0, 2)}, std::nullopt};
}

template <Field F>
struct ConvergenceCheck {
    bool ok = false;
    std::string failure;             ///< first failed condition, empty when ok
    std::optional<ProjPoint<F>> apex;  ///< common point A of E0+E1, E2+E3, E4+E5
};

namespace detail {
/// Common point of three lines, or nullopt when they are not concurrent.
template <Field F>
std::optional<ProjPoint<F>> concurrent(const ProjLine<F>& l1, const ProjLine<F>& l2, const ProjLine<F>& l3) {
    if (l1 == l2) return std::nullopt;
    auto p = line_intersect(l1, l2);
    if (!p || !l3.contains(*p)) return std::nullopt;
    return p;
}
}  // namespace detail

template <Field F>
ConvergenceCheck<F> is_convergent(const std::array<ProjPoint<F>, 6>& e) {
    ConvergenceCheck<F> r;
    const auto o = ProjPoint<F>::origin();
    for (std::size_t i = 0; i < 6; ++i) {
        if (e[i] == o) {
            r.failure = "E" + std::to_string(i) + " is the origin";
            return r;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (e[i] == e[j]) {
                r.failure = "E" + std::to_string(j) + " and E" + std::to_string(i) + " coincide";
                return r;
            }
    }
    auto apex = detail::concurrent(ProjLine<F>(e[0], e[1]), ProjLine<F>(e[2], e[3]), ProjLine<F>(e[4], e[5]));
    if (!apex) {
        r.failure = "lines E0+E1, E2+E3, E4+E5 are not concurrent";
        return r;
    }
    for (std::size_t i = 0; i < 6; ++i)
        if (e[i] == *apex) {
            r.failure = "common point coincides with E" + std::to_string(i);
            return r;
        }
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k)
                if (collinear(e[i], e[j], e[k])) {
                    r.failure = "E" + std::to_string(i) + ", E" + std::to_string(j) + ", E" + std::to_string(k) +
                                " are collinear";
                    return r;
                }
    Matrix<F> m(6, 4);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t c = 0; c < 4; ++c) m(i, c) = e[i][c];
    if (rank(m) < 4) {
        r.failure = "the six points are coplanar";
        return r;
    }
    r.ok = true;
    r.apex = std::move(apex);
    return r;
}

template <Field F>
ConvergenceCheck<F> is_convergent(const Sextuple<F>& s) {
    return is_convergent(s.e);
}

/// The 31 lines of a surface indexed for sextuple construction.
template <Field F>
class SurfaceLines {
public:
    explicit SurfaceLines(const MonoidSurface<F>& s) : lines_(all_lines(s)) {}

    const std::vector<SurfaceLine<F>>& all() const { return lines_; }
    const ProjLine<F>& origin(int i) const { return lines_[static_cast<std::size_t>(i)].line; }
    /// Residual line of the listed triple through labels p and q.
    const ProjLine<F>& residual(int p, int q) const {
        const auto t = triple_through(p, q);
        if (!t) throw PreconditionError("no listed triple through " + std::to_string(p) + "," + std::to_string(q));
        const auto& tl = triple_list();
        const auto pos = static_cast<std::size_t>(std::find(tl.begin(), tl.end(), *t) - tl.begin());
        return lines_[kNumPoints + pos].line;
    }

private:
    std::vector<SurfaceLine<F>> lines_;
};

namespace detail {
inline bool is_admissible(const Triple& t) {
    static const auto adm = admissible_triplets();
    return std::find(adm.begin(), adm.end(), t) != adm.end();
}
}  // namespace detail

/// E0 = (O+Pi) n l_ij, E1 = (O+Pi) n l_ik, E2 = (O+Pj) n l_ij,
/// E3 = (O+Pj) n l_jk, E4 = (O+Pk) n l_ik, E5 = (O+Pk) n l_jk.
template <Field F>
Sextuple<F> standard_sextuple(const SurfaceLines<F>& lines, Triple ijk) {
    if (!detail::is_admissible(ijk)) {
        throw PreconditionError("triple " + std::to_string(ijk[0]) + "," + std::to_string(ijk[1]) + "," +
                                std::to_string(ijk[2]) + " is not admissible");
    }
    const auto [i, j, k] = ijk;
    const auto& lij = lines.residual(i, j);
    const auto& lik = lines.residual(i, k);
    const auto& ljk = lines.residual(j, k);
    auto meet = [&](int p, const ProjLine<F>& l) {
        auto x = line_intersect(lines.origin(p), l);
        if (!x) throw DegenerateParameter("residual line misses the origin line O+P" + std::to_string(p));
        return *x;
    };
    Sextuple<F> out{{meet(i, lij), meet(i, lik), meet(j, lij), meet(j, ljk), meet(k, lik), meet(k, ljk)}, ijk};
    const auto check = is_convergent(out);
    if (!check.ok) throw DegenerateParameter("standard sextuple is not convergent: " + check.failure);
    if (!(*check.apex == ProjPoint<F>::origin())) throw DegenerateParameter("standard sextuple does not converge at O");
    return out;
}

template <Field F>
Sextuple<F> standard_sextuple(const MonoidSurface<F>& s, Triple ijk) {
    if (!detail::is_admissible(ijk)) {
        throw PreconditionError("triple " + std::to_string(ijk[0]) + "," + std::to_string(ijk[1]) + "," +
                                std::to_string(ijk[2]) + " is not admissible");
    }
    return standard_sextuple(SurfaceLines<F>(s), ijk);
}

/// All 720 standard sextuples, in the order of admissible_triplets().
template <Field F>
std::vector<Sextuple<F>> standard_sextuples(const MonoidSurface<F>& s) {
    const SurfaceLines<F> lines(s);
    std::vector<Sextuple<F>> out;
    for (const auto& t : admissible_triplets()) out.push_back(standard_sextuple(lines, t));
    return out;
}

template <Field F>
struct AuxFrame {
    ProjPoint<F> a;   ///< common point of E0+E1, E2+E3, E4+E5
    ProjPoint<F> r1;  ///< (E0+E3) n (E1+E2)
    ProjPoint<F> r2;  ///< (E0+E5) n (E1+E4)
    ProjPoint<F> r3;  ///< (E2+E5) n (E3+E4)
    ProjPoint<F> a1;  ///< common point of R1+E4, R2+E2, R3+E0
    ProjPoint<F> a2;  ///< common point of R1+E5, R2+E3, R3+E1
};

template <Field F>
AuxFrame<F> aux_frame(const Sextuple<F>& s) {
    const auto check = is_convergent(s);
    if (!check.ok) throw PreconditionError("sextuple is not convergent: " + check.failure);
    const auto& e = s.e;
    auto meet = [](const ProjLine<F>& l, const ProjLine<F>& m, const char* name) {
        auto p = line_intersect(l, m);
        if (!p) throw GeneralPositionError(std::string("lines defining ") + name + " are skew");
        return *p;
    };
    using L = ProjLine<F>;
    const auto r1 = meet(L(e[0], e[3]), L(e[1], e[2]), "R1");
    const auto r2 = meet(L(e[0], e[5]), L(e[1], e[4]), "R2");
    const auto r3 = meet(L(e[2], e[5]), L(e[3], e[4]), "R3");
    auto a1 = detail::concurrent(L(r1, e[4]), L(r2, e[2]), L(r3, e[0]));
    if (!a1) throw GeneralPositionError("lines R1+E4, R2+E2, R3+E0 are not concurrent");
    auto a2 = detail::concurrent(L(r1, e[5]), L(r2, e[3]), L(r3, e[1]));
    if (!a2) throw GeneralPositionError("lines R1+E5, R2+E3, R3+E1 are not concurrent");
    return {*check.apex, r1, r2, r3, *a1, *a2};
}

enum class FrameChoice { A1, A2 };

/// The projectivity sending src[i] to dst[i] for i = 0..5, built from the
/// frames (A, E0, E2, E4, A1) and checked on E1, E3, E5. With
/// FrameChoice::A2 the fifth frame point is A2 instead.
template <Field F>
Projectivity<F> sextuple_projectivity(const Sextuple<F>& src, const Sextuple<F>& dst,
                                      FrameChoice choice = FrameChoice::A1) {
    const auto fs = aux_frame(src);
    const auto fd = aux_frame(dst);
    const bool use_a1 = choice == FrameChoice::A1;
    const std::array<ProjPoint<F>, 5> from{fs.a, src[0], src[2], src[4], use_a1 ? fs.a1 : fs.a2};
    const std::array<ProjPoint<F>, 5> to{fd.a, dst[0], dst[2], dst[4], use_a1 ? fd.a1 : fd.a2};
    auto m = projectivity_from_five_points(std::span<const ProjPoint<F>>(from), std::span<const ProjPoint<F>>(to));
    for (std::size_t i = 0; i < 6; ++i) {
        if (!(m.apply(src[i]) == dst[i])) {
            throw Error("projectivity does not send E" + std::to_string(i) + " to F" + std::to_string(i));
        }
    }
    return m;
}

/// A, A1, A2 are collinear.
template <Field F>
bool aux_collinearity_check(const Sextuple<F>& s) {
    const auto f = aux_frame(s);
    return collinear(f.a, f.a1, f.a2);
}

}  // namespace quartic

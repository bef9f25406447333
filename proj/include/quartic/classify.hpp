#pragma once

/// @file classify.hpp
/// Stabilizers of Q(a) in PGL(4), projective equivalence of members of the
/// family, the j-invariant and identification of small matrix groups.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/ratfun.hpp"
#include "quartic/algebra/scale.hpp"
#include "quartic/configuration.hpp"
#include "quartic/monoid.hpp"
#include "quartic/parallel.hpp"
#include "quartic/sextuple.hpp"

namespace quartic {

// Coincidence of surfaces ---------------------------------------------------

/// Where two forms over Q(a) define the same surface.
struct CoincidenceCondition {
    enum class Kind { Always, Never, OnLocus };
    Kind kind = Kind::Never;
    UniPoly<Rational> locus;  ///< monic, square-free, nonconstant when OnLocus

    std::string to_string() const {
        switch (kind) {
            case Kind::Always: return "always";
            case Kind::Never: return "never";
            case Kind::OnLocus: return "on " + locus.to_string("a") + " = 0";
        }
        return "?";
    }
};

namespace detail {
template <Field F>
std::pair<std::vector<F>, std::vector<F>> coefficient_rows(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("coincidence test needs nonzero forms");
    return {f.coeff_vector(4, space_vars()), g.coeff_vector(4, space_vars())};
}
}  // namespace detail

/// Rank-one test on the 2 x 35 coefficient matrix W. Columns where both
/// entries vanish are dropped; a column with exactly one zero entry
/// decides the answer at once.
template <Field F>
bool surfaces_coincide(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    const auto [w1, w2] = detail::coefficient_rows(f, g);
    std::optional<std::size_t> pivot;
    for (std::size_t s = 0; s < w1.size(); ++s) {
        const bool z1 = w1[s].is_zero();
        const bool z2 = w2[s].is_zero();
        if (z1 && z2) continue;
        if (z1 != z2) return false;
        if (!pivot) {
            pivot = s;
            continue;
        }
        if (!(w1[s] * w2[*pivot] == w1[*pivot] * w2[s])) return false;
    }
    return true;
}

/// Removes from a polynomial in a every linear factor vanishing on D.
inline UniPoly<Rational> remove_degenerate_factors(UniPoly<Rational> p) {
    for (const auto& r : degeneracy_set()) remove_factor(p, UniPoly<Rational>(std::vector<Rational>{-r, Rational(1)}));
    return p;
}

/// Symbolic rank-one test: the parameter values a (outside D) where the
/// two forms over Q(a) define the same surface. The conditions are the
/// 2 x 2 minors of W together with every entry facing a zero in the other
/// row; their numerators' gcd is the locus.
inline CoincidenceCondition coincidence_condition(const MultiPoly<QA>& f, const MultiPoly<QA>& g) {
    auto [w1, w2] = detail::coefficient_rows(f, g);
    simplify_projective(std::span<QA>(w1));
    simplify_projective(std::span<QA>(w2));
    UniPoly<Rational> acc;
    auto add = [&](const QA& c) {
        acc = gcd(acc, c.numerator());
        return acc.is_constant() && !acc.is_zero();
    };
    std::vector<std::size_t> kept;
    CoincidenceCondition never;
    for (std::size_t s = 0; s < w1.size(); ++s) {
        const bool z1 = w1[s].is_zero();
        const bool z2 = w2[s].is_zero();
        if (z1 && z2) continue;
        if (z1 != z2) {
            if (add(z1 ? w2[s] : w1[s])) return never;
            continue;
        }
        kept.push_back(s);
    }
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            const auto r = kept[i];
            const auto s = kept[j];
            if (add(w1[r] * w2[s] - w1[s] * w2[r])) return never;
        }
    if (acc.is_zero()) return {CoincidenceCondition::Kind::Always, {}};
    auto locus = remove_degenerate_factors(squarefree_part(acc));
    if (locus.is_constant()) return never;
    return {CoincidenceCondition::Kind::OnLocus, locus.monic()};
}

// Groups --------------------------------------------------------------------

template <Field F>
struct GroupReport {
    std::vector<Projectivity<F>> elements;   ///< sorted by canonical serialization
    std::vector<std::vector<int>> table;     ///< table[i][j] = index of elements[i] * elements[j]
    std::map<int, int> order_profile;        ///< element order -> count
    std::vector<int> orders;                 ///< order of each element
    bool abelian = false;
    std::string label;
    std::size_t closure_added = 0;           ///< elements added by closing under products
};

namespace detail {
template <Field F>
std::string matrix_key(const Projectivity<F>& m) {
    std::string k;
    for (const auto& s : m.to_strings()) k += s + ";";
    return k;
}

template <Field F>
std::optional<std::size_t> find_element(const std::vector<Projectivity<F>>& xs, const Projectivity<F>& m) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == m) return i;
    return std::nullopt;
}
}  // namespace detail

inline std::string group_label(std::size_t order, bool abelian, const std::map<int, int>& profile) {
    if (order == 6 && !abelian) return "S3";
    if (order == 18 && !abelian && profile == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}, {6, 6}}) return "S3×C3";
    std::string s = "unrecognized (order " + std::to_string(order) + ")";
    return s;
}

/// Assembles the report for a finite set of projectivities. With `close`
/// the set is first closed under products; otherwise a non-closed set is
/// an error.
template <Field F>
GroupReport<F> make_group_report(const std::vector<Projectivity<F>>& input, bool close, std::size_t max_order = 64) {
    std::vector<Projectivity<F>> xs;
    for (const auto& m : input)
        if (!detail::find_element(xs, m)) xs.push_back(m);
    const std::size_t initial = xs.size();
    if (close) {
        for (bool grew = true; grew;) {
            grew = false;
            const std::size_t n = xs.size();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    auto p = xs[i] * xs[j];
                    if (!detail::find_element(xs, p)) {
                        xs.push_back(std::move(p));
                        grew = true;
                        if (xs.size() > max_order) throw PreconditionError("generated group exceeds the order bound");
                    }
                }
        }
    }
    std::vector<std::pair<std::string, Projectivity<F>>> keyed;
    for (auto& m : xs) keyed.emplace_back(detail::matrix_key(m), m);
    std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });

    GroupReport<F> g;
    g.closure_added = xs.size() - initial;
    for (auto& [k, m] : keyed) g.elements.push_back(m);
    const std::size_t n = g.elements.size();
    if (!detail::find_element(g.elements, Projectivity<F>::identity())) throw PreconditionError("set lacks the identity");
    g.table.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto k = detail::find_element(g.elements, g.elements[i] * g.elements[j]);
            if (!k) throw PreconditionError("set is not closed under composition");
            g.table[i][j] = static_cast<int>(*k);
        }
    const auto id = static_cast<int>(*detail::find_element(g.elements, Projectivity<F>::identity()));
    for (std::size_t i = 0; i < n; ++i) {
        int order = 1;
        for (int p = static_cast<int>(i); p != id; p = g.table[static_cast<std::size_t>(p)][i]) ++order;
        g.orders.push_back(order);
        ++g.order_profile[order];
    }
    g.abelian = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.abelian = g.abelian && g.table[i][j] == g.table[j][i];
    g.label = group_label(n, g.abelian, g.order_profile);
    return g;
}

template <Field F>
std::string group_identify(const GroupReport<F>& g) {
    return group_label(g.elements.size(), g.abelian, g.order_profile);
}

// Generators printed for the stabilizers ---------------------------------------

template <Field F>
Projectivity<F> stabilizer_generator_1() {
    return Projectivity<F>(Matrix<F>{{2, 2, 2, 0}, {0, -2, 0, 0}, {-2, 0, 0, 0}, {0, 1, 3, -2}});
}
template <Field F>
Projectivity<F> stabilizer_generator_2() {
    return Projectivity<F>(Matrix<F>{{2, 2, 2, 0}, {0, -2, 0, 0}, {0, 0, -2, 0}, {0, -2, -3, 2}});
}
/// The extra generator at a = eps, entries in Q[eps].
template <Field F>
Projectivity<F> stabilizer_generator_eps() {
    const std::map<std::string, F> e{};
    auto p = [&](const char* s) { return parse_scalar<F>(s, e); };
    return Projectivity<F>(Matrix<F>::from_rows({{p("0"), p("2*eps-2"), p("2*eps-4"), p("0")},
                                                 {p("0"), p("-4*eps+2"), p("0"), p("0")},
                                                 {p("2*eps-4"), p("2*eps-2"), p("0"), p("0")},
                                                 {p("-3"), p("-3*eps"), p("-3*eps"), p("4*eps-2")}}));
}

// Stabilizer ------------------------------------------------------------------

/// The projectivities base -> E for the 720 standard sextuples E of Q(a).
template <Field F>
std::vector<Projectivity<F>> sweep_projectivities(const std::vector<Sextuple<F>>& sextuples, bool to_base,
                                                  unsigned threads) {
    const auto base = base_sextuple<F>();
    std::vector<std::optional<Projectivity<F>>> slots(sextuples.size());
    parallel_for(sextuples.size(), threads, [&](std::size_t i) {
        slots[i] = to_base ? sextuple_projectivity(sextuples[i], base) : sextuple_projectivity(base, sextuples[i]);
    });
    std::vector<Projectivity<F>> out;
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

template <Field F>
struct Stabilizer {
    GroupReport<F> group;
    std::vector<Triple> hits;  ///< triples whose projectivity fixes Q(a), sweep order
};

template <Field F>
Stabilizer<F> stabilizer(const F& a, unsigned threads = default_threads()) {
    const auto s = build_qa(a);
    const auto sextuples = standard_sextuples(s);
    const auto ms = sweep_projectivities(sextuples, false, threads);
    std::vector<char> pass(ms.size(), 0);
    parallel_for(ms.size(), threads, [&](std::size_t i) { pass[i] = surfaces_coincide(ms[i].apply_form(s.poly), s.poly); });
    Stabilizer<F> out;
    std::vector<Projectivity<F>> found;
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (pass[i]) {
            found.push_back(ms[i]);
            out.hits.push_back(*sextuples[i].triple);
        }
    out.group = make_group_report(found, true);
    return out;
}

struct SymbolicStabilizer {
    std::vector<Triple> triples;                     ///< sweep order
    std::vector<CoincidenceCondition> conditions;   ///< one per triple
    std::size_t always = 0;
    std::size_t on_locus = 0;
    UniPoly<Rational> union_locus;                   ///< square-free lcm of the loci
    GroupReport<QA> generic_group;                   ///< the Always elements
};

inline SymbolicStabilizer stabilizer_symbolic(unsigned threads = default_threads()) {
    const auto s = build_qa(QA::generator());
    const auto sextuples = standard_sextuples(s);
    const auto ms = sweep_projectivities(sextuples, false, threads);
    SymbolicStabilizer out;
    out.conditions.resize(ms.size());
    parallel_for(ms.size(), threads,
                 [&](std::size_t i) { out.conditions[i] = coincidence_condition(ms[i].apply_form(s.poly), s.poly); });
    out.union_locus = UniPoly<Rational>(Rational(1));
    std::vector<Projectivity<QA>> always;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        out.triples.push_back(*sextuples[i].triple);
        const auto& c = out.conditions[i];
        if (c.kind == CoincidenceCondition::Kind::Always) {
            ++out.always;
            always.push_back(ms[i]);
        } else if (c.kind == CoincidenceCondition::Kind::OnLocus) {
            ++out.on_locus;
            out.union_locus = lcm(out.union_locus, c.locus);
        }
    }
    out.union_locus = squarefree_part(out.union_locus);
    out.generic_group = make_group_report(always, false);
    return out;
}

/// Action of a projectivity on a list of lines: image[i] is the index of
/// the image of lines[i], or -1 when it is not in the list.
template <Field F>
std::vector<int> line_permutation(const Projectivity<F>& m, const std::vector<SurfaceLine<F>>& lines) {
    std::vector<int> out;
    for (const auto& l : lines) {
        const ProjLine<F> img(m.apply(l.line.first()), m.apply(l.line.second()));
        int idx = -1;
        for (std::size_t j = 0; j < lines.size() && idx < 0; ++j)
            if (lines[j].line == img) idx = static_cast<int>(j);
        out.push_back(idx);
    }
    return out;
}

// j-invariant and orbit ---------------------------------------------------------

template <Field F>
F j_invariant(const F& a) {
    if (a.is_zero() || a == F(1L)) throw DegenerateParameter("j-invariant has a pole at a = " + a.to_string());
    const F q = a * a - a + F(1L);
    const F d = a * (a - F(1L));
    return F(256L) * q * q * q / (d * d);
}

/// The six anharmonic maps b, 1/b, 1/(1-b), b/(b-1), 1-b, (b-1)/b.
template <Field F>
std::array<F, 6> anharmonic_images(const F& b) {
    if (b.is_zero() || b == F(1L)) throw DegenerateParameter("orbit undefined at b = " + b.to_string());
    const F one(1L);
    return {b, one / b, one / (one - b), b / (b - one), one - b, (b - one) / b};
}

/// Distinct values of the orbit, in the order of the six maps.
template <Field F>
std::vector<F> orbit(const F& b) {
    std::vector<F> out;
    for (const auto& v : anharmonic_images(b))
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

// Equivalence -----------------------------------------------------------------

template <Field F>
struct EquivalenceResult {
    F a;
    F b;
    F j_a;
    F j_b;
    bool by_j = false;
    bool by_witness = false;
    std::optional<Projectivity<F>> witness;  ///< sends Q(a) to Q(b)
    std::optional<Triple> witness_triple;
    bool witness_verified = false;

    bool agree() const { return by_j == by_witness; }
};

/// Transforms of Q(a) by the 720 projectivities E -> base, computed once
/// and compared against any Q(b).
template <Field F>
class EquivalenceSweep {
public:
    explicit EquivalenceSweep(const F& a, unsigned threads = default_threads())
        : a_(a), surface_(build_qa(a)), threads_(threads) {
        const auto sextuples = standard_sextuples(surface_);
        ms_ = sweep_projectivities(sextuples, true, threads);
        for (const auto& s : sextuples) triples_.push_back(*s.triple);
        images_.resize(ms_.size());
        parallel_for(ms_.size(), threads, [&](std::size_t i) { images_[i] = ms_[i].apply_form(surface_.poly); });
    }

    const F& a() const { return a_; }

    EquivalenceResult<F> test(const F& b) const {
        const auto target = build_qa(b);
        std::vector<char> pass(images_.size(), 0);
        parallel_for(images_.size(), threads_, [&](std::size_t i) { pass[i] = surfaces_coincide(images_[i], target.poly); });
        EquivalenceResult<F> r{a_, b, j_invariant(a_), j_invariant(b)};
        r.by_j = r.j_a == r.j_b;
        // prefer the base triple (identity when a = b), then sweep order
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < pass.size(); ++i) {
            if (!pass[i]) continue;
            if (!pick || triples_[i] == Triple{11, 10, 9}) pick = i;
            if (triples_[i] == Triple{11, 10, 9}) break;
        }
        if (pick) {
            r.by_witness = true;
            r.witness = ms_[*pick];
            r.witness_triple = triples_[*pick];
            r.witness_verified = surfaces_coincide(r.witness->apply_form(surface_.poly), target.poly);
        }
        return r;
    }

private:
    F a_;
    MonoidSurface<F> surface_;
    unsigned threads_;
    std::vector<Projectivity<F>> ms_;
    std::vector<Triple> triples_;
    std::vector<MultiPoly<F>> images_;
};

template <Field F>
EquivalenceResult<F> equivalent(const F& a, const F& b, unsigned threads = default_threads()) {
    return EquivalenceSweep<F>(a, threads).test(b);
}

}  // namespace quartic

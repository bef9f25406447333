#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/field.hpp"

namespace quartic {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken lexicographically with the first variable largest (x > y > z > t).
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const unsigned da = total_degree(a);
        const unsigned db = total_degree(b);
        if (da != db) return da > db;
        return b < a;
    }
};

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// GrlexDescending order. For degree 4 in (x, y, z, t) this is the fixed
/// 35-monomial basis used by coefficient vectors.
inline std::vector<Exponent> monomials_of_degree(unsigned degree, std::size_t nvars) {
    std::vector<Exponent> out;
    Exponent e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

/// Sparse multivariate polynomial over F in an ordered list of named
/// variables. Terms are kept in GrlexDescending order and zero
/// coefficients are never stored.
template <Field F>
class MultiPoly {
public:
    using Terms = std::map<Exponent, F, GrlexDescending>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    MultiPoly(std::vector<std::string> vars, const F& constant) : vars_(std::move(vars)) {
        if (!constant.is_zero()) terms_.emplace(Exponent(vars_.size(), 0), constant);
    }

    static MultiPoly variable(const std::vector<std::string>& vars, std::size_t index) {
        MultiPoly p(vars);
        Exponent e(vars.size(), 0);
        e.at(index) = 1;
        p.terms_.emplace(std::move(e), F(1L));
        return p;
    }
    static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name) {
        return variable(vars, index_in(vars, name));
    }
    static MultiPoly term(const std::vector<std::string>& vars, F coef, Exponent e) {
        if (e.size() != vars.size()) throw PreconditionError("exponent length does not match variable count");
        MultiPoly p(vars);
        if (!coef.is_zero()) p.terms_.emplace(std::move(e), std::move(coef));
        return p;
    }
    /// Linear form sum_i coefs[i] * vars[i].
    static MultiPoly linear(const std::vector<std::string>& vars, const std::vector<F>& coefs) {
        MultiPoly p(vars);
        for (std::size_t i = 0; i < coefs.size() && i < vars.size(); ++i) {
            if (coefs[i].is_zero()) continue;
            Exponent e(vars.size(), 0);
            e[i] = 1;
            p.terms_.emplace(std::move(e), coefs[i]);
        }
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }

    F coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0L) : it->second;
    }
    F constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

    /// Leading term in GrlexDescending order.
    const std::pair<const Exponent, F>& leading() const {
        if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
        return *terms_.begin();
    }

    int degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first)); }

    /// Degree in one variable.
    int degree_in(const std::string& name) const {
        const std::size_t i = index_in(vars_, name);
        int d = terms_.empty() ? -1 : 0;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[i]));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = total_degree(terms_.begin()->first);
        return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
    }

    /// Lowest total degree occurring in the variables with the given
    /// indices (used for multiplicity at the origin).
    int min_degree_in(const std::vector<std::size_t>& indices) const {
        int best = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (auto i : indices) d += static_cast<int>(e[i]);
            if (best < 0 || d < best) best = d;
        }
        return best;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_ring(b);
        MultiPoly r(a.vars_);
        Exponent e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const F& s) {
        if (s.is_zero()) return MultiPoly(a.vars_);
        MultiPoly r = a;
        for (auto& [e, c] : r.terms_) c = c * s;
        return r;
    }
    friend MultiPoly operator*(const F& s, const MultiPoly& a) { return a * s; }

    MultiPoly pow(unsigned k) const {
        MultiPoly result(vars_, F(1L));
        MultiPoly base = *this;
        while (k != 0) {
            if (k & 1U) result = result * base;
            k >>= 1U;
            if (k != 0) base = base * base;
        }
        return result;
    }

    /// Equality of polynomials (same ring, same terms).
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    F evaluate(const std::vector<F>& point) const {
        if (point.size() != vars_.size()) throw PreconditionError("evaluation point has wrong dimension");
        F acc(0L);
        for (const auto& [e, c] : terms_) {
            F m = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0) m = m * power(point[i], e[i]);
            }
            acc = acc + m;
        }
        return acc;
    }

    MultiPoly derivative(std::size_t var) const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent d = e;
            --d[var];
            r.add_term(d, c * F(static_cast<long>(e[var])));
        }
        return r;
    }
    MultiPoly derivative(const std::string& name) const { return derivative(index_in(vars_, name)); }

    /// Coefficients with respect to all monomials of `degree` in `vars`, in
    /// GrlexDescending order. `vars` must be a sub-list of the ring
    /// variables; the remaining ring variables must not occur.
    std::vector<F> coeff_vector(unsigned degree, const std::vector<std::string>& vars) const {
        std::vector<std::size_t> idx;
        idx.reserve(vars.size());
        for (const auto& v : vars) idx.push_back(index_in(vars_, v));
        for (const auto& [e, c] : terms_) {
            unsigned d = 0;
            for (auto i : idx) d += e[i];
            if (d != degree || total_degree(e) != degree) {
                throw PreconditionError("coefficient vector requested for a non-homogeneous polynomial");
            }
        }
        std::vector<F> out;
        for (const auto& m : monomials_of_degree(degree, vars.size())) {
            Exponent full(vars_.size(), 0);
            for (std::size_t k = 0; k < idx.size(); ++k) full[idx[k]] = m[k];
            out.push_back(coefficient(full));
        }
        return out;
    }
    std::vector<F> coeff_vector(unsigned degree) const { return coeff_vector(degree, vars_); }

    /// Re-expresses the polynomial in a ring with a different variable list
    /// containing every variable that actually occurs.
    MultiPoly in_ring(const std::vector<std::string>& vars) const {
        if (vars == vars_) return *this;
        std::vector<std::size_t> map(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(vars.begin(), vars.end(), vars_[i]);
            map[i] = it == vars.end() ? vars.size() : static_cast<std::size_t>(it - vars.begin());
        }
        MultiPoly r(vars);
        for (const auto& [e, c] : terms_) {
            Exponent ne(vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (map[i] == vars.size()) throw PreconditionError("variable '" + vars_[i] + "' missing from target ring");
                ne[map[i]] = e[i];
            }
            r.add_term(ne, c);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            detail::append_term(out, detail::format_term(c.to_string(), mono));
        }
        return out;
    }

    static std::size_t index_in(const std::vector<std::string>& vars, const std::string& name) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw PreconditionError("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - vars.begin());
    }

    void add_term(const Exponent& e, const F& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    void check_ring(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw PreconditionError("polynomials live in different rings");
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

/// Substitutes each bound variable of `f` by a polynomial of the ring
/// `target`; unbound variables of `f` are carried over by name. A binding
/// for a variable that `f` does not have is an error.
template <Field F>
MultiPoly<F> substitute(const MultiPoly<F>& f, const std::map<std::string, MultiPoly<F>>& bindings,
                        const std::vector<std::string>& target) {
    for (const auto& [name, p] : bindings) {
        MultiPoly<F>::index_in(f.vars(), name);
        if (p.vars() != target) throw PreconditionError("binding for '" + name + "' is not in the target ring");
    }
    const std::size_t n = f.vars().size();
    std::vector<MultiPoly<F>> image;
    image.reserve(n);
    for (const auto& v : f.vars()) {
        auto it = bindings.find(v);
        image.push_back(it != bindings.end() ? it->second : MultiPoly<F>::variable(target, v));
    }
    // powers[i][k] = image[i]^k, filled lazily
    std::vector<std::vector<MultiPoly<F>>> powers(n);
    auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly<F>& {
        auto& p = powers[i];
        if (p.empty()) p.emplace_back(target, F(1L));
        while (p.size() <= k) p.push_back(p.back() * image[i]);
        return p[k];
    };
    MultiPoly<F> result(target);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly<F> m(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] != 0) m = m * power_of(i, e[i]);
        }
        result += m;
    }
    return result;
}

template <Field F>
MultiPoly<F> substitute(const MultiPoly<F>& f, const std::map<std::string, MultiPoly<F>>& bindings) {
    return substitute(f, bindings, f.vars());
}

/// Exact quotient f / g; throws NotDivisible when g does not divide f.
template <Field F>
MultiPoly<F> exact_divide(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (f.vars() != g.vars()) throw PreconditionError("polynomials live in different rings");
    const auto& [lg_e, lg_c] = g.leading();
    const F lg_inv = lg_c.inv();
    MultiPoly<F> q(f.vars());
    MultiPoly<F> r = f;
    Exponent e(f.vars().size());
    while (!r.is_zero()) {
        const auto& [lr_e, lr_c] = r.leading();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (lr_e[i] < lg_e[i]) throw NotDivisible("polynomial division is not exact");
            e[i] = lr_e[i] - lg_e[i];
        }
        const F c = lr_c * lg_inv;
        auto t = MultiPoly<F>::term(f.vars(), c, e);
        q += t;
        r -= t * g;
    }
    return q;
}

template <Field F>
std::vector<MultiPoly<F>> gradient(const MultiPoly<F>& f, const std::vector<std::string>& vars) {
    std::vector<MultiPoly<F>> g;
    g.reserve(vars.size());
    for (const auto& v : vars) g.push_back(f.derivative(v));
    return g;
}

/// True when g is a nonzero scalar multiple of f (or both are zero).
template <Field F>
bool proportional(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    if (f.vars() != g.vars() || f.size() != g.size()) return false;
    if (f.is_zero()) return true;
    const auto& [e0, f0] = f.leading();
    const F g0 = g.coefficient(e0);
    if (g0.is_zero()) return false;
    for (const auto& [e, c] : f.terms()) {
        if (!(c * g0 == g.coefficient(e) * f0)) return false;
    }
    return true;
}

/// Maps every coefficient through `fn` (e.g. specialization of a parameter).
template <Field G, Field F, class Fn>
MultiPoly<G> map_coefficients(const MultiPoly<F>& f, Fn&& fn) {
    MultiPoly<G> r(f.vars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, fn(c));
    return r;
}

}  // namespace quartic

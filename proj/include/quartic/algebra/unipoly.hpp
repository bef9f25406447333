#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/field.hpp"

namespace quartic {

/// Dense univariate polynomial over a field K. Coefficients are stored from
/// the constant term upwards with no trailing zeros, so the zero polynomial
/// is the empty vector and has degree -1.
template <Field K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(K constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit UniPoly(std::vector<K> coefficients) : c_(std::move(coefficients)) { trim(); }

    static UniPoly monomial(K coef, std::size_t degree) {
        if (coef.is_zero()) return {};
        std::vector<K> c(degree + 1, K(0L));
        c[degree] = std::move(coef);
        return UniPoly(std::move(c));
    }
    static UniPoly variable() { return monomial(K(1L), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == K(1L); }
    const std::vector<K>& coefficients() const { return c_; }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0L); }
    const K& lc() const {
        if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
        return c_.back();
    }

    UniPoly monic() const {
        if (is_zero() || lc() == K(1L)) return *this;
        return *this * lc().inv();
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * K(static_cast<long>(i)));
        return UniPoly(std::move(d));
    }

    K eval(const K& x) const {
        K acc(0L);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Largest power of the variable dividing the polynomial.
    std::size_t valuation() const {
        std::size_t v = 0;
        while (v < c_.size() && c_[v].is_zero()) ++v;
        return v;
    }

    UniPoly shift_down(std::size_t k) const {
        if (k >= c_.size()) return {};
        return UniPoly(std::vector<K>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0L));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0L));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0L));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const K& s) {
        if (s.is_zero()) return {};
        UniPoly r = a;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (a.degree() < b.degree()) return {UniPoly(), a};
        std::vector<K> rem = a.c_;
        std::vector<K> quo(a.c_.size() - b.c_.size() + 1, K(0L));
        const K lead_inv = b.lc().inv();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = rem.size(); k-- > db;) {
            if (rem[k].is_zero()) continue;
            K f = rem[k] * lead_inv;
            for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - f * b.c_[j];
            quo[k - db] = std::move(f);
        }
        rem.resize(db);
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    /// Quotient of an exact division; throws NotDivisible otherwise.
    friend UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw NotDivisible("univariate division is not exact");
        return q;
    }

    std::string to_string(std::string_view var) const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string mono;
            if (i == 1) mono = std::string(var);
            else if (i > 1) mono = std::string(var) + "^" + std::to_string(i);
            detail::append_term(out, detail::format_term(c_[i].to_string(), mono));
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <Field K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

template <Field K>
UniPoly<K> lcm(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_quotient(a * b, gcd(a, b)).monic();
}

/// Product of the distinct irreducible factors, made monic (characteristic
/// zero).
template <Field K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
    if (p.is_zero()) return {};
    if (p.degree() == 0) return UniPoly<K>(K(1L));
    return exact_quotient(p, gcd(p, p.derivative())).monic();
}

/// Removes every power of `factor` dividing `p`; returns the multiplicity.
template <Field K>
std::size_t remove_factor(UniPoly<K>& p, const UniPoly<K>& factor) {
    if (p.is_zero() || factor.degree() < 1) return 0;
    std::size_t m = 0;
    for (;;) {
        auto [q, r] = divmod(p, factor);
        if (!r.is_zero()) return m;
        p = std::move(q);
        ++m;
    }
}

}  // namespace quartic

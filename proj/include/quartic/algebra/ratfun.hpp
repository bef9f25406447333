#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/field.hpp"
#include "quartic/algebra/rational.hpp"
#include "quartic/algebra/unipoly.hpp"

namespace quartic {

/// Compile-time variable name for RatFun.
template <std::size_t N>
struct VarName {
    char text[N]{};
    constexpr VarName(const char (&s)[N]) { std::copy_n(s, N, text); }  // NOLINT
    constexpr std::string_view view() const { return {text, N - 1}; }
};

/// Field of rational functions K(var). Stored as num/den with
/// gcd(num, den) = 1 and den monic, so structural equality is field equality.
///
/// Nesting builds towers: RatFun<Rational, "a"> is Q(a) and
/// RatFun<RatFun<Rational, "a">, "b"> is Q(a)(b).
template <Field K, VarName Var>
class RatFun {
public:
    using Coeff = K;
    using Poly = UniPoly<K>;

    RatFun() : den_(K(1L)) {}
    RatFun(long v) : num_(K(v)), den_(K(1L)) {}  // NOLINT(google-explicit-constructor)
    template <class T>
        requires(!std::same_as<T, long> && !std::same_as<T, RatFun> && std::constructible_from<K, const T&>)
    RatFun(const T& v) : num_(K(v)), den_(K(1L)) {}  // NOLINT(google-explicit-constructor)
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static constexpr std::string_view var() { return Var.view(); }

    /// The generator `var` itself.
    static RatFun generator() { return RatFun(Poly::variable(), Poly(K(1L))); }

    static std::optional<RatFun> symbol(std::string_view name) {
        if (name == var()) return generator();
        if (auto k = K::symbol(name)) return RatFun(*k);
        return std::nullopt;
    }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }

    /// Specialization var -> x.
    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw DivisionByZero("denominator vanishes at the evaluation point");
        return num_.eval(x) / d;
    }

    RatFun inv() const {
        if (is_zero()) throw DivisionByZero();
        return RatFun(den_, num_);
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& x, const RatFun& y) {
        if (x.den_.is_one() && y.den_.is_one()) return from_normalized(x.num_ + y.num_, y.den_);
        if (x.den_ == y.den_) return RatFun(x.num_ + y.num_, x.den_);
        return RatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFun operator-(const RatFun& x, const RatFun& y) { return x + (-y); }
    friend RatFun operator*(const RatFun& x, const RatFun& y) {
        if (x.is_zero() || y.is_zero()) return {};
        if (x.den_.is_one() && y.den_.is_one()) return from_normalized(x.num_ * y.num_, x.den_);
        // Cross-cancel before multiplying so both factors stay reduced.
        Poly g1 = gcd(x.num_, y.den_);
        Poly g2 = gcd(y.num_, x.den_);
        Poly n1 = g1.is_one() ? x.num_ : exact_quotient(x.num_, g1);
        Poly d2 = g1.is_one() ? y.den_ : exact_quotient(y.den_, g1);
        Poly n2 = g2.is_one() ? y.num_ : exact_quotient(y.num_, g2);
        Poly d1 = g2.is_one() ? x.den_ : exact_quotient(x.den_, g2);
        Poly num = n1 * n2;
        Poly den = d1 * d2;
        const K l = den.lc();
        if (!(l == K(1L))) {
            const K li = l.inv();
            num = num * li;
            den = den * li;
        }
        return from_normalized(std::move(num), std::move(den));
    }
    friend RatFun operator/(const RatFun& x, const RatFun& y) { return x * y.inv(); }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun&, const RatFun&) = default;

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string(var());
        return "(" + num_.to_string(var()) + ")/(" + den_.to_string(var()) + ")";
    }

private:
    static RatFun from_normalized(Poly num, Poly den) {
        RatFun r;
        r.num_ = std::move(num);
        r.den_ = r.num_.is_zero() ? Poly(K(1L)) : std::move(den);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = Poly(K(1L));
            return;
        }
        if (den_.degree() > 0) {
            Poly g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_quotient(num_, g);
                den_ = exact_quotient(den_, g);
            }
        }
        const K l = den_.lc();
        if (!(l == K(1L))) {
            const K li = l.inv();
            num_ = num_ * li;
            den_ = den_ * li;
        }
    }

    Poly num_;
    Poly den_;
};

/// Q(a), the field of the one-parameter surface family.
using QA = RatFun<Rational, "a">;
/// Q(a)(b), used where the scale parameter b of the two-parameter family
/// is kept symbolic.
using QAB = RatFun<QA, "b">;

template <class T>
struct is_ratfun : std::false_type {};
template <Field K, VarName V>
struct is_ratfun<RatFun<K, V>> : std::true_type {};
template <class T>
inline constexpr bool is_ratfun_v = is_ratfun<T>::value;

}  // namespace quartic

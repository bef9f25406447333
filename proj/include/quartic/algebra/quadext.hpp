#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/field.hpp"
#include "quartic/algebra/rational.hpp"

namespace quartic {

/// Q(eps) with eps^2 = eps - 1, i.e. eps is a primitive sixth root of unity
/// (a root of x^2 - x + 1). Elements are c0 + c1*eps.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long v) : c0_(v) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational c0) : c0_(std::move(c0)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

    static QuadExt eps() { return {Rational(0L), Rational(1L)}; }
    static std::optional<QuadExt> symbol(std::string_view name) {
        if (name == "eps") return eps();
        return std::nullopt;
    }

    const Rational& c0() const { return c0_; }
    const Rational& c1() const { return c1_; }
    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
    bool is_rational() const { return c1_.is_zero(); }

    /// Galois conjugate: eps -> 1 - eps.
    QuadExt conjugate() const { return {c0_ + c1_, -c1_}; }
    /// x * conjugate(x) = c0^2 + c0*c1 + c1^2.
    Rational norm() const { return c0_ * c0_ + c0_ * c1_ + c1_ * c1_; }

    QuadExt inv() const {
        if (is_zero()) throw DivisionByZero();
        const Rational n = norm();
        const QuadExt c = conjugate();
        return {c.c0_ / n, c.c1_ / n};
    }

    QuadExt operator-() const { return {-c0_, -c1_}; }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.c0_ + y.c0_, x.c1_ + y.c1_}; }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.c0_ - y.c0_, x.c1_ - y.c1_}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        // (p + q e)(r + s e) = pr + (ps + qr) e + qs e^2, e^2 = e - 1
        const Rational qs = x.c1_ * y.c1_;
        return {x.c0_ * y.c0_ - qs, x.c0_ * y.c1_ + x.c1_ * y.c0_ + qs};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt&, const QuadExt&) = default;

    /// "c0+c1*eps", dropping zero parts.
    std::string to_string() const {
        if (c1_.is_zero()) return c0_.to_string();
        std::string out;
        if (!c0_.is_zero()) out = c0_.to_string();
        detail::append_term(out, detail::format_term(c1_.to_string(), "eps"));
        return out;
    }

private:
    Rational c0_;
    Rational c1_;
};

}  // namespace quartic

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "quartic/algebra/error.hpp"

namespace quartic {

/// Arbitrary precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    /// Parses "p" or "p/q" (no whitespace).
    static Rational from_string(std::string_view text) {
        mpq_class q;
        if (text.empty() || q.set_str(std::string(text), 10) != 0) {
            throw ParseError("invalid rational '" + std::string(text) + "'");
        }
        if (q.get_den() == 0) throw DivisionByZero();
        q.canonicalize();
        return Rational(std::move(q));
    }

    /// Rationals have no named constants.
    static std::optional<Rational> symbol(std::string_view) { return std::nullopt; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / v_);
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

}  // namespace quartic

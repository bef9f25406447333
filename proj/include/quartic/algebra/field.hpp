#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

namespace quartic {

/// An exact, computable field: decidable equality, division throwing
/// DivisionByZero, a textual form accepted back by the expression parser,
/// and optional named generators ("a", "eps", ...).
template <class F>
concept Field = std::regular<F> && std::constructible_from<F, long> &&
                requires(const F& x, const F& y, std::string_view name) {
                    { x + y } -> std::same_as<F>;
                    { x - y } -> std::same_as<F>;
                    { x * y } -> std::same_as<F>;
                    { x / y } -> std::same_as<F>;
                    { -x } -> std::same_as<F>;
                    { x.is_zero() } -> std::same_as<bool>;
                    { x.inv() } -> std::same_as<F>;
                    { x.to_string() } -> std::convertible_to<std::string>;
                    { F::symbol(name) } -> std::same_as<std::optional<F>>;
                };

template <Field F>
F power(F base, unsigned exp) {
    F result(1L);
    while (exp != 0) {
        if (exp & 1U) result = result * base;
        exp >>= 1U;
        if (exp != 0) base = base * base;
    }
    return result;
}

namespace detail {

/// True when `s` prints as a signed rational literal, so it can be written
/// in front of "*var" without parentheses.
inline bool is_atomic_number(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s.front() == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if ((s[i] < '0' || s[i] > '9') && s[i] != '/') return false;
    }
    return true;
}

/// Formats `coef * monomial` for a sum-of-terms printer. `monomial` may be
/// empty for the constant term.
inline std::string format_term(const std::string& coef, const std::string& monomial) {
    if (monomial.empty()) {
        return is_atomic_number(coef) ? coef : "(" + coef + ")";
    }
    if (coef == "1") return monomial;
    if (coef == "-1") return "-" + monomial;
    if (is_atomic_number(coef)) return coef + "*" + monomial;
    return "(" + coef + ")*" + monomial;
}

inline void append_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (!term.empty() && term.front() == '-') {
        out += term;
    } else {
        out += "+" + term;
    }
}

}  // namespace detail
}  // namespace quartic

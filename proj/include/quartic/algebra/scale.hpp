#pragma once

#include <span>

#include "quartic/algebra/field.hpp"
#include "quartic/algebra/ratfun.hpp"

namespace quartic {

/// Divides by the first nonzero entry, so that entry becomes 1. Returns
/// false for an all-zero vector.
template <Field F>
bool make_canonical(std::span<F> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (v[i] == F(1L)) return true;
        const F s = v[i].inv();
        for (std::size_t j = i; j < v.size(); ++j) v[j] = v[j] * s;
        return true;
    }
    return false;
}

/// Rescales a projective vector to a cheap representative. Over K(var) this
/// clears denominators and removes the polynomial content, leaving
/// polynomial entries whose first nonzero entry is monic; elsewhere it is
/// make_canonical.
template <Field F>
void simplify_projective(std::span<F> v) {
    if constexpr (is_ratfun_v<F>) {
        using Poly = typename F::Poly;
        using K = typename F::Coeff;
        Poly den_lcm(K(1L));
        Poly num_gcd;
        bool any = false;
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            any = true;
            if (!x.denominator().is_one()) den_lcm = lcm(den_lcm, x.denominator());
            num_gcd = gcd(num_gcd, x.numerator());
        }
        if (!any) return;
        const F scale(den_lcm, num_gcd);
        std::size_t first = 0;
        while (v[first].is_zero()) ++first;
        F s = v[first] * scale;
        const K lead = s.numerator().lc();
        const F total = scale * F(lead.inv());
        if (total == F(1L)) return;
        for (auto& x : v) {
            if (!x.is_zero()) x = x * total;
        }
    } else {
        make_canonical(v);
    }
}

/// True when u and v are proportional (all 2x2 minors of [u; v] vanish).
template <Field F>
bool proportional(std::span<const F> u, std::span<const F> v) {
    if (u.size() != v.size()) return false;
    std::size_t p = 0;
    while (p < u.size() && u[p].is_zero()) ++p;
    if (p == u.size()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    if (v[p].is_zero()) return false;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (j == p) continue;
        if (!(u[p] * v[j] == u[j] * v[p])) return false;
    }
    return true;
}

}  // namespace quartic

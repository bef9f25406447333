#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "quartic/algebra/mpoly.hpp"
#include "quartic/algebra/quadext.hpp"
#include "quartic/algebra/ratfun.hpp"
#include "quartic/algebra/rational.hpp"

namespace quartic::testing {

/// Small random scalars for property tests. Seeded so failures reproduce.
class Gen {
public:
    explicit Gen(unsigned seed = 12345) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 9) {
        const long num = integer(-bound, bound);
        const long den = integer(1, bound);
        return Rational(num, den);
    }
    Rational nonzero_rational(long bound = 9) {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }
    QuadExt quadext() { return {rational(), rational()}; }

    QA::Poly poly(int max_degree) {
        std::vector<Rational> c;
        const int d = static_cast<int>(integer(0, max_degree));
        for (int i = 0; i <= d; ++i) c.push_back(rational(5));
        return QA::Poly(std::move(c));
    }
    QA ratfun() {
        for (;;) {
            auto den = poly(2);
            if (den.is_zero()) continue;
            return QA(poly(3), den);
        }
    }

    template <class F, class Make>
    MultiPoly<F> mpoly(const std::vector<std::string>& vars, unsigned max_degree, int terms, Make&& make) {
        MultiPoly<F> p(vars);
        for (int k = 0; k < terms; ++k) {
            Exponent e(vars.size(), 0);
            unsigned left = static_cast<unsigned>(integer(0, max_degree));
            for (std::size_t i = 0; i < vars.size() && left > 0; ++i) {
                const unsigned take = static_cast<unsigned>(integer(0, left));
                e[i] = take;
                left -= take;
            }
            p.add_term(e, make());
        }
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline const std::vector<std::string>& xyzt() {
    static const std::vector<std::string> v{"x", "y", "z", "t"};
    return v;
}

}  // namespace quartic::testing

namespace quartic {
// readable gtest failure messages
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const QuadExt& q, std::ostream* os) { *os << q.to_string(); }
template <Field K, VarName V>
void PrintTo(const RatFun<K, V>& f, std::ostream* os) {
    *os << f.to_string();
}
}  // namespace quartic

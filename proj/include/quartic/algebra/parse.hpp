#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/field.hpp"
#include "quartic/algebra/mpoly.hpp"
#include "quartic/algebra/rational.hpp"

namespace quartic {

namespace detail {

/// Recursive-descent parser for
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := ('-'|'+') unary | power
///   power := atom ('^' integer)?
///   atom  := integer | identifier | '(' expr ')'
/// Whitespace is ignored. `Ops` supplies the value type and its operations.
template <class Ops>
class ExprParser {
public:
    using Value = typename Ops::Value;

    ExprParser(std::string_view text, const Ops& ops) : s_(text), ops_(ops) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value v = term();
        for (;;) {
            if (accept('+')) v = ops_.add(v, term());
            else if (accept('-')) v = ops_.sub(v, term());
            else return v;
        }
    }
    Value term() {
        Value v = unary();
        for (;;) {
            if (accept('*')) v = ops_.mul(v, unary());
            else if (accept('/')) v = ops_.div(v, unary());
            else return v;
        }
    }
    Value unary() {
        if (accept('-')) return ops_.neg(unary());
        if (accept('+')) return unary();
        return power();
    }
    Value power() {
        Value base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            return ops_.pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }
    Value atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ops_.integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(s_.substr(start, pos_ - start));
            if (auto v = ops_.symbol(name)) return *v;
            pos_ = start;
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected character");
    }

    std::string_view s_;
    const Ops& ops_;
    std::size_t pos_ = 0;
};

template <Field F>
struct FieldOps {
    using Value = F;
    const std::map<std::string, F>* bindings = nullptr;

    F integer(const mpz_class& z) const { return F(Rational(z)); }
    std::optional<F> symbol(const std::string& name) const {
        if (bindings != nullptr) {
            if (auto it = bindings->find(name); it != bindings->end()) return it->second;
        }
        return F::symbol(name);
    }
    F add(const F& a, const F& b) const { return a + b; }
    F sub(const F& a, const F& b) const { return a - b; }
    F mul(const F& a, const F& b) const { return a * b; }
    F div(const F& a, const F& b) const { return a / b; }
    F neg(const F& a) const { return -a; }
    F pow(const F& a, unsigned k) const { return power(a, k); }
};

template <Field F>
struct PolyOps {
    using Value = MultiPoly<F>;
    std::vector<std::string> vars;
    const std::map<std::string, F>* bindings = nullptr;

    Value integer(const mpz_class& z) const { return Value(vars, F(Rational(z))); }
    std::optional<Value> symbol(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == name) return Value::variable(vars, i);
        }
        if (bindings != nullptr) {
            if (auto it = bindings->find(name); it != bindings->end()) return Value(vars, it->second);
        }
        if (auto c = F::symbol(name)) return Value(vars, *c);
        return std::nullopt;
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const {
        if (b.is_constant()) return a * b.constant_term().inv();
        return exact_divide(a, b);
    }
    Value neg(const Value& a) const { return -a; }
    Value pow(const Value& a, unsigned k) const { return a.pow(k); }
};

}  // namespace detail

/// Parses a scalar of F. Accepts "p", "p/q", and any expression in the
/// field's named generators, e.g. "(a^2-1)/(a-1)" for Q(a) or "1/2-3*eps".
template <Field F>
F parse_scalar(std::string_view text, const std::map<std::string, F>& bindings = {}) {
    detail::FieldOps<F> ops{&bindings};
    return detail::ExprParser<detail::FieldOps<F>>(text, ops).parse();
}

/// Parses a polynomial in `vars` with coefficients in F. Names in
/// `bindings` are replaced by the given scalars (e.g. a -> 3).
template <Field F>
MultiPoly<F> parse_poly(std::string_view text, std::vector<std::string> vars,
                        const std::map<std::string, F>& bindings = {}) {
    detail::PolyOps<F> ops{std::move(vars), &bindings};
    return detail::ExprParser<detail::PolyOps<F>>(text, ops).parse();
}

}  // namespace quartic

#pragma once

/// @file serialize.hpp
/// JSON forms of the geometric objects. Scalars are written in the textual
/// grammar of the algebra layer, points and matrices in canonical scaling.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "quartic/classify.hpp"
#include "quartic/configuration.hpp"
#include "quartic/monoid.hpp"
#include "quartic/projective.hpp"
#include "quartic/sextuple.hpp"

namespace quartic {

using Json = nlohmann::json;

template <Field F>
Json to_json(const ProjPoint<F>& p) {
    return p.to_strings();
}

template <Field F>
Json to_json(const ProjLine<F>& l) {
    auto pl = l.plucker();
    make_canonical(std::span<F>(pl));
    Json pj = Json::array();
    for (const auto& v : pl) pj.push_back(v.to_string());
    return {{"points", {to_json(l.first()), to_json(l.second())}}, {"plucker", pj}};
}

template <Field F>
Json to_json(const Projectivity<F>& m) {
    return m.to_strings();
}

/// Terms as [exponent-vector, coefficient] in graded lex order.
template <Field F>
Json to_json(const MultiPoly<F>& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) out.push_back({e, c.to_string()});
    return out;
}

inline Json triples_json(const std::vector<Triple>& ts) {
    Json out = Json::array();
    for (const auto& t : ts) out.push_back({t[0], t[1], t[2]});
    return out;
}

template <Field F>
Json to_json(const Configuration<F>& c) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(to_json(p));
    return {{"a", c.a.to_string()}, {"flavor", to_string(c.flavor)}, {"points", pts}};
}

template <Field F>
Json to_json(const MonoidSurface<F>& s) {
    Json j{{"flavor", to_string(s.flavor)}, {"polynomial", to_json(s.poly)}, {"text", s.poly.to_string()}};
    j["a"] = s.a ? Json(s.a->to_string()) : Json();
    j["b"] = s.b ? Json(s.b->to_string()) : Json();
    return j;
}

template <Field F>
Json to_json(const SurfaceLine<F>& l) {
    Json j = to_json(l.line);
    j["provenance"] = l.provenance();
    return j;
}

template <Field F>
Json to_json(const Sextuple<F>& s) {
    Json pts = Json::array();
    for (const auto& p : s.e) pts.push_back(to_json(p));
    Json j{{"points", pts}};
    j["triple"] = s.triple ? Json{(*s.triple)[0], (*s.triple)[1], (*s.triple)[2]} : Json();
    const auto check = is_convergent(s);
    j["A"] = check.apex ? to_json(*check.apex) : Json();
    return j;
}

template <Field F>
Json to_json(const GroupReport<F>& g) {
    Json profile = Json::object();
    for (const auto& [order, count] : g.order_profile) profile[std::to_string(order)] = count;
    Json ms = Json::array();
    for (const auto& m : g.elements) ms.push_back(to_json(m));
    return {{"order", g.elements.size()}, {"abelian", g.abelian},   {"order_profile", profile},
            {"label", g.label},           {"matrices", ms},          {"orders", g.orders},
            {"closure_added", g.closure_added}};
}

template <Field F>
Json to_json(const EquivalenceResult<F>& r) {
    Json j{{"a", r.a.to_string()},     {"b", r.b.to_string()},         {"j_a", r.j_a.to_string()},
           {"j_b", r.j_b.to_string()}, {"equivalent", r.by_witness},   {"j_path", r.by_j},
           {"witness_path", r.by_witness}, {"agree", r.agree()},       {"witness_verified", r.witness_verified}};
    j["witness"] = r.witness ? to_json(*r.witness) : Json();
    j["witness_triple"] = r.witness_triple ? Json{(*r.witness_triple)[0], (*r.witness_triple)[1], (*r.witness_triple)[2]}
                                           : Json();
    return j;
}

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace quartic

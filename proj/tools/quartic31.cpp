// quartic31: certificates for the quartic monoid surfaces with 31 lines.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include "quartic/algebra/quadext.hpp"
#include "quartic/classify.hpp"
#include "quartic/serialize.hpp"

using namespace quartic;

namespace {

constexpr const char* kVersion = "1.0.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invariants actually evaluated by a command, in execution order.
class Checks {
public:
    bool add(std::string name, bool pass, std::string detail = {}) {
        Json c{{"name", std::move(name)}, {"pass", pass}};
        if (!detail.empty()) c["detail"] = std::move(detail);
        list_.push_back(std::move(c));
        return pass;
    }
    const Json& json() const { return list_; }
    bool all() const {
        for (const auto& c : list_)
            if (!c["pass"].get<bool>()) return false;
        return true;
    }

private:
    Json list_ = Json::array();
};

struct Outcome {
    Json result;
    Checks checks;
};

enum class FieldKind { Rational, Eps, Symbolic };

FieldKind field_of(const std::string& text) {
    if (text == "symbolic") return FieldKind::Symbolic;
    if (text.find("eps") != std::string::npos) return FieldKind::Eps;
    return FieldKind::Rational;
}

template <Field F>
F scalar(const std::string& text) {
    if constexpr (std::is_same_v<F, QA>) {
        if (text == "symbolic") return QA::generator();
    }
    try {
        return parse_scalar<F>(text);
    } catch (const quartic::ParseError& e) {
        throw UsageError("cannot parse scalar '" + text + "': " + e.what());
    } catch (const DivisionByZero& e) {
        throw UsageError("scalar '" + text + "': " + e.what());
    }
}

/// Runs fn(std::type_identity<F>{}) for the field selected by the texts.
template <class Fn>
Outcome dispatch(const std::vector<std::string>& texts, bool allow_symbolic, Fn&& fn) {
    FieldKind kind = FieldKind::Rational;
    for (const auto& t : texts) {
        const auto k = field_of(t);
        if (k == FieldKind::Symbolic && !allow_symbolic) throw UsageError("'symbolic' is not accepted here");
        if (k != FieldKind::Rational) {
            if (kind != FieldKind::Rational && kind != k) throw UsageError("cannot mix eps and symbolic parameters");
            kind = k;
        }
    }
    switch (kind) {
        case FieldKind::Eps: return fn(std::type_identity<QuadExt>{});
        case FieldKind::Symbolic: return fn(std::type_identity<QA>{});
        default: return fn(std::type_identity<Rational>{});
    }
}

Flavor parse_flavor(const std::string& s) { return s == "normalized" ? Flavor::Normalized : Flavor::Original; }

Triple parse_triple(const std::string& s) {
    Triple t{};
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(s);
    if (!(in >> t[0] >> c1 >> t[1] >> c2 >> t[2]) || c1 != ',' || c2 != ',' || !in.eof()) {
        throw UsageError("--triple expects i,j,k");
    }
    for (int v : t)
        if (v < 0 || v >= kNumPoints) throw UsageError("triple labels must lie in 0..11");
    return t;
}

template <Field F>
bool is_eps_root(const F& a) {
    return (a * a - a + F(1L)).is_zero();
}

// config ------------------------------------------------------------------------

template <Field F>
void config_payload(const F& a, Flavor flavor, Outcome& out, const std::string& prefix = {}) {
    const auto pts = raw_points(a, flavor);
    const auto rep = verify_collinearities(pts);
    Json points = Json::array();
    for (const auto& p : pts) points.push_back(to_json(p));
    Json coincident = Json::array();
    for (const auto& [i, j] : rep.coincident) coincident.push_back({i, j});
    const auto actual = rep.degeneracy();
    const auto stated = stated_degeneracy(a);
    out.result[prefix + "config"] = {{"a", a.to_string()},
                                     {"flavor", to_string(flavor)},
                                     {"points", points},
                                     {"collinear_listed", triples_json(rep.present)},
                                     {"missing", triples_json(rep.missing)},
                                     {"extra", triples_json(rep.extra)},
                                     {"coincident", coincident},
                                     {"degeneracy", to_string(actual)},
                                     {"stated_degeneracy", to_string(stated)},
                                     {"in_D", in_degeneracy_set(a)}};
    out.checks.add(prefix + "listed_triples_collinear", rep.missing.empty(),
                   std::to_string(rep.present.size()) + " of 19");
    out.checks.add(prefix + "no_other_collinear_triple", rep.extra.empty());
    out.checks.add(prefix + "points_distinct", rep.distinct());
    bool in_plane = true;
    for (const auto& p : pts) in_plane = in_plane && p[3].is_zero();
    out.checks.add(prefix + "points_in_plane_t0", in_plane);
    out.checks.add(prefix + "degeneracy_matches_statement", actual == stated,
                   "computed " + to_string(actual) + ", stated " + to_string(stated));
}

Outcome cmd_config(const std::string& a_text, const std::string& flavor) {
    return dispatch({a_text}, true, [&]<class F>(std::type_identity<F>) {
        Outcome out;
        config_payload(scalar<F>(a_text), parse_flavor(flavor), out);
        return out;
    });
}

// surface -----------------------------------------------------------------------

template <Field F>
void triple_point_checks(const MonoidSurface<F>& s, Checks& checks) {
    bool homogeneous = !s.poly.is_zero();
    for (const auto& [e, c] : s.poly.terms()) homogeneous = homogeneous && e[0] + e[1] + e[2] + e[3] == 4;
    checks.add("homogeneous_quartic", homogeneous);
    checks.add("triple_point_at_origin", s.poly.min_degree_in({0, 1, 2}) >= 3);
    checks.add("monoid_degree_in_t_is_1", s.poly.degree_in("t") == 1);
}

Outcome cmd_surface(const std::string& a_text, const std::optional<std::string>& b_text, const std::string& flavor) {
    std::vector<std::string> texts{a_text};
    if (b_text) texts.push_back(*b_text);
    return dispatch(texts, true, [&]<class F>(std::type_identity<F>) {
        Outcome out;
        const F a = scalar<F>(a_text);
        MonoidSurface<F> s;
        if (flavor == "rohn") {
            s = build_rohn<F>();
        } else if (flavor == "qa") {
            s = build_qa(a);
        } else {
            s = build_qab(a, b_text ? scalar<F>(*b_text) : F(1L));
        }
        out.result["surface"] = to_json(s);
        triple_point_checks(s, out.checks);
        if (s.flavor == SurfaceFlavor::Qab) {
            out.checks.add("t_coefficient_is_cubic", s.poly.derivative("t") == printed_cubic(a).in_ring(space_vars()));
        }
        if (s.flavor == SurfaceFlavor::Qa && is_eps_root(a)) {
            out.checks.add("proportional_to_q_prime", proportional(s.poly, q_prime<F>()));
        }
        return out;
    });
}

// lines -------------------------------------------------------------------------

template <Field F>
void lines_payload(const MonoidSurface<F>& s, Outcome& out) {
    const auto lines = all_lines(s);
    const auto inc = incidence_matrix(lines);
    Json js = Json::array();
    bool on = true;
    bool residual_avoid_o = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto j = to_json(lines[i]);
        j["index"] = i;
        js.push_back(std::move(j));
        on = on && line_on_surface(s, lines[i].line);
        if (!lines[i].through_origin()) residual_avoid_o = residual_avoid_o && !lines[i].line.contains(ProjPoint<F>::origin());
    }
    bool distinct = true;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) distinct = distinct && !(lines[i].line == lines[j].line);
    std::vector<int> counts;
    bool counts_ok = true;
    for (int i = 0; i < kNumPoints; ++i) {
        int n = 0;
        for (std::size_t j = kNumPoints; j < lines.size(); ++j) n += inc[static_cast<std::size_t>(i)][j];
        counts.push_back(n);
        counts_ok = counts_ok && n == ((i == 2 || i == 9 || i == 11) ? 4 : 5);
    }
    out.result["lines"] = js;
    out.result["count"] = lines.size();
    out.result["incidence"] = inc;
    out.result["origin_residual_counts"] = counts;
    out.checks.add("count_is_31", lines.size() == 31);
    out.checks.add("pairwise_distinct", distinct);
    out.checks.add("all_on_surface", on);
    out.checks.add("residual_lines_avoid_origin", residual_avoid_o);
    out.checks.add("origin_residual_counts", counts_ok, "4 for labels 2, 9, 11 and 5 otherwise");
    // every line is spanned by two points with coordinates in the base field
    out.checks.add("spanned_over_base_field", true, "field " + std::string(std::is_same_v<F, Rational> ? "Q" : std::is_same_v<F, QuadExt> ? "Q(eps)" : "Q(a)"));
}

Outcome cmd_lines(const std::string& a_text) {
    return dispatch({a_text}, true, [&]<class F>(std::type_identity<F>) {
        Outcome out;
        const F a = scalar<F>(a_text);
        out.result["a"] = a.to_string();
        lines_payload(build_qa(a), out);
        return out;
    });
}

// smooth ------------------------------------------------------------------------

template <Field F>
void smooth_payload(const MonoidSurface<F>& s, Outcome& out, const std::string& var = "l") {
    const auto rep = smoothness_certificate(s);
    Json js = Json::array();
    for (const auto& l : rep.lines) js.push_back({{"index", l.index}, {"gcd", l.gcd.to_string(var)}, {"lambda_squared", l.lambda_squared}});
    out.result["lines"] = js;
    out.result["certified"] = rep.certified;
    out.checks.add("gcd_is_lambda_squared_on_all_12_lines", rep.certified);
}

Outcome cmd_smooth(const std::optional<std::string>& a_text, const std::optional<std::string>& b_text, bool symbolic) {
    if (symbolic) {
        Outcome out;
        const QAB a(QA::generator());
        const QAB b = QAB::generator();
        out.result["a"] = "a";
        out.result["b"] = "b";
        smooth_payload(build_qab(a, b), out);
        const auto loc = singular_parameter_locus();
        out.result["singular_locus"] = {{"polynomial", loc.locus.to_string("a")},
                                        {"factors", loc.known_factors},
                                        {"unexplained", loc.unexplained.to_string("a")}};
        out.checks.add("singular_locus_within_excluded_factors", loc.unexplained.is_one());
        return out;
    }
    if (!a_text) throw UsageError("smooth needs --a or --symbolic");
    std::vector<std::string> texts{*a_text};
    if (b_text) texts.push_back(*b_text);
    return dispatch(texts, false, [&]<class F>(std::type_identity<F>) {
        Outcome out;
        const F a = scalar<F>(*a_text);
        const F b = b_text ? scalar<F>(*b_text) : F(1L);
        out.result["a"] = a.to_string();
        out.result["b"] = b.to_string();
        smooth_payload(build_qab(a, b), out);
        return out;
    });
}

// sextuple ----------------------------------------------------------------------

template <Field F>
void sextuple_checks(const MonoidSurface<F>& s, const Sextuple<F>& sx, Outcome& out) {
    const auto conv = is_convergent(sx);
    out.checks.add("convergent", conv.ok, conv.failure);
    out.checks.add("apex_is_origin", conv.apex && *conv.apex == ProjPoint<F>::origin());
    bool on = true;
    for (const auto& [p, q] : {std::pair{0, 1}, {2, 3}, {4, 5}, {0, 2}, {1, 4}, {3, 5}})
        on = on && line_on_surface(s, ProjLine<F>(sx[p], sx[q]));
    out.checks.add("six_joining_lines_on_surface", on);
    try {
        const auto f = aux_frame(sx);
        out.result["aux"] = {{"A", to_json(f.a)},   {"R1", to_json(f.r1)}, {"R2", to_json(f.r2)},
                             {"R3", to_json(f.r3)}, {"A1", to_json(f.a1)}, {"A2", to_json(f.a2)}};
        out.checks.add("A_A1_A2_collinear", collinear(f.a, f.a1, f.a2));
    } catch (const GeneralPositionError& e) {
        out.checks.add("aux_frame_defined", false, e.what());
    }
}

Outcome cmd_sextuple(const std::string& a_text, const std::string& triple_text) {
    const Triple t = parse_triple(triple_text);
    if (!detail::is_admissible(t)) throw UsageError("triple " + triple_text + " is not admissible");
    return dispatch({a_text}, true, [&]<class F>(std::type_identity<F>) {
        Outcome out;
        const auto s = build_qa(scalar<F>(a_text));
        const auto sx = standard_sextuple(s, t);
        out.result["sextuple"] = to_json(sx);
        sextuple_checks(s, sx, out);
        return out;
    });
}

// stab --------------------------------------------------------------------------

template <Field F>
void stab_payload(const F& a, unsigned threads, Outcome& out) {
    const auto st = stabilizer(a, threads);
    out.result["group"] = to_json(st.group);
    out.result["hits"] = triples_json(st.hits);
    out.checks.add("closure_added_nothing", st.group.closure_added == 0);
    const auto q = build_qa(a).poly;
    std::vector<std::pair<std::string, Projectivity<F>>> gens{{"generator_1", stabilizer_generator_1<F>()},
                                                              {"generator_2", stabilizer_generator_2<F>()}};
    if constexpr (std::is_same_v<F, QuadExt>) {
        if (is_eps_root(a)) gens.emplace_back("generator_eps", stabilizer_generator_eps<F>());
    }
    for (const auto& [name, g] : gens) {
        const bool fixes = surfaces_coincide(g.apply_form(q), q);
        out.checks.add(name + "_fixes_surface", fixes);
        if (fixes) out.checks.add(name + "_in_group", detail::find_element(st.group.elements, g).has_value());
    }
    const std::size_t expect = is_eps_root(a) ? 18 : 6;
    out.checks.add("order", st.group.elements.size() == expect, "expected " + std::to_string(expect));
}

Outcome cmd_stab(const std::string& a_text, unsigned threads) {
    if (field_of(a_text) == FieldKind::Symbolic) {
        Outcome out;
        const auto st = stabilizer_symbolic(threads);
        Json conds = Json::array();
        for (std::size_t i = 0; i < st.triples.size(); ++i) {
            if (st.conditions[i].kind == CoincidenceCondition::Kind::Never) continue;
            const auto& t = st.triples[i];
            conds.push_back({{"triple", {t[0], t[1], t[2]}}, {"condition", st.conditions[i].to_string()}});
        }
        out.result["conditions"] = conds;
        out.result["always"] = st.always;
        out.result["on_locus"] = st.on_locus;
        out.result["union_locus"] = st.union_locus.to_string("a");
        out.result["generic_group"] = to_json(st.generic_group);
        out.checks.add("always_count_is_6", st.always == 6);
        out.checks.add("generic_group_is_S3", st.generic_group.label == "S3");
        const UniPoly<Rational> eps_poly({Rational(1), Rational(-1), Rational(1)});
        out.checks.add("union_locus_is_a2_minus_a_plus_1", st.union_locus == eps_poly);
        return out;
    }
    return dispatch({a_text}, false, [&]<class F>(std::type_identity<F>) {
        Outcome out;
        const F a = scalar<F>(a_text);
        out.result["a"] = a.to_string();
        stab_payload(a, threads, out);
        return out;
    });
}

// equiv -------------------------------------------------------------------------

template <Field F>
void equiv_checks(const EquivalenceResult<F>& r, Checks& checks, const std::string& prefix = {}) {
    checks.add(prefix + "j_path_agrees_with_witness_path", r.agree());
    if (r.by_witness) checks.add(prefix + "witness_verified", r.witness_verified);
}

Outcome cmd_equiv(const std::string& a_text, const std::string& b_text, unsigned threads) {
    return dispatch({a_text, b_text}, false, [&]<class F>(std::type_identity<F>) {
        Outcome out;
        const auto r = equivalent(scalar<F>(a_text), scalar<F>(b_text), threads);
        out.result = to_json(r);
        equiv_checks(r, out.checks);
        return out;
    });
}

// jinv --------------------------------------------------------------------------

template <Field F>
void jinv_payload(const F& a, Outcome& out) {
    const F j = j_invariant(a);
    const auto orb = orbit(a);
    Json o = Json::array();
    bool constant = true;
    for (const auto& v : orb) {
        o.push_back(v.to_string());
        constant = constant && j_invariant(v) == j;
    }
    out.result["j"] = j.to_string();
    out.result["orbit"] = o;
    out.checks.add("j_constant_on_orbit", constant);
    out.checks.add("orbit_size_divides_6", 6 % orb.size() == 0, std::to_string(orb.size()));
}

Outcome cmd_jinv(const std::string& a_text) {
    return dispatch({a_text}, true, [&]<class F>(std::type_identity<F>) {
        Outcome out;
        const F a = scalar<F>(a_text);
        out.result["a"] = a.to_string();
        jinv_payload(a, out);
        return out;
    });
}

// verify-all --------------------------------------------------------------------

/// Every check of the suite that makes sense at a single parameter value.
template <Field F>
Outcome verify_all(const F& a, unsigned threads) {
    Outcome out;
    out.result["a"] = a.to_string();
    Json sections = Json::object();
    auto section = [&](const std::string& name, auto&& body) {
        Outcome sub;
        body(sub);
        for (const auto& c : sub.checks.json()) {
            Json cc = c;
            cc["name"] = name + "." + c["name"].get<std::string>();
            out.checks.add(cc["name"], cc["pass"], cc.value("detail", ""));
        }
        sections[name] = {{"pass", sub.checks.all()}, {"checks", sub.checks.json().size()}};
    };

    section("configuration", [&](Outcome& o) {
        for (const auto flavor : {Flavor::Original, Flavor::Normalized}) {
            const auto c = build_points(a, flavor);
            const auto rep = verify_collinearities(c);
            const std::string f = to_string(flavor) + ".";
            o.checks.add(f + "exactly_19_collinear_triples", rep.exact());
        }
    });
    section("interpolation", [&](Outcome& o) {
        const auto c = build_points(a, Flavor::Original);
        const auto cubic = cubic_through_points(c);
        o.checks.add("cubic_is_printed_cubic", proportional(cubic, printed_cubic(a)));
        const auto qs = quartic_system(c);
        o.checks.add("quartic_space_dimension_4", qs.dim == 4, std::to_string(qs.dim));
        o.checks.add("quartic_basis_spans", qs.basis_spans);
    });
    section("lines", [&](Outcome& o) { lines_payload(build_qa(a), o); });
    section("smoothness", [&](Outcome& o) { smooth_payload(build_qab(a, F(1L)), o); });
    section("sextuples", [&](Outcome& o) {
        const auto s = build_qa(a);
        const auto all = standard_sextuples(s);
        bool ok = true;
        for (const auto& sx : all) {
            const auto c = is_convergent(sx);
            ok = ok && c.ok && *c.apex == ProjPoint<F>::origin();
        }
        o.checks.add("all_720_convergent_at_origin", ok && all.size() == 720);
        bool aux = true;
        for (std::size_t i = 0; i < all.size(); i += 36) aux = aux && aux_collinearity_check(all[i]);
        o.checks.add("A_A1_A2_collinear_on_20_sextuples", aux);
        const auto base = base_sextuple<F>();
        const auto sx = standard_sextuple(s, {11, 10, 9});
        bool same = true;
        for (std::size_t i = 0; i < 6; ++i) same = same && sx[i] == base[i];
        o.checks.add("triple_11_10_9_is_base_sextuple", same);
    });
    section("b_independence", [&](Outcome& o) {
        const auto base = base_sextuple<F>();
        std::vector<MultiPoly<F>> images;
        for (const long b : {1L, 5L}) {
            const auto s = build_qab(a, F(b));
            const auto m = sextuple_projectivity(standard_sextuple(s, {0, 1, 3}), base);
            images.push_back(m.apply_form(s.poly));
        }
        o.checks.add("transported_surfaces_coincide", surfaces_coincide(images[0], images[1]));
    });
    section("stabilizer", [&](Outcome& o) { stab_payload(a, threads, o); });
    section("equivalence", [&](Outcome& o) {
        const EquivalenceSweep<F> sweep(a, threads);
        for (const auto& b : orbit(a)) {
            const auto r = sweep.test(b);
            o.checks.add("orbit_member_" + b.to_string() + "_equivalent", r.by_witness);
            equiv_checks(r, o.checks, b.to_string() + ".");
        }
    });
    section("j_invariant", [&](Outcome& o) { jinv_payload(a, o); });
    out.result["sections"] = sections;
    out.result["pass"] = out.checks.all();
    return out;
}

Outcome cmd_verify_all(const std::string& a_text, unsigned threads) {
    return dispatch({a_text}, false, [&]<class F>(std::type_identity<F>) { return verify_all(scalar<F>(a_text), threads); });
}

// output ------------------------------------------------------------------------

Json certificate(const std::string& command, const Json& params, const Outcome& out) {
    return {{"schema", 1},
            {"command", command},
            {"params", params},
            {"result", out.result},
            {"checks", out.checks.json()},
            {"version", kVersion},
            {"hash", fnv1a_hex(out.result.dump())}};
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_text(const Json& cert) {
    std::ostringstream s;
    s << "quartic31 " << cert["command"].get<std::string>();
    for (const auto& [k, v] : cert["params"].items()) s << " --" << k << " " << scalar_text(v);
    s << "\n";
    if (cert.contains("error")) {
        s << "error: " << cert["error"]["message"].get<std::string>() << "\n";
        return s.str();
    }
    s << "result:\n";
    for (const auto& [k, v] : cert["result"].items()) {
        if (v.is_array() && !v.empty() && v[0].is_object()) {
            s << "  " << k << ":\n";
            for (const auto& e : v) s << "    " << e.dump() << "\n";
        } else {
            s << "  " << k << ": " << scalar_text(v) << "\n";
        }
    }
    s << "checks:\n";
    for (const auto& c : cert["checks"]) {
        s << "  [" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>();
        if (c.contains("detail")) s << " (" << c["detail"].get<std::string>() << ")";
        s << "\n";
    }
    s << "version: " << cert["version"].get<std::string>() << "\nhash: " << cert["hash"].get<std::string>() << "\n";
    return s.str();
}

int emit(const Json& cert, bool json, const std::string& out_path) {
    const std::string text = json ? cert.dump(2) + "\n" : render_text(cert);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for quartic monoid surfaces with 31 lines", "quartic31"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::string out_path;
    unsigned threads = default_threads();
    app.add_flag("--json", json, "Emit the certificate as JSON");
    app.add_option("--out", out_path, "Write the certificate to a file");
    app.add_option("--threads", threads, "Worker threads (output does not depend on it)")->check(CLI::PositiveNumber);

    std::string a_text;
    std::optional<std::string> b_text;
    std::string b2_text;
    std::string flavor;
    std::string triple_text;
    bool symbolic = false;

    auto* config = app.add_subcommand("config", "Collinearity report for the twelve points");
    config->add_option("--a", a_text, "Parameter")->required();
    config->add_option("--flavor", flavor, "Point coordinates")->check(CLI::IsMember({"original", "normalized"}))->default_val("original");

    auto* surface = app.add_subcommand("surface", "Defining polynomial and triple-point check");
    surface->add_option("--a", a_text, "Parameter")->required();
    surface->add_option("--b", b_text, "Second parameter of Q(a,b)");
    surface->add_option("--flavor", flavor, "Surface family")->check(CLI::IsMember({"qab", "qa", "rohn"}))->default_val("qab");

    auto* lines = app.add_subcommand("lines", "The 31 lines of Q(a)");
    lines->add_option("--a", a_text, "Parameter")->required();

    auto* smooth = app.add_subcommand("smooth", "Smoothness certificate along the origin lines");
    std::optional<std::string> smooth_a;
    smooth->add_option("--a", smooth_a, "Parameter");
    smooth->add_option("--b", b_text, "Second parameter");
    smooth->add_flag("--symbolic", symbolic, "Certify over Q(a, b)");

    auto* sextuple = app.add_subcommand("sextuple", "Standard sextuple of an admissible triplet");
    sextuple->add_option("--a", a_text, "Parameter")->required();
    sextuple->add_option("--triple", triple_text, "Ordered triplet i,j,k")->required();

    auto* stab = app.add_subcommand("stab", "Projective stabilizer of Q(a)");
    stab->add_option("--a", a_text, "Parameter, eps, or symbolic")->required();

    auto* equiv = app.add_subcommand("equiv", "Projective equivalence of Q(a) and Q(b2)");
    equiv->add_option("--a", a_text, "First parameter")->required();
    equiv->add_option("--b2", b2_text, "Second parameter")->required();

    auto* jinv = app.add_subcommand("jinv", "j-invariant and anharmonic orbit");
    jinv->add_option("--a", a_text, "Parameter")->required();

    auto* verify = app.add_subcommand("verify-all", "All checks at one parameter");
    verify->add_option("--a", a_text, "Parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    Json params = Json::object();
    for (const auto* opt : sub->get_options()) {
        if (opt->get_name() == "--help" || opt->count() == 0) continue;
        const auto name = opt->get_name().substr(2);
        params[name] = opt->get_expected_max() == 0 ? Json(true) : Json(opt->as<std::string>());
    }

    try {
        Outcome out;
        if (command == "config") out = cmd_config(a_text, flavor);
        else if (command == "surface") out = cmd_surface(a_text, b_text, flavor);
        else if (command == "lines") out = cmd_lines(a_text);
        else if (command == "smooth") out = cmd_smooth(smooth_a, b_text, symbolic);
        else if (command == "sextuple") out = cmd_sextuple(a_text, triple_text);
        else if (command == "stab") out = cmd_stab(a_text, threads);
        else if (command == "equiv") out = cmd_equiv(a_text, b2_text, threads);
        else if (command == "jinv") out = cmd_jinv(a_text);
        else out = cmd_verify_all(a_text, threads);
        return emit(certificate(command, params, out), json, out_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateParameter& e) {
        const Json err{{"type", "degenerate_parameter"}, {"message", e.what()}};
        Json cert{{"schema", 1}, {"command", command}, {"params", params}, {"error", err}, {"version", kVersion},
                  {"hash", fnv1a_hex(err.dump())}};
        emit(cert, json, out_path);
        return 1;
    } catch (const quartic::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

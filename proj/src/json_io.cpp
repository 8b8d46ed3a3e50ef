#include "gtq/json_io.hpp"

#include "gtq/error.hpp"

namespace gtq {

namespace {

json rat_json(const Rat& r) { return rat_str(r); }

Rat rat_from(const json& j) {
    if (!j.is_string()) throw InputError("expected a rational as a string \"p/q\"");
    return parse_rat(j.get<std::string>());
}

int int_from(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string("expected an integer for ") + what);
    return j.get<int>();
}

}  // namespace

json tableau_to_json(const Tableau& t) {
    json rows = json::array();
    for (int m = 1; m <= t.rank(); ++m) {
        json row = json::array();
        for (int i = 1; i <= m; ++i) row.push_back(rat_json(t.entry(m, i)));
        rows.push_back(std::move(row));
    }
    return json{{"n", t.rank()}, {"rows", rows}};
}

Tableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw InputError("tableau JSON must be {\"n\": int, \"rows\": [[..], ..]} bottom-up");
    int n = int_from(j.at("n"), "n");
    const json& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw InputError("tableau JSON: \"rows\" must list n rows, row 1 (one entry) first");
    std::vector<std::vector<Rat>> out;
    for (int m = 1; m <= n; ++m) {
        const json& row = rows.at(m - 1);
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            throw InputError("tableau JSON: row " + std::to_string(m) + " must have " +
                             std::to_string(m) + " entries");
        std::vector<Rat> r;
        for (const auto& e : row) r.push_back(rat_from(e));
        out.push_back(std::move(r));
    }
    return Tableau(out);
}

json classification_to_json(const Classification& c) {
    const char* kind = c.kind == TabKind::Generic    ? "generic"
                       : c.kind == TabKind::Singular ? "singular"
                                                     : "critical";
    json pairs = json::array();
    for (const auto& p : c.pairs) pairs.push_back(json::array({p[0], p[1], p[2]}));
    return json{{"kind", kind}, {"pairs", pairs}};
}

Classification classification_from_json(const json& j) {
    Classification c;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "generic")
        c.kind = TabKind::Generic;
    else if (kind == "singular")
        c.kind = TabKind::Singular;
    else if (kind == "critical")
        c.kind = TabKind::Critical;
    else
        throw InputError("unknown classification kind: " + kind);
    for (const auto& p : j.at("pairs"))
        c.pairs.push_back({int_from(p.at(0), "pair row"), int_from(p.at(1), "pair position"),
                           int_from(p.at(2), "pair position")});
    return c;
}

json algebra_to_json(const AlgebraElement& a) {
    json terms = json::array();
    for (const auto& [mono, coeff] : a.terms()) {
        json factors = json::array();
        for (const auto& [g, e] : mono.factors())
            factors.push_back(json::array({g.i, g.j, static_cast<int>(e)}));
        terms.push_back(json{{"monomial", factors}, {"coeff", rat_json(coeff)}});
    }
    return json{{"n", a.rank()}, {"terms", terms}};
}

AlgebraElement algebra_from_json(const json& j) {
    int n = int_from(j.at("n"), "n");
    AlgebraElement out = AlgebraElement::scalar(n, 0);
    for (const auto& t : j.at("terms")) {
        Rat coeff = rat_from(t.at("coeff"));
        AlgebraElement term = AlgebraElement::scalar(n, coeff);
        for (const auto& f : t.at("monomial")) {
            int i = int_from(f.at(0), "generator row");
            int k = int_from(f.at(1), "generator column");
            int e = int_from(f.at(2), "exponent");
            if (e <= 0) throw InputError("exponent must be positive");
            for (int r = 0; r < e; ++r) term = term * AlgebraElement::generator(n, i, k);
        }
        out += term;
    }
    return out;
}

json upoly_to_json(const UPoly& p) {
    json terms = json::array();
    for (int du = 0; du <= std::max(p.degree_u(), 0); ++du)
        for (int dv = 0; dv <= std::max(p.degree_v(), 0); ++dv) {
            AlgebraElement c = p.coeff(du, dv);
            if (c == AlgebraElement::scalar(p.rank(), 0)) continue;
            terms.push_back(json{{"u", du}, {"v", dv}, {"element", algebra_to_json(c)}});
        }
    return json{{"n", p.rank()}, {"terms", terms}};
}

UPoly upoly_from_json(const json& j) {
    int n = int_from(j.at("n"), "n");
    UPoly out = UPoly::constant(AlgebraElement::scalar(n, 0));
    for (const auto& t : j.at("terms")) {
        int du = int_from(t.at("u"), "u degree");
        int dv = int_from(t.at("v"), "v degree");
        if (du < 0 || dv < 0) throw InputError("degrees must be nonnegative");
        AlgebraElement c = algebra_from_json(t.at("element"));
        UPoly term = UPoly::constant(c);
        for (int r = 0; r < du; ++r) term = term * UPoly::var_u(n);
        for (int r = 0; r < dv; ++r) term = term * UPoly::var_v(n);
        out += term;
    }
    return out;
}

json scalar_poly_to_json(const ScalarPoly& p) {
    json coeffs = json::array();
    for (int d = 0; d <= p.degree(); ++d) coeffs.push_back(rat_json(p.coeff(d)));
    if (coeffs.empty()) coeffs.push_back("0");
    return coeffs;
}

ScalarPoly scalar_poly_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("scalar polynomial must be a coefficient array");
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from(c));
    return ScalarPoly(coeffs);
}

json report_to_json(const RelationReport& r) {
    json instances = json::array();
    for (const auto& inst : r.instances) {
        json item{{"family", inst.family},
                  {"series", inst.series ? std::string(1, inst.series) : std::string("-")},
                  {"m", inst.m},
                  {"l", inst.l},
                  {"pass", inst.pass}};
        if (!inst.pass) item["residual"] = upoly_to_json(inst.residual);
        instances.push_back(std::move(item));
    }
    return json{{"n", r.n}, {"all_pass", r.all_pass()}, {"instances", instances}};
}

json window_to_json(const QuiverWindow& w) {
    json vertices = json::array();
    for (const auto& v : w.vertices()) {
        json alphas = json::array();
        for (const auto& a : v.alphas) alphas.push_back(scalar_poly_to_json(a));
        vertices.push_back(json{{"tableau", tableau_to_json(v.rep)}, {"alphas", alphas}});
    }
    json edges = json::array();
    for (const auto& e : w.edges())
        edges.push_back(json{{"kind", std::string(1, e.kind)},
                             {"m", e.m},
                             {"i", e.i},
                             {"point", rat_json(e.point)},
                             {"source", e.source},
                             {"target", e.target}});
    json boundary = json::array();
    for (const auto& b : w.boundary())
        boundary.push_back(json{{"kind", std::string(1, b.kind)},
                                {"m", b.m},
                                {"i", b.i},
                                {"point", rat_json(b.point)},
                                {"source", b.source},
                                {"reason", b.reason}});
    return json{{"root", tableau_to_json(w.root())},
                {"radius", w.radius()},
                {"vertices", vertices},
                {"edges", edges},
                {"boundary", boundary}};
}

QuiverWindow window_from_json(const json& j) {
    Tableau root = tableau_from_json(j.at("root"));
    int radius = int_from(j.at("radius"), "radius");
    QuiverWindow w(root, radius);
    if (window_to_json(w) != j) throw InputError("window JSON does not match its rebuilt window");
    return w;
}

json module_to_json(const QuiverWindow& w, const ModuleRep& rep) {
    json scalars = json::array();
    for (const auto& s : rep.edge_scalar) scalars.push_back(rat_json(s));
    json tree = json::array();
    for (int e : rep.tree_c_edges) tree.push_back(e);
    return json{{"window", window_to_json(w)}, {"edge_scalars", scalars}, {"tree_c_edges", tree}};
}

ModuleRep module_from_json(const QuiverWindow& w, const json& j) {
    ModuleRep rep;
    const json& scalars = j.at("edge_scalars");
    if (scalars.size() != w.edges().size())
        throw InputError("module JSON: edge scalar count does not match the window");
    for (const auto& s : scalars) rep.edge_scalar.push_back(rat_from(s));
    for (const auto& e : j.at("tree_c_edges")) rep.tree_c_edges.push_back(int_from(e, "tree edge"));
    return rep;
}

json probe_to_json(const ProbeReport& r) {
    json cycles = json::array();
    for (const auto& item : r.items)
        cycles.push_back(json{{"length", item.length},
                              {"reduced", item.reduced},
                              {"scalar", item.reduced ? json(rat_json(item.scalar)) : json()}});
    return json{{"seed", r.seed},
                {"samples", r.samples},
                {"max_len", r.max_len},
                {"pass", r.pass},
                {"cycles", cycles}};
}

}  // namespace gtq

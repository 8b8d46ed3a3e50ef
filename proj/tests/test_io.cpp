#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gtq/drinfeld.hpp"
#include "gtq/error.hpp"
#include "gtq/json_io.hpp"

using namespace gtq;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(parse_rat("-3/6")) == "-1/2");
    CHECK(rat_str(parse_rat("2/4")) == "1/2");
    CHECK(rat_str(parse_rat("7")) == "7");
    CHECK(rat_str(parse_rat("-0")) == "0");
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("1.5"), InputError);
    CHECK_THROWS_AS(parse_rat(""), InputError);
    CHECK_THROWS_AS(parse_rat("3/-2"), InputError);
    CHECK_THROWS_AS(parse_rat("a"), InputError);
    CHECK(rat_frac(parse_rat("-3/2")) == Rat(1) / 2);
    CHECK(rat_is_integer(parse_rat("-4/2")));
}

TEST_CASE("tableau round trip") {
    Tableau t({{Rat(1) / 7}, {Rat(1) / 3, Rat(-1) / 5}, {Rat(1), Rat(0), Rat(-1)}});
    json j = tableau_to_json(t);
    CHECK(tableau_from_json(j) == t);
    CHECK(json::parse(j.dump()) == j);
    CHECK(j["rows"][0][0] == "1/7");

    CHECK_THROWS_AS(tableau_from_json(json{{"n", 2}, {"rows", {{"1"}}}}), InputError);
    CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"n":1,"rows":[[0.5]]})")), InputError);
    CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"rows":[["1"]]})")), InputError);
}

TEST_CASE("classification round trip") {
    Tableau sing({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    Classification c = classify_tableau(sing);
    json j = classification_to_json(c);
    CHECK(j["kind"] == "singular");
    CHECK(j["pairs"] == json::parse("[[2,1,2]]"));
    Classification back = classification_from_json(j);
    CHECK(back.kind == c.kind);
    CHECK(back.pairs == c.pairs);
}

TEST_CASE("algebra element round trip") {
    AlgebraElement a = drinfeld_polynomial(3, DrinfeldKind::B, 2).coeff(0);
    json j = algebra_to_json(a);
    CHECK(algebra_from_json(j) == a);
    CHECK(json::parse(j.dump()) == j);
    CHECK(algebra_from_json(algebra_to_json(AlgebraElement(2))) == AlgebraElement(2));
}

TEST_CASE("upoly round trip") {
    UPoly b2 = drinfeld_polynomial(3, DrinfeldKind::B, 2);
    json j = upoly_to_json(b2);
    CHECK(upoly_from_json(j) == b2);
    UPoly mixed = UPoly::var_u(2) * UPoly::var_v(2) + UPoly::constant(
        AlgebraElement::generator(2, 2, 1));
    CHECK(upoly_from_json(upoly_to_json(mixed)) == mixed);
}

TEST_CASE("scalar poly round trip") {
    ScalarPoly p({Rat(-3), Rat(2), Rat(1)});
    CHECK(scalar_poly_from_json(scalar_poly_to_json(p)) == p);
    CHECK(scalar_poly_to_json(ScalarPoly()) == json::array({"0"}));
}

TEST_CASE("verify report serialization") {
    RelationReport r = verify_nt_relations(2);
    json j = report_to_json(r);
    CHECK(j["n"] == 2);
    CHECK(j["all_pass"] == true);
    CHECK(j["instances"].size() == 9);
    for (const auto& inst : j["instances"]) {
        CHECK(inst["pass"] == true);
        CHECK(!inst.contains("residual"));
    }
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("window round trip") {
    Tableau L({{Rat(1) / 2}, {Rat(3), Rat(-1)}});
    QuiverWindow w(L, 1);
    json j = window_to_json(w);
    CHECK(j["vertices"].size() == 3);
    CHECK(j["edges"].size() == 4);
    QuiverWindow back = window_from_json(j);
    CHECK(window_to_json(back) == j);
    CHECK(json::parse(j.dump()) == j);

    json tampered = j;
    tampered["edges"][0]["point"] = "9";
    CHECK_THROWS_AS(window_from_json(tampered), InputError);
}

TEST_CASE("module round trip") {
    Tableau L({{Rat(1) / 2}, {Rat(3), Rat(-1)}});
    QuiverWindow w(L, 1);
    ModuleRep rep = solve_module(w);
    json j = module_to_json(w, rep);
    ModuleRep back = module_from_json(w, j["edge_scalars"].is_array()
                                             ? j
                                             : throw InputError("missing scalars"));
    CHECK(back.edge_scalar == rep.edge_scalar);
    CHECK(back.tree_c_edges == rep.tree_c_edges);
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("probe report serialization") {
    Tableau L({{Rat(1) / 2}, {Rat(3), Rat(-1)}});
    QuiverWindow w(L, 1);
    ProbeReport r = cyclic_dimension_probe(w, 0, 3, 4, 11);
    json j = probe_to_json(r);
    CHECK(j["seed"] == 11);
    CHECK(j["pass"] == true);
    CHECK(j["cycles"].size() == 3);
    CHECK(json::parse(j.dump()) == j);
}

#pragma once

#include "json.hpp"

#include "gtq/drinfeld.hpp"
#include "gtq/quiver.hpp"
#include "gtq/tableau.hpp"

namespace gtq {

using json = nlohmann::json;

json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

json classification_to_json(const Classification& c);
Classification classification_from_json(const json& j);

json algebra_to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const json& j);

json upoly_to_json(const UPoly& p);
UPoly upoly_from_json(const json& j);

json scalar_poly_to_json(const ScalarPoly& p);
ScalarPoly scalar_poly_from_json(const json& j);

json report_to_json(const RelationReport& r);

json window_to_json(const QuiverWindow& w);
// rebuilds from root and radius, then checks the listed vertices and edges match
QuiverWindow window_from_json(const json& j);

json module_to_json(const QuiverWindow& w, const ModuleRep& rep);
ModuleRep module_from_json(const QuiverWindow& w, const json& j);

json probe_to_json(const ProbeReport& r);

}  // namespace gtq

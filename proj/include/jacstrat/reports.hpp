#pragma once

#include <string>

#include "json.hpp"

#include "jacstrat/delaunay.hpp"
#include "jacstrat/polarization.hpp"
#include "jacstrat/stratification.hpp"

// Report builders shared by the CLI and the tests. All JSON reports carry
// "schema_version": 1 and serialize with sorted keys, so identical inputs
// produce byte-identical output.

namespace jacstrat::reports {

inline constexpr int kSchemaVersion = 1;

nlohmann::json info_report(const CurveGraph& g);
nlohmann::json strata_report(const CurveGraph& g, const Stratification& s, bool full);
nlohmann::json cells_report(const CycleLattice& lattice, const CellEnumeration& cells, bool full);
nlohmann::json compare_report(const CurveGraph& g, const CompareReport& cmp);
nlohmann::json check_report(const CurveGraph& g, const GeneratingSubgraph& sub,
                            const NormalizedMultidegree& e);
nlohmann::json stability_report(const CurveGraph& g, const SheafModel& f, const Polarization& pol);
nlohmann::json phi_report(const CurveGraph& g, const PhiInputs& in, const PhiVector& phi);

std::string render_table(const nlohmann::json& report);

}  // namespace jacstrat::reports

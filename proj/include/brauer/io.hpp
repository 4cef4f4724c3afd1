#pragma once

// JSON (de)serialization for the CLI wire formats.

#include "brauer/bar.hpp"
#include "brauer/complex.hpp"
#include "brauer/element.hpp"
#include "brauer/homology.hpp"
#include "brauer/modules.hpp"

#include <json.hpp>

namespace brauer {

using json = nlohmann::json;

json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json element_to_json(const Element& a);
Element element_from_json(const json& j);

json box_diagram_to_json(const BoxDiagram& b);
BoxDiagram box_diagram_from_json(const json& j);

json homology_row_to_json(int degree, const HomologyGroup& g);
json complex_to_json(const ChainComplex& c, bool with_labels = false,
                     const std::vector<std::vector<std::string>>* labels = nullptr);

json tor_result_to_json(const TorResult& t);

struct SuiteReport;
json suite_report_to_json(const SuiteReport& rep);

}  // namespace brauer

#pragma once

// JSON serialization: fronts, Dgas, disk dumps, flow trees, reports.

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "legendrian/dga.hpp"
#include "legendrian/disks.hpp"
#include "legendrian/flowtree.hpp"
#include "legendrian/front.hpp"

namespace legendrian {

nlohmann::json front_to_json(const FrontDiagram& d);
FrontDiagram front_from_json(const nlohmann::json& j);
// accepts either the JSON {"events": [...], "basepoint": ...} or a plain
// event word
FrontDiagram front_from_text(const std::string& text);

nlohmann::json dga_to_json(const Dga& A);
Dga dga_from_json(const nlohmann::json& j);

nlohmann::json disks_to_json(const LagrangianDiagram& d, const DiskSet& disks);
nlohmann::json trees_to_json(const std::vector<FlowTree>& trees);

}  // namespace legendrian

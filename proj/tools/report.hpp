#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "bordism/manifolds.hpp"
#include "bordism/primitives.hpp"

namespace bordism::report {

using nlohmann::ordered_json;

ordered_json partitions_json(const PartitionCombination& c);
PartitionCombination partitions_from_json(const ordered_json& j);

ordered_json generators_json(Spectrum s, int max_degree, const std::vector<GeneratorRecord>& gens);
// inverse of generators_json; returns the records and fills spectrum/max_degree
std::vector<GeneratorRecord> generators_from_json(const ordered_json& j, Spectrum& s, int& max_degree);

ordered_json presentation_json(const PresentationReport& p);

std::string generators_text(const std::vector<GeneratorRecord>& gens);
std::string presentation_text(const PresentationReport& p);

}  // namespace bordism::report

#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "polydescent/blaschke.hpp"
#include "polydescent/crofton.hpp"
#include "polydescent/level_set.hpp"
#include "polydescent/tree.hpp"

namespace polydescent {

using json = nlohmann::json;

/// {"roots":[{"re":..,"im":..,"mult":..},...]}. Throws InvalidInput on schema errors.
FactoredPolynomial polynomial_from_json(const json& j);
json to_json(const FactoredPolynomial& poly);

/// {"zeros":[{"re":..,"im":..,"mult":..},...]}.
BlaschkeProduct blaschke_from_json(const json& j);
json to_json(const BlaschkeProduct& b);

json to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const DescentPath& path);
DescentPath path_from_json(const json& j);

json to_json(const DescentTree& tree);
json to_json(const TreeReport& report);
json to_json(const BoundReport& report);
json to_json(const ComponentReport& report);
json to_json(const SeparationReport& report);
json to_json(const IntegralReport& report);
json to_json(const BlaschkeReport& report);

/// Throws InvalidInput when the file is missing or not valid JSON.
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace polydescent

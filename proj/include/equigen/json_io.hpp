// JSON schemas for character tables, surface cohomology, nodal-curve data,
// stratified families, and class-function vectors. See README for the field
// reference.
#pragma once

#include "equigen/character_table.hpp"
#include "equigen/class_function.hpp"
#include "equigen/goettsche.hpp"
#include "equigen/jacobian.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace equigen {

using Json = nlohmann::json;

TablePtr table_from_json(const Json& j);
Json table_to_json(const CharacterTable& t);

// Registry key (TRIVIAL, Z2..Z8, PSL27, A5, A6, S5) or a path to a table
// JSON file.
TablePtr resolve_table(const std::string& name_or_path);

SurfaceCohomology surface_from_json(const Json& j);
NodalCurveData curve_from_json(const Json& j);
std::vector<StratumSpec> strata_from_json(const Json& j, TablePtr& group_out);

ClassFunction class_function_from_json(const Json& j, const TablePtr& table);
struct NamedBasis {
    std::vector<std::string> names;
    std::vector<ClassFunction> elements;
};
NamedBasis basis_from_json(const Json& j);
ClassFunction target_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace equigen

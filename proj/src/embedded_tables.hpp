#pragma once

#include <string>

namespace equigen::detail {

// JSON text of a built-in non-cyclic table, or nullptr.
const char* embedded_table_json(const std::string& name);

}  // namespace equigen::detail

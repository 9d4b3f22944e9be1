// Deterministic plain-text formatting shared by the CLI and tests.
#pragma once

#include "equigen/class_function.hpp"
#include "equigen/rep_series.hpp"

#include <string>
#include <vector>

namespace equigen {

// "χ1+χ5+2χ6", "2χ1-2χ2", "0"
std::string format_decomposition(const std::vector<Integer>& multiplicities);
std::string format_decomposition(const ClassFunction& f);

// "(24, 8)" raw class values; throws if a value is irrational
std::string format_class_values(const ClassFunction& f);

// per-coefficient graded decomposition, one line per t-power
std::string format_rep_series(const RepSeries& s);

std::string format_eigenvalues(const std::vector<long>& multiset, long order);

}  // namespace equigen

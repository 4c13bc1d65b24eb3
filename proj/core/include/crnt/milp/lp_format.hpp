#pragma once

#include <string>
#include <vector>

#include "crnt/milp/model.hpp"

namespace crnt::milp {

// CPLEX LP text: Minimize / Subject To / Bounds / Binary (/ General) / End.
// Rows whose data are not all finite decimals are scaled to integers.
std::string to_lp_string(const Model& model);
void export_lp(const Model& model, const std::string& path);

// Deterministically sanitized, unique column names as written to LP files.
std::vector<std::string> lp_names(const Model& model);

}  // namespace crnt::milp

#pragma once

#include <string>
#include <vector>

#include "onestreet/dataset.hpp"

namespace onestreet {

// Self-contained SVG scatter of (range advantage, optimal defense frequency)
// on [0,1] x [0,1], with one dashed MDF reference line per distinct bet size.
// Throws ValidationError("no rows") on an empty dataset.
std::string scatter_svg(const std::vector<DatasetRow>& rows);

// Two-column export for external plotting tools; header "ra,odf".
std::string scatter_csv(const std::vector<DatasetRow>& rows);

}  // namespace onestreet

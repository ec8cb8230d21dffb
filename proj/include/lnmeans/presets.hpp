#pragma once

#include <array>
#include <span>

#include "lnmeans/simulation.hpp"
#include "lnmeans/summary.hpp"

namespace lnmeans {

// Built-in reproduction targets: the cloud-seeding rainfall example and
// the two published simulation grids this toolkit re-runs. Reference
// rates are the published rejection counts divided by 10^4.

struct ReferenceRow {
    Scenario scenario;
    std::array<double, 3> reference_rate;  // gpv, km, zscore
};

// Log-scale summaries of the 52-cloud rainfall data (26 seeded,
// 26 unseeded).
LogSummary rainfall_seeded();
LogSummary rainfall_unseeded();

// Published one-sided p-values for the rainfall comparison, in method
// order gpv, km, zscore.
std::array<double, 3> rainfall_reference();

// The 28-row size grid (mu2 = 0 throughout; every row has equal true
// means) and the 28-row power grid.
std::span<const ReferenceRow> size_grid();
std::span<const ReferenceRow> power_grid();

// Rows used as reproduction anchors: indices into the grids above.
std::span<const int> size_anchor_rows();
std::span<const int> power_anchor_rows();

}  // namespace lnmeans

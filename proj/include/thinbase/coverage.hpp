#pragma once

#include "thinbase/window_bitmap.hpp"

namespace thinbase {

/// Outcome of checking a target interval against a membership bitmap.
/// covered holds iff gap_count == 0; gaps lists maximal missing runs in
/// order, truncated to max_recorded_gaps (gap_count is always the full total).
struct CoverageReport {
    Interval target;
    bool covered = false;
    std::vector<Interval> gaps;
    std::size_t gap_count = 0;
    bool gaps_truncated = false;
};

CoverageReport coverage_report(const WindowBitmap& bm, const Interval& target,
                               std::size_t max_recorded_gaps = 64);

}  // namespace thinbase

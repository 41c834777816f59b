#include "thinbase/coverage.hpp"

namespace thinbase {

CoverageReport coverage_report(const WindowBitmap& bm, const Interval& target,
                               std::size_t max_recorded_gaps) {
    CoverageReport rep{target, true, {}, 0, false};
    if (target.empty()) return rep;
    auto lo = to_u64(target.lo);
    auto hi = to_u64(target.last());
    if (!lo || !hi || *hi > bm.top())
        throw std::invalid_argument("coverage target outside bitmap window");

    std::uint64_t n = *lo;
    while (n <= *hi) {
        // skip set bits, word-wise where possible
        if ((n & 63) == 0) {
            while (n + 63 <= *hi && bm.words()[n >> 6] == ~std::uint64_t(0)) n += 64;
        }
        if (n > *hi) break;
        if (bm.test(n)) {
            ++n;
            continue;
        }
        std::uint64_t run_lo = n;
        while (n <= *hi && !bm.test(n)) ++n;
        ++rep.gap_count;
        if (rep.gaps.size() < max_recorded_gaps)
            rep.gaps.push_back(Interval::closed(Natural(static_cast<unsigned long>(run_lo)),
                                                Natural(static_cast<unsigned long>(n - 1))));
        else
            rep.gaps_truncated = true;
    }
    rep.covered = rep.gap_count == 0;
    return rep;
}

}  // namespace thinbase

#pragma once

#include "thinbase/sequence.hpp"

namespace thinbase {

/// Parameters of the perturbed g-adic block C(v, L) for order h >= 3.
struct BlockSpec {
    unsigned order;  // h >= 3
    Natural v;       // >= 1
    Natural L;       // >= h
    Natural g;       // derived, 2^{h+1} * v

    BlockSpec(unsigned h, Natural v_, Natural L_);
};

/// The four digit families of C(v, L), sorted. Cardinality is
/// g + (h-2)g + 2^h v + Lg (the families are pairwise disjoint).
MonotoneSequence cassels_block(const BlockSpec& spec);

/// One shifted block A(j) = p_j + C(v_j, L) with its h-fold coverage interval.
struct OrderHBlock {
    unsigned long j;
    Natural v;             // 2^j
    Natural g;             // 2^{j+h+1}
    Natural p;             // p_j
    Interval coverage;     // I(j), half-open
    MonotoneSequence elements;
};

struct OrderHBasis {
    unsigned order;        // h
    Natural L;             // 2^{2h} - h - 1
    Natural base_top;      // A(-1) = [0, 2^{h^2+2h}]
    Interval base_coverage;  // I(-1) = [0, h*2^{h^2+2h}], closed
    std::vector<OrderHBlock> blocks;
    MonotoneSequence elements;  // [0, base_top] union all blocks
};

/// Builds A(-1) and blocks A(0)..A(j_max), asserting that consecutive
/// coverage intervals overlap (a failure indicates an implementation bug,
/// not bad input) and that p_j < g_j^h.
OrderHBasis cassels_order_h(unsigned h, unsigned long j_max);

}  // namespace thinbase

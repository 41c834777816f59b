#pragma once

#include "thinbase/window_bitmap.hpp"

namespace thinbase {

struct KernelOptions {
    /// Upper bound on window size in bits (N+1 must not exceed it).
    std::uint64_t max_window_bits = std::uint64_t(1) << 31;
};

/// Membership bitmap of A over [0, N].
WindowBitmap base_bitmap(const MonotoneSequence& A, std::uint64_t window_top);

/// Exact h-fold sumset of A over [0, N]: bit n set iff n is a sum of exactly
/// h elements of A (repetition allowed). Computed by h-1 shifted-OR passes;
/// elements above N cannot contribute and are dropped up front.
WindowBitmap hfold_window(const MonotoneSequence& A, unsigned h, std::uint64_t window_top,
                          const KernelOptions& opts = {});

/// (A + B) over [0, N].
WindowBitmap pair_sumset_window(const MonotoneSequence& A, const MonotoneSequence& B,
                                std::uint64_t window_top, const KernelOptions& opts = {});

/// Brute-force oracle for hfold_window: explicit enumeration of all h-element
/// multisets. Guard: C(|A|+h-1, h) <= 10^7.
WindowBitmap naive_hfold(const MonotoneSequence& A, unsigned h, std::uint64_t window_top);

/// Number of h-element multisets of A summing to n. Same guard as naive_hfold.
Natural representation_count(const MonotoneSequence& A, unsigned h, const Natural& n);

}  // namespace thinbase

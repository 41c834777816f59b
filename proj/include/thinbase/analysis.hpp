#pragma once

#include <optional>

#include "thinbase/cassels2.hpp"
#include "thinbase/rootratio.hpp"
#include "thinbase/sequence.hpp"

namespace thinbase {

/// Counting function A(x) = |A intersect [1, x]|. Excludes 0 by definition.
Natural counting(const MonotoneSequence& A, const Natural& x);

enum class GapNorm {
    by_power,  // (a_{k+1} - a_k) / a_k^{(h-1)/h}
    by_index,  // (a_{k+1} - a_k) / k
};

/// Spacing statistic at position k of the raw sequence (0-based; for the
/// basis constructions here a_0 = 0, matching the theorems' indexing).
/// by_power needs a_k > 0, by_index needs k >= 1.
RootRatio gap_statistic(const MonotoneSequence& A, unsigned h, std::size_t k, GapNorm norm);

struct CountingSample {
    Natural x;
    Natural count;    // A(x)
    RootRatio ratio;  // A(x) / x^{1/h}
};

struct ElementRatio {
    std::size_t k;  // 1-based over positive elements
    Natural a_k;
    Rational ratio;  // a_k / k^h, exact
};

struct GapSample {
    std::size_t index;
    RootRatio value;
};

struct GrowthMetrics {
    unsigned h = 2;
    std::vector<CountingSample> samples;
    std::vector<ElementRatio> element_ratios;
    std::vector<GapSample> power_gaps;
    std::vector<GapSample> index_gaps;
};

/// Counting samples at the given xs plus per-element ratios and both gap
/// statistics over the whole prefix.
GrowthMetrics ratio_report(const MonotoneSequence& A, unsigned h,
                           const std::vector<Natural>& sample_xs);

/// max over integer x in [1, x_max] of A(x)/x^{1/h}; the maximum of a run
/// with constant A(x) sits at its left end, so only element positions are
/// inspected. A must contain a positive element <= x_max.
RootRatio max_counting_ratio(const MonotoneSequence& A, unsigned h, const Natural& x_max);

/// min over k >= 1 of a_k/k^h across positive elements a_k <= x_max.
Rational min_element_ratio(const MonotoneSequence& A, unsigned h, const Natural& x_max);

/// Minimum gap statistic over raw indices [from, to] (inclusive); indices
/// where the statistic is undefined (a_k = 0 under by_power) are skipped.
RootRatio min_gap_statistic(const MonotoneSequence& A, unsigned h, GapNorm norm,
                            std::size_t from, std::size_t to);

struct Thin1Result {
    bool ok = false;
    std::optional<Natural> first_violation;
};

/// Checks A(n) > (h! (n+1-n0))^{1/h} - h for every n in [n0, N], exactly.
/// Caller must have verified that hA covers [n0, N].
Thin1Result thin1_check(const MonotoneSequence& A, unsigned h, const Natural& n0,
                        const Natural& N);

/// Exact (q_1 + ... + q_k) / q_k for 1-based k <= |q|.
Rational partial_sum_ratio(const std::vector<Natural>& q, std::size_t k);

/// Closed form a_n = Q_k + (n - M_k) q_k for M_k <= n <= M_{K+1} (cas1).
Natural cassels_element(const CasselsChain& chain, const Natural& n);

/// Closed form A(x) = M_k + floor((x - Q_k)/q_k) for 0 <= x <= Q_{K+1} (cas2).
Natural cassels_count(const CasselsChain& chain, const Natural& x);

}  // namespace thinbase

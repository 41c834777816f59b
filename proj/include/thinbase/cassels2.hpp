#pragma once

#include <string>
#include <vector>

#include "thinbase/sequence.hpp"

namespace thinbase {

/// Parameters of the arithmetic-progression block construction of order 2.
/// q and m are 1-based in the theorem; stored 0-based here (q[0] is q_1).
/// Hypotheses AP1..AP4 are checked for indices 2 <= i <= block_count+1;
/// supply K+2 entries of each list to cover the whole range (conditions
/// whose indices fall past the supplied prefixes cannot be checked).
struct CasselsSpec2 {
    std::vector<Natural> q;
    std::vector<Natural> m;
    std::size_t block_count = 0;  // K

    CasselsSpec2(std::vector<Natural> q_, std::vector<Natural> m_, std::size_t K);
};

struct Violation {
    std::string condition;  // "AP1".."AP4" (or "C2-a"/"C2-b" from the order-2 wrapper)
    std::size_t index = 0;  // the i of the failing hypothesis instance
    std::string detail;
};

/// Empty iff AP1..AP4 all hold on 2 <= i <= K+1. Violations are data, not errors.
std::vector<Violation> validate_cassels(const std::vector<Natural>& q,
                                        const std::vector<Natural>& m, std::size_t K);

/// Q_k, M_k tables, the progression blocks A_k = Q_k + q_k*[0,m_k] for
/// k = 1..K, and their sorted union. Q and M are stored with Q[k-1] = Q_k,
/// so both have K+1 entries ending at Q_{K+1}, M_{K+1}.
struct CasselsChain {
    CasselsSpec2 spec;
    std::vector<Natural> Q;
    std::vector<Natural> M;
    std::vector<Progression> blocks;
    MonotoneSequence elements;
};

/// Throws hypothesis_error with the validator's report if any AP condition fails.
CasselsChain cassels_progressions(const CasselsSpec2& spec);

/// Order-2 specialization m_i = q_{i+1} + q_{i+2}; q must supply at least
/// K+2 entries (K+4 to check the full hypothesis range). Violations are
/// reported with the C2 condition names.
CasselsChain cassels_order2(const std::vector<Natural>& q, std::size_t K);

std::vector<Violation> validate_cassels_order2(const std::vector<Natural>& q, std::size_t K);

/// First `count` Fibonacci numbers from q_1 = q_2 = 1; count >= 2.
std::vector<Natural> fibonacci_q(std::size_t count);

}  // namespace thinbase

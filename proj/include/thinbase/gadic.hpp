#pragma once

#include "thinbase/sequence.hpp"

namespace thinbase {

/// Digit-restricted g-adic component: all sums of e_w * g^w over finite
/// exponent subsets F of W with digits e_w in [1, g-1], truncated at bound.
struct GAdicSpec {
    unsigned radix = 2;          // g >= 2
    MonotoneSequence exponents;  // W, nonempty
    Natural bound;

    GAdicSpec(unsigned g, MonotoneSequence W, Natural bound_);
};

MonotoneSequence g_adic_component(const GAdicSpec& spec);

/// Thin basis of order h from powers of 2 with exponents in residue classes
/// mod h, truncated at bound.
MonotoneSequence raikov_stohr(unsigned h, const Natural& bound);

/// Exponent partition for the radix-g order-h construction. Parts may
/// overlap; together they must cover every exponent w with g^w <= bound.
struct PartitionSpec {
    unsigned radix = 2;
    unsigned order = 2;                        // h >= 2
    std::vector<MonotoneSequence> parts;       // exactly h exponent sets
    Natural bound;

    PartitionSpec(unsigned g, unsigned h, std::vector<MonotoneSequence> parts_, Natural bound_);

    /// Residue-class parts: part i holds exponents == i (mod h), up to
    /// floor(log_g bound).
    static PartitionSpec residues(unsigned g, unsigned h, Natural bound);
};

/// Union of the per-part g-adic components. Throws hypothesis_error if some
/// needed exponent is in no part.
MonotoneSequence jia_nathanson(const PartitionSpec& spec);

/// Exponents of W_i = {i, h+i, 2h+i, ...} not exceeding max_exponent.
MonotoneSequence residue_exponents(unsigned residue, unsigned modulus, unsigned long max_exponent);

}  // namespace thinbase

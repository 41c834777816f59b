#pragma once

#include "thinbase/sequence.hpp"

namespace thinbase {

/// Parameters for embedding a regularly spaced sequence into one of
/// asymptotically polynomial growth (degree h, leading constant (gamma/h)^h).
struct EmbedSpec {
    unsigned order;    // h >= 2
    Rational gamma;    // > 0, must stay below the source's gap statistic
    MonotoneSequence source;
    std::size_t burn_in = 0;  // gap-statistic indices below this are not enforced

    EmbedSpec(unsigned h, Rational gamma_, MonotoneSequence source_, std::size_t burn_in_ = 0);
};

struct EmbedResult {
    MonotoneSequence supersequence;  // C
    MonotoneSequence grid;           // b, up to one step past max(source)
    std::size_t K = 0;  // first grid index with at most one source element per later interval
    std::size_t L = 0;  // a_L <= b_K < a_{L+1} (index into source)
};

/// Strictly increasing integer grid b_k = nearest integer to (gamma k / h)^h,
/// repaired by b_k := max(b_k, b_{k-1}+1). Ties round up; exact rational
/// arithmetic throughout.
MonotoneSequence embedding_grid(unsigned h, const Rational& gamma, std::size_t count);

/// Builds the supersequence C: C follows source up to b_K, then takes one
/// element per grid interval (b_{K+i-1}, b_{K+i}], preferring the source
/// element when the interval holds one. Throws hypothesis_error if the
/// source's prefix gap statistic (a_{k+1}-a_k)/a_k^{(h-1)/h} falls to gamma
/// or below after burn_in (signalling gamma >= alpha).
EmbedResult embed_polynomial(const EmbedSpec& spec);

}  // namespace thinbase

#include <doctest.h>

#include "test_util.hpp"
#include "thinbase/cassels2.hpp"
#include "thinbase/embed.hpp"

using namespace thinbase;
using testutil::seq;

namespace {

bool is_supersequence(const MonotoneSequence& big, const MonotoneSequence& small) {
    for (const Natural& a : small)
        if (!big.contains(a)) return false;
    return true;
}

}  // namespace

TEST_CASE("embedding_grid") {
    // gamma=2, h=2: ideal grid is k^2 exactly
    MonotoneSequence b = embedding_grid(2, Rational(2), 6);
    CHECK(b == seq({0, 1, 4, 9, 16, 25}));
    // gamma=1/8, h=2: the parabola k^2/256 starts below the integers, so the
    // monotonicity repair produces consecutive values
    MonotoneSequence small = embedding_grid(2, Rational(1, 8), 5);
    CHECK(small == seq({0, 1, 2, 3, 4}));
    // strictly increasing by type; rounding is nearest with ties up
    MonotoneSequence g3 = embedding_grid(3, Rational(3, 2), 8);
    for (std::size_t k = 0; k + 1 < g3.size(); ++k) CHECK(g3[k] < g3[k + 1]);
    CHECK(g3[6] == 27);  // (3/2 * 6 / 3)^3
}

TEST_CASE("embed keeps the source inside a sparse-grid instance") {
    // source on the grid: every fourth grid point of the same gamma; each
    // interval then holds at most one source element and the tail of C is
    // exactly the grid tail
    const Rational gamma(1, 2);
    MonotoneSequence grid = embedding_grid(2, gamma, 200);
    std::vector<Natural> src;
    for (std::size_t k = 8; k < 120; k += 4) src.push_back(grid[k]);
    MonotoneSequence source = MonotoneSequence::from_sorted(src);

    EmbedResult res = embed_polynomial(EmbedSpec(2, gamma, source));
    CHECK(is_supersequence(res.supersequence, source));
    // every non-source element of C is a grid point
    for (const Natural& c : res.supersequence)
        if (!source.contains(c)) CHECK(res.grid.contains(c));
}

TEST_CASE("embed on the Fibonacci-Cassels prefix") {
    CasselsChain chain = cassels_order2(fibonacci_q(14), 10);
    const auto& A = chain.elements;
    EmbedResult res = embed_polynomial(EmbedSpec(2, Rational(1, 8), A));

    CHECK(is_supersequence(res.supersequence, A));
    CHECK(res.supersequence.size() > A.size());  // strict
    // C restricted to [0, b_K] is exactly the source prefix there
    const Natural& bK = res.grid[res.K];
    CHECK(res.supersequence.truncated(bK) == A.truncated(bK));
    CHECK(res.L == A.count_upto(bK));
    // strictly increasing by construction; grid intervals past K hold the tail
    if (res.L < A.size()) CHECK(A[res.L] > bK);
}

TEST_CASE("embed rejects gamma at or above the spacing constant") {
    CasselsChain chain = cassels_order2(fibonacci_q(12), 8);
    CHECK_THROWS_AS(embed_polynomial(EmbedSpec(2, Rational(10), chain.elements)),
                    hypothesis_error);
}

TEST_CASE("burn-in skips early spacing dips") {
    // gap 1 at value 100 gives statistic 1/10 < 1/8 at index 1
    std::vector<Natural> vals{0, 100, 101};
    for (unsigned long k = 1; k <= 40; ++k) vals.emplace_back(101 + 400 * k);
    MonotoneSequence source = MonotoneSequence::from_sorted(vals);
    CHECK_THROWS_AS(embed_polynomial(EmbedSpec(2, Rational(1, 8), source, 0)),
                    hypothesis_error);
    EmbedResult res = embed_polynomial(EmbedSpec(2, Rational(1, 8), source, 2));
    CHECK(is_supersequence(res.supersequence, source));
}

TEST_CASE("embed spec validation") {
    CHECK_THROWS_AS(EmbedSpec(1, Rational(1, 8), seq({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(EmbedSpec(2, Rational(0), seq({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(EmbedSpec(2, Rational(1, 8), seq({0})), std::invalid_argument);
}

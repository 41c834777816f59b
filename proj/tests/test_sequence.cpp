#include <doctest.h>

#include "test_util.hpp"
#include "thinbase/sequence.hpp"

using namespace thinbase;
using testutil::seq;

TEST_CASE("expand_progression") {
    CHECK(expand_progression(Progression(3, 1, 5)) == seq({3, 4, 5, 6, 7, 8}));
    CHECK(expand_progression(Progression(8, 2, 8)) ==
          seq({8, 10, 12, 14, 16, 18, 20, 22, 24}));
    CHECK(expand_progression(Progression(0, 7, 0)) == seq({0}));
    CHECK_THROWS_AS(Progression(0, 0, 3), std::invalid_argument);
}

TEST_CASE("expand_progression length and step differences") {
    std::mt19937_64 rng(testutil::kSeed);
    std::uniform_int_distribution<unsigned long> d(1, 50);
    for (int round = 0; round < 50; ++round) {
        Progression p(d(rng), d(rng), d(rng));
        MonotoneSequence s = expand_progression(p);
        auto count = to_u64(p.count);
        REQUIRE(s.size() == *count + 1);
        for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(s[i + 1] - s[i] == p.step);
        CHECK(s.front() == p.start);
    }
}

TEST_CASE("union_sorted") {
    CHECK(union_sorted({seq({0, 1, 4, 5}), seq({0, 2, 8, 10})}) ==
          seq({0, 1, 2, 4, 5, 8, 10}));
    CHECK(union_sorted({MonotoneSequence(), MonotoneSequence()}) == MonotoneSequence());
    CHECK(union_sorted({seq({5}), seq({5}), seq({5})}) == seq({5}));
}

TEST_CASE("union_sorted is associative and commutative") {
    std::mt19937_64 rng(testutil::kSeed + 1);
    for (int round = 0; round < 40; ++round) {
        auto a = testutil::random_sequence(rng, 12, 60);
        auto b = testutil::random_sequence(rng, 12, 60);
        auto c = testutil::random_sequence(rng, 12, 60);
        CHECK(union_sorted({a, b}) == union_sorted({b, a}));
        CHECK(union_sorted({union_sorted({a, b}), c}) == union_sorted({a, union_sorted({b, c})}));
        CHECK(union_sorted({a, b, c}) == union_sorted({union_sorted({a, b}), c}));
    }
}

TEST_CASE("monotone sequence invariant") {
    CHECK_THROWS_AS(MonotoneSequence::from_sorted({Natural(3), Natural(3)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MonotoneSequence::from_sorted({Natural(5), Natural(4)}),
                    std::invalid_argument);
    CHECK(MonotoneSequence::from_values({Natural(5), Natural(4), Natural(5)}) == seq({4, 5}));
    CHECK(MonotoneSequence().empty());
}

TEST_CASE("sequence lookups") {
    auto s = seq({0, 1, 4, 5, 16});
    CHECK(s.contains(4));
    CHECK(!s.contains(3));
    CHECK(s.count_upto(4) == 3);
    CHECK(s.count_upto(0) == 1);
    CHECK(s.truncated(5) == seq({0, 1, 4, 5}));
    CHECK(MonotoneSequence::iota(2, 5) == seq({2, 3, 4, 5}));
    CHECK(MonotoneSequence::iota(3, 2).empty());
}

TEST_CASE("interval") {
    Interval closed = Interval::closed(2, 6);
    CHECK(closed.length() == 5);
    CHECK(closed.contains(6));
    Interval open = Interval::half_open(2, 6);
    CHECK(open.length() == 4);
    CHECK(!open.contains(6));
    CHECK(open.last() == 5);
    CHECK(Interval::half_open(5, 5).empty());
    CHECK(!Interval::closed(5, 5).empty());
    CHECK_THROWS_AS(Interval::closed(7, 3), std::invalid_argument);
}

#include <doctest.h>

#include "test_util.hpp"
#include "thinbase/cassels2.hpp"

using namespace thinbase;
using testutil::seq;

namespace {

std::vector<Natural> fib_m(const std::vector<Natural>& q) {
    std::vector<Natural> m;
    for (std::size_t i = 0; i + 2 < q.size(); ++i) m.push_back(q[i + 1] + q[i + 2]);
    return m;
}

std::vector<Natural> nats(std::initializer_list<unsigned long> xs) {
    std::vector<Natural> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("fibonacci_q") {
    CHECK(fibonacci_q(7) == nats({1, 1, 2, 3, 5, 8, 13}));
    CHECK(fibonacci_q(2) == nats({1, 1}));
    CHECK_THROWS_AS(fibonacci_q(1), std::invalid_argument);
    auto q = fibonacci_q(10);
    CHECK(q[8] == 34);
    CHECK(q[9] == 55);
    // the ratio approaches (sqrt(5)-1)/2 = 0.6180...
    CHECK(Rational(q[8], q[9]) > Rational(617, 1000));
    CHECK(Rational(q[8], q[9]) < Rational(619, 1000));
}

TEST_CASE("validate_cassels") {
    auto q = fibonacci_q(14);
    CHECK(validate_cassels(q, fib_m(q), 10).empty());

    // geometric q: the first failing hypothesis instance is AP2 at i=3,
    // where gcd(q_2, q_3) = gcd(2, 4) = 2
    std::vector<Natural> geo{1, 2, 4, 8, 16, 32};
    std::vector<Natural> m(geo.size(), Natural(100));
    auto v = validate_cassels(geo, m, 2);
    REQUIRE(!v.empty());
    CHECK(v[0].condition == "AP2");
    CHECK(v[0].index == 3);
    CHECK(v[0].detail.find("gcd(q_2,q_3) = 2") != std::string::npos);

    auto v3 = validate_cassels(nats({1, 2, 3}), nats({1, 1, 1}), 1);
    REQUIRE(v3.size() == 1);
    CHECK(v3[0].condition == "AP3");
    CHECK(v3[0].index == 2);

    auto bad_start = validate_cassels(nats({2, 3, 5}), nats({9, 9, 9}), 1);
    REQUIRE(!bad_start.empty());
    CHECK(bad_start[0].condition == "AP1");
}

TEST_CASE("cassels_progressions on the Fibonacci instance") {
    auto q = fibonacci_q(8);
    CasselsChain chain = cassels_progressions(CasselsSpec2(q, fib_m(q), 4));
    CHECK(chain.Q == nats({0, 3, 8, 24, 63}));
    CHECK(chain.M == nats({0, 3, 8, 16, 29}));
    // A starts 0..8 then steps by 2 to 24, then by 3 to 63
    auto& A = chain.elements;
    REQUIRE(A.size() == 30);
    CHECK(A.truncated(12) == seq({0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 12}));
    CHECK(A.back() == 63);
    CHECK(A.contains(27));
    CHECK(!A.contains(26));
}

TEST_CASE("cassels_progressions block geometry") {
    auto q = fibonacci_q(9);
    CasselsChain chain = cassels_progressions(CasselsSpec2(q, fib_m(q), 5));
    for (std::size_t k = 0; k + 1 < chain.Q.size(); ++k)
        CHECK(chain.Q[k + 1] - chain.Q[k] == chain.spec.m[k] * chain.spec.q[k]);
    for (std::size_t k = 0; k + 1 < chain.blocks.size(); ++k) {
        auto cur = expand_progression(chain.blocks[k]);
        auto next = expand_progression(chain.blocks[k + 1]);
        CHECK(cur.back() == next.front());  // consecutive blocks share the endpoint
    }
    CHECK(chain.elements.front() == 0);
    // |A| = M_{K+1} + 1 since consecutive blocks overlap in exactly one point
    CHECK(chain.elements.size() == to_u64(chain.M.back()).value() + 1);
}

TEST_CASE("single-block edge case") {
    CasselsChain chain = cassels_progressions(CasselsSpec2(nats({1}), nats({1}), 1));
    CHECK(chain.elements == seq({0, 1}));
}

TEST_CASE("cassels_order2") {
    auto q = fibonacci_q(8);
    CasselsChain direct = cassels_progressions(CasselsSpec2(q, fib_m(q), 4));
    CasselsChain wrapped = cassels_order2(q, 4);
    CHECK(direct.elements == wrapped.elements);
    CHECK(direct.Q == wrapped.Q);

    // K=1 with Fibonacci q: A_1 = [0, q_2+q_3] = {0,1,2,3}
    CHECK(cassels_order2(fibonacci_q(5), 1).elements == seq({0, 1, 2, 3}));

    // fib K=3: |A| = M_4 + 1 = (3+5+8)+1
    CHECK(cassels_order2(fibonacci_q(7), 3).elements.size() == 17);

    // constant q violates C2-b at i=2
    std::vector<Natural> ones(8, Natural(1));
    auto v = validate_cassels_order2(ones, 2);
    REQUIRE(!v.empty());
    CHECK(v[0].condition == "C2-b");
    CHECK(v[0].index == 2);
    CHECK_THROWS_AS(cassels_order2(ones, 2), hypothesis_error);
}

TEST_CASE("hypothesis violations abort generation with the validator's report") {
    std::vector<Natural> geo{1, 2, 4, 8, 16, 32};
    std::vector<Natural> m(geo.size(), Natural(100));
    CHECK_THROWS_WITH_AS(cassels_progressions(CasselsSpec2(geo, m, 2)),
                         doctest::Contains("AP2"), hypothesis_error);
}

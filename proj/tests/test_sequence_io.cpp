#include <doctest.h>

#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "thinbase/sequence_io.hpp"

using namespace thinbase;
using testutil::seq;

TEST_CASE("read_sequence basics") {
    std::istringstream a("0\n1\n4\n");
    CHECK(read_sequence(a) == seq({0, 1, 4}));

    std::istringstream b("# comment\n2\n");
    CHECK(read_sequence(b) == seq({2}));

    std::istringstream c("3\n3\n");
    CHECK_THROWS_WITH_AS(read_sequence(c), doctest::Contains(":2:"), io_error);

    std::istringstream d("1\nx7\n");
    CHECK_THROWS_WITH_AS(read_sequence(d), doctest::Contains(":2:"), io_error);

    std::istringstream e("5\n3\n");
    CHECK_THROWS_AS(read_sequence(e), io_error);

    std::istringstream f("");
    CHECK(read_sequence(f).empty());
}

TEST_CASE("write_sequence format is bit-exact") {
    std::ostringstream out;
    write_sequence(seq({0, 1, 4}), out);
    CHECK(out.str() == "0\n1\n4\n");
    std::ostringstream empty;
    write_sequence(MonotoneSequence(), empty);
    CHECK(empty.str() == "");
}

TEST_CASE("write then read is the identity") {
    testutil::TempDir dir;
    std::mt19937_64 rng(testutil::kSeed + 2);
    for (int round = 0; round < 20; ++round) {
        auto s = testutil::random_sequence(rng, 40, 1000000);
        auto path = dir.file("roundtrip.seq");
        write_sequence(s, path);
        CHECK(read_sequence(path) == s);
    }
    // values past any machine word
    Natural big = pow2(200) + 12345;
    auto s = MonotoneSequence::from_sorted({Natural(0), big, big * 3});
    auto path = dir.file("big.seq");
    write_sequence(s, path);
    CHECK(read_sequence(path) == s);
}

TEST_CASE("read_sequence rejects negative values") {
    std::istringstream in("0\n-3\n");
    CHECK_THROWS_AS(read_sequence(in), io_error);
}

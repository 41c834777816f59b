#pragma once

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "thinbase/sequence.hpp"

namespace testutil {

inline constexpr std::uint64_t kSeed = 0x5eedc0deULL;

inline thinbase::MonotoneSequence seq(std::initializer_list<unsigned long> xs) {
    std::vector<thinbase::Natural> v;
    for (auto x : xs) v.emplace_back(x);
    return thinbase::MonotoneSequence::from_sorted(std::move(v));
}

inline thinbase::MonotoneSequence random_sequence(std::mt19937_64& rng, int max_size,
                                                  unsigned long max_value) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    std::uniform_int_distribution<unsigned long> elem_dist(0, max_value);
    std::vector<thinbase::Natural> v;
    int n = size_dist(rng);
    for (int i = 0; i < n; ++i) v.emplace_back(elem_dist(rng));
    return thinbase::MonotoneSequence::from_values(std::move(v));
}

/// Scratch directory removed at scope exit.
class TempDir {
public:
    TempDir() {
        std::string tpl = (std::filesystem::temp_directory_path() / "thinbase_test_XXXXXX").string();
        std::vector<char> buf(tpl.begin(), tpl.end());
        buf.push_back('\0');
        if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
        path_ = buf.data();
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

}  // namespace testutil

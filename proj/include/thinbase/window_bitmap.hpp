#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "thinbase/sequence.hpp"

namespace thinbase {

/// Exact membership table of a set intersected with [0, N].
/// Exactly N+1 bits; bit n set iff n is a member.
class WindowBitmap {
public:
    explicit WindowBitmap(std::uint64_t window_top);

    std::uint64_t top() const { return top_; }
    std::uint64_t bit_capacity() const { return top_ + 1; }
    std::size_t word_count() const { return words_.size(); }

    bool test(std::uint64_t n) const {
        return n <= top_ && (words_[n >> 6] >> (n & 63)) & 1u;
    }
    void set(std::uint64_t n);

    std::uint64_t popcount() const;
    bool all_set() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& mutable_words() { return words_; }
    /// Clears bits above top(); call after raw word writes.
    void mask_tail();

    MonotoneSequence to_sequence() const;

    bool operator==(const WindowBitmap&) const = default;

    // Cache file format: magic "THBMAP01", then N as 8-byte little-endian,
    // then ceil((N+1)/8) bytes of packed bits, LSB first within each byte.
    void save(const std::filesystem::path& path) const;
    static WindowBitmap load(const std::filesystem::path& path);

private:
    std::uint64_t top_;
    std::vector<std::uint64_t> words_;
};

}  // namespace thinbase

#include "thinbase/window_bitmap.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace thinbase {

namespace {
constexpr char kMagic[8] = {'T', 'H', 'B', 'M', 'A', 'P', '0', '1'};
}

WindowBitmap::WindowBitmap(std::uint64_t window_top)
    : top_(window_top), words_((window_top >> 6) + 1, 0) {}

void WindowBitmap::set(std::uint64_t n) {
    if (n > top_) throw std::out_of_range("bit index beyond window top");
    words_[n >> 6] |= std::uint64_t(1) << (n & 63);
}

std::uint64_t WindowBitmap::popcount() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

bool WindowBitmap::all_set() const { return popcount() == bit_capacity(); }

void WindowBitmap::mask_tail() {
    const unsigned used = static_cast<unsigned>((top_ & 63) + 1);
    if (used < 64) words_.back() &= (std::uint64_t(1) << used) - 1;
}

MonotoneSequence WindowBitmap::to_sequence() const {
    std::vector<Natural> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t x = words_[w];
        while (x) {
            unsigned b = static_cast<unsigned>(std::countr_zero(x));
            out.emplace_back(static_cast<unsigned long>((w << 6) + b));
            x &= x - 1;
        }
    }
    return MonotoneSequence::from_sorted(std::move(out));
}

void WindowBitmap::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out.write(kMagic, sizeof kMagic);
    unsigned char hdr[8];
    for (int i = 0; i < 8; ++i) hdr[i] = static_cast<unsigned char>((top_ >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(hdr), 8);
    const std::uint64_t nbytes = (bit_capacity() + 7) / 8;
    std::vector<unsigned char> bytes(nbytes, 0);
    for (std::uint64_t i = 0; i < nbytes; ++i)
        bytes[i] = static_cast<unsigned char>((words_[i >> 3] >> (8 * (i & 7))) & 0xff);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(nbytes));
    if (!out) throw io_error("write failed: " + path.string());
}

WindowBitmap WindowBitmap::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    char magic[8];
    if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0)
        throw io_error(path.string() + ": bad bitmap magic");
    unsigned char hdr[8];
    if (!in.read(reinterpret_cast<char*>(hdr), 8)) throw io_error(path.string() + ": truncated header");
    std::uint64_t top = 0;
    for (int i = 0; i < 8; ++i) top |= static_cast<std::uint64_t>(hdr[i]) << (8 * i);
    WindowBitmap bm(top);
    const std::uint64_t nbytes = (bm.bit_capacity() + 7) / 8;
    std::vector<unsigned char> bytes(nbytes);
    if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(nbytes)))
        throw io_error(path.string() + ": truncated bitmap payload");
    for (std::uint64_t i = 0; i < nbytes; ++i)
        bm.words_[i >> 3] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i & 7));
    bm.mask_tail();
    return bm;
}

}  // namespace thinbase

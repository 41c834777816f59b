#include "thinbase/sumset.hpp"

#include <algorithm>
#include <stdexcept>

namespace thinbase {

namespace {

std::vector<std::uint64_t> shifts_in_window(const MonotoneSequence& A, std::uint64_t top) {
    std::vector<std::uint64_t> s;
    s.reserve(A.size());
    for (const Natural& a : A) {
        auto v = to_u64(a);
        if (!v || *v > top) break;  // strictly increasing, rest are larger
        s.push_back(*v);
    }
    return s;
}

// dst |= (src << s) for every shift s, truncated to the window.
// Output is processed in cache-sized chunks with the shift loop inside, so a
// chunk of dst stays hot while src is streamed; the result is bit-exact
// regardless of chunking.
void shifted_or_pass(const std::vector<std::uint64_t>& src,
                     const std::vector<std::uint64_t>& shifts,
                     std::vector<std::uint64_t>& dst) {
    const std::size_t nw = src.size();
    constexpr std::size_t chunk_words = std::size_t(1) << 12;  // 32 KiB
    for (std::size_t w0 = 0; w0 < nw; w0 += chunk_words) {
        const std::size_t w1 = std::min(nw, w0 + chunk_words);
        for (std::uint64_t s : shifts) {
            const std::size_t q = static_cast<std::size_t>(s >> 6);
            const unsigned r = static_cast<unsigned>(s & 63);
            if (q >= w1) break;  // shifts ascend; later ones start past this chunk
            std::size_t w = std::max(w0, q);
            if (r == 0) {
                for (; w < w1; ++w) dst[w] |= src[w - q];
            } else {
                if (w == q) {
                    dst[w] |= src[0] << r;
                    ++w;
                }
                for (; w < w1; ++w)
                    dst[w] |= (src[w - q] << r) | (src[w - q - 1] >> (64 - r));
            }
        }
    }
}

void check_window(std::uint64_t top, const KernelOptions& opts) {
    if (top >= opts.max_window_bits)
        throw std::length_error("window of " + std::to_string(top + 1) +
                                " bits exceeds limit of " + std::to_string(opts.max_window_bits));
}

Natural multiset_guard(std::size_t n, unsigned h) {
    Natural b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n) + h - 1, h);
    return b;
}

}  // namespace

WindowBitmap base_bitmap(const MonotoneSequence& A, std::uint64_t window_top) {
    WindowBitmap bm(window_top);
    for (std::uint64_t s : shifts_in_window(A, window_top)) bm.set(s);
    return bm;
}

WindowBitmap hfold_window(const MonotoneSequence& A, unsigned h, std::uint64_t window_top,
                          const KernelOptions& opts) {
    if (h < 1) throw std::invalid_argument("hfold_window requires h >= 1");
    check_window(window_top, opts);
    const auto shifts = shifts_in_window(A, window_top);
    WindowBitmap cur = base_bitmap(A, window_top);
    for (unsigned pass = 2; pass <= h; ++pass) {
        WindowBitmap next(window_top);
        shifted_or_pass(cur.words(), shifts, next.mutable_words());
        next.mask_tail();
        cur = std::move(next);
    }
    return cur;
}

WindowBitmap pair_sumset_window(const MonotoneSequence& A, const MonotoneSequence& B,
                                std::uint64_t window_top, const KernelOptions& opts) {
    check_window(window_top, opts);
    const WindowBitmap base = base_bitmap(A, window_top);
    WindowBitmap out(window_top);
    shifted_or_pass(base.words(), shifts_in_window(B, window_top), out.mutable_words());
    out.mask_tail();
    return out;
}

WindowBitmap naive_hfold(const MonotoneSequence& A, unsigned h, std::uint64_t window_top) {
    if (h < 1) throw std::invalid_argument("naive_hfold requires h >= 1");
    if (multiset_guard(A.size(), h) > 10000000)
        throw std::invalid_argument("naive_hfold guard exceeded: C(|A|+h-1,h) > 10^7");
    WindowBitmap bm(window_top);
    const Natural top(static_cast<unsigned long>(window_top));
    // multisets as nondecreasing element tuples, depth-first with sum pruning
    auto rec = [&](auto&& self, std::size_t start, unsigned left, const Natural& sum) -> void {
        if (left == 0) {
            bm.set(*to_u64(sum));
            return;
        }
        for (std::size_t i = start; i < A.size(); ++i) {
            Natural next = sum + A[i];
            if (next > top) break;  // elements ascend, all further sums overflow the window
            self(self, i, left - 1, next);
        }
    };
    rec(rec, 0, h, Natural(0));
    return bm;
}

Natural representation_count(const MonotoneSequence& A, unsigned h, const Natural& n) {
    if (h < 1) throw std::invalid_argument("representation_count requires h >= 1");
    check_natural(n, "representation_count target");
    if (multiset_guard(A.size(), h) > 10000000)
        throw std::invalid_argument("representation_count guard exceeded: C(|A|+h-1,h) > 10^7");
    Natural count = 0;
    auto rec = [&](auto&& self, std::size_t start, unsigned left, const Natural& sum) -> void {
        if (left == 0) {
            if (sum == n) ++count;
            return;
        }
        for (std::size_t i = start; i < A.size(); ++i) {
            Natural next = sum + A[i];
            if (next > n) break;
            self(self, i, left - 1, next);
        }
    };
    rec(rec, 0, h, Natural(0));
    return count;
}

}  // namespace thinbase

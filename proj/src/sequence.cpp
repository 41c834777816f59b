#include "thinbase/sequence.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace thinbase {

MonotoneSequence MonotoneSequence::from_sorted(std::vector<Natural> values) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] >= values[i + 1])
            throw std::invalid_argument("sequence not strictly increasing at index " +
                                        std::to_string(i + 1));
    if (!values.empty()) check_natural(values.front(), "sequence element");
    return MonotoneSequence(std::move(values));
}

MonotoneSequence MonotoneSequence::from_values(std::vector<Natural> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (!values.empty()) check_natural(values.front(), "sequence element");
    return MonotoneSequence(std::move(values));
}

MonotoneSequence MonotoneSequence::iota(const Natural& lo, const Natural& hi) {
    std::vector<Natural> v;
    for (Natural x = lo; x <= hi; ++x) v.push_back(x);
    return MonotoneSequence(std::move(v));
}

bool MonotoneSequence::contains(const Natural& x) const {
    return std::binary_search(values_.begin(), values_.end(), x);
}

std::size_t MonotoneSequence::count_upto(const Natural& x) const {
    return static_cast<std::size_t>(
        std::upper_bound(values_.begin(), values_.end(), x) - values_.begin());
}

std::size_t MonotoneSequence::upper_bound_index(const Natural& x) const {
    return count_upto(x);
}

MonotoneSequence MonotoneSequence::truncated(const Natural& bound) const {
    std::vector<Natural> v(values_.begin(), values_.begin() + count_upto(bound));
    return MonotoneSequence(std::move(v));
}

Progression::Progression(Natural start_, Natural step_, Natural count_)
    : start(std::move(start_)), step(std::move(step_)), count(std::move(count_)) {
    check_natural(start, "progression start");
    check_natural(count, "progression count");
    if (step <= 0) throw std::invalid_argument("progression step must be positive");
}

MonotoneSequence expand_progression(const Progression& p) {
    std::vector<Natural> v;
    auto n = to_u64(p.count);
    if (!n) throw std::invalid_argument("progression count too large to expand");
    v.reserve(*n + 1);
    Natural x = p.start;
    for (std::uint64_t t = 0; t <= *n; ++t, x += p.step) v.push_back(x);
    return MonotoneSequence::from_sorted(std::move(v));
}

MonotoneSequence union_sorted(const std::vector<MonotoneSequence>& sequences) {
    // k-way merge via index heap; inputs are already strictly increasing.
    using Head = std::pair<std::size_t, std::size_t>;  // (sequence, position)
    auto cmp = [&](const Head& a, const Head& b) {
        return sequences[a.first][a.second] > sequences[b.first][b.second];
    };
    std::priority_queue<Head, std::vector<Head>, decltype(cmp)> heap(cmp);
    std::size_t total = 0;
    for (std::size_t s = 0; s < sequences.size(); ++s) {
        total += sequences[s].size();
        if (!sequences[s].empty()) heap.push({s, 0});
    }
    std::vector<Natural> out;
    out.reserve(total);
    while (!heap.empty()) {
        auto [s, i] = heap.top();
        heap.pop();
        const Natural& x = sequences[s][i];
        if (out.empty() || out.back() != x) out.push_back(x);
        if (i + 1 < sequences[s].size()) heap.push({s, i + 1});
    }
    return MonotoneSequence::from_sorted(std::move(out));
}

Interval::Interval(Natural lo_, Natural hi_, bool hi_inclusive_)
    : lo(std::move(lo_)), hi(std::move(hi_)), hi_inclusive(hi_inclusive_) {
    check_natural(lo, "interval lo");
    if (lo > hi) throw std::invalid_argument("interval requires lo <= hi");
}

Natural Interval::last() const {
    if (empty()) throw std::logic_error("last() on empty interval");
    return hi_inclusive ? hi : Natural(hi - 1);
}

Natural Interval::length() const {
    if (empty()) return 0;
    return last() - lo + 1;
}

bool Interval::contains(const Natural& x) const {
    if (empty()) return false;
    return x >= lo && x <= last();
}

}  // namespace thinbase

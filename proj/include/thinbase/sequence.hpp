#pragma once

#include <cstddef>
#include <vector>

#include "thinbase/natural.hpp"

namespace thinbase {

/// Finite strictly increasing sequence of Naturals. May be empty.
/// Immutable after construction; the invariant is enforced at the factories.
class MonotoneSequence {
public:
    MonotoneSequence() = default;

    /// Wraps an already strictly increasing vector; throws std::invalid_argument otherwise.
    static MonotoneSequence from_sorted(std::vector<Natural> values);

    /// Sorts and deduplicates arbitrary nonnegative values.
    static MonotoneSequence from_values(std::vector<Natural> values);

    /// The integer interval [lo, hi] as a sequence (empty if hi < lo).
    static MonotoneSequence iota(const Natural& lo, const Natural& hi);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    const Natural& operator[](std::size_t i) const { return values_[i]; }
    const Natural& front() const { return values_.front(); }
    const Natural& back() const { return values_.back(); }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }
    const std::vector<Natural>& values() const { return values_; }

    bool contains(const Natural& x) const;
    /// Number of elements <= x.
    std::size_t count_upto(const Natural& x) const;
    /// Index of the first element > x (== size() if none).
    std::size_t upper_bound_index(const Natural& x) const;

    /// Elements in [0, bound] as a prefix copy.
    MonotoneSequence truncated(const Natural& bound) const;

    bool operator==(const MonotoneSequence&) const = default;

private:
    explicit MonotoneSequence(std::vector<Natural> v) : values_(std::move(v)) {}
    std::vector<Natural> values_;
};

/// Arithmetic progression start, start+step, ..., start+count*step (count+1 terms).
struct Progression {
    Natural start;
    Natural step;   // > 0
    Natural count;  // number of steps; 0 means a single term

    Progression(Natural start_, Natural step_, Natural count_);
};

MonotoneSequence expand_progression(const Progression& p);

/// Sorted deduplicated union of strictly increasing sequences.
MonotoneSequence union_sorted(const std::vector<MonotoneSequence>& sequences);

/// Integer interval with lo <= hi; hi_inclusive selects [lo,hi] vs [lo,hi).
struct Interval {
    Natural lo;
    Natural hi;
    bool hi_inclusive = true;

    Interval(Natural lo_, Natural hi_, bool hi_inclusive_ = true);
    static Interval closed(Natural lo, Natural hi) { return Interval(std::move(lo), std::move(hi), true); }
    static Interval half_open(Natural lo, Natural hi) { return Interval(std::move(lo), std::move(hi), false); }

    bool empty() const { return !hi_inclusive && lo == hi; }
    /// Largest contained value; interval must be nonempty.
    Natural last() const;
    Natural length() const;  // number of contained integers
    bool contains(const Natural& x) const;

    bool operator==(const Interval&) const = default;
};

}  // namespace thinbase

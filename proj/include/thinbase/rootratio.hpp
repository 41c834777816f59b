#pragma once

#include <string>

#include "thinbase/natural.hpp"

namespace thinbase {

/// Nonnegative real of the form (num/den)^{1/degree}, kept exact as the
/// rational radicand so comparisons never depend on rendering precision.
class RootRatio {
public:
    RootRatio() : radicand_(0), degree_(1) {}
    RootRatio(Rational radicand, unsigned degree);
    static RootRatio rational(Rational value) { return RootRatio(std::move(value), 1); }

    const Rational& radicand() const { return radicand_; }
    unsigned degree() const { return degree_; }

    /// sign(value - threshold); exact.
    int compare(const Rational& threshold) const;
    bool exceeds(const Rational& threshold) const { return compare(threshold) > 0; }
    bool at_least(const Rational& threshold) const { return compare(threshold) >= 0; }

    /// Exact value comparison across (possibly different) degrees.
    bool less_than(const RootRatio& other) const;

    double to_double() const;

    /// Decimal rendering with `frac_digits` digits after the point,
    /// truncated toward zero; derived from the radicand with integer
    /// arithmetic only.
    std::string decimal(std::size_t frac_digits = 12) const;

private:
    Rational radicand_;  // value^degree, >= 0
    unsigned degree_;
};

}  // namespace thinbase

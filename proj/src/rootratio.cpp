#include "thinbase/rootratio.hpp"

#include <cmath>

namespace thinbase {

RootRatio::RootRatio(Rational radicand, unsigned degree)
    : radicand_(std::move(radicand)), degree_(degree) {
    if (degree_ == 0) throw std::invalid_argument("root degree must be >= 1");
    radicand_.canonicalize();
    if (radicand_ < 0) throw std::invalid_argument("radicand must be nonnegative");
}

int RootRatio::compare(const Rational& threshold) const {
    if (sgn(threshold) < 0) return 1;  // value is >= 0 > threshold
    Rational t = rat_pow(threshold, degree_);
    return cmp(radicand_, t);
}

bool RootRatio::less_than(const RootRatio& other) const {
    // value_a < value_b  <=>  a^db < b^da  (common exponent da*db)
    Rational lhs = rat_pow(radicand_, other.degree_);
    Rational rhs = rat_pow(other.radicand_, degree_);
    return lhs < rhs;
}

double RootRatio::to_double() const {
    return std::pow(radicand_.get_d(), 1.0 / degree_);
}

std::string RootRatio::decimal(std::size_t frac_digits) const {
    // floor(value * 10^f) = floor((num * 10^{f d} / den)^{1/d})
    Natural scale = nat_pow(Natural(10), static_cast<unsigned long>(frac_digits) * degree_);
    Natural t = radicand_.get_num() * scale / radicand_.get_den();
    Natural root;
    mpz_root(root.get_mpz_t(), t.get_mpz_t(), degree_);
    std::string digits = root.get_str();
    if (digits.size() <= frac_digits) digits.insert(0, frac_digits + 1 - digits.size(), '0');
    if (frac_digits == 0) return digits;
    digits.insert(digits.size() - frac_digits, ".");
    return digits;
}

}  // namespace thinbase

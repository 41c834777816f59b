#include "thinbase/embed.hpp"

namespace thinbase {

namespace {

// b_k = floor(((gnum k)^h + den/2) / den) with den = (gden h)^h, then the
// monotonicity repair. Appends grid values until predicate stop(b) holds.
class GridBuilder {
public:
    GridBuilder(unsigned h, const Rational& gamma)
        : h_(h), num_step_(gamma.get_num()), den_(nat_pow(Natural(gamma.get_den()) * h, h)) {}

    const Natural& at(std::size_t k) {
        while (values_.size() <= k) extend();
        return values_[k];
    }
    const std::vector<Natural>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    void extend() {
        const std::size_t k = values_.size();
        Natural ideal = nat_pow(num_step_ * static_cast<unsigned long>(k), h_);
        Natural rounded = (2 * ideal + den_) / (2 * den_);  // nearest, ties up
        if (!values_.empty() && rounded <= values_.back()) rounded = values_.back() + 1;
        values_.push_back(std::move(rounded));
    }

    unsigned h_;
    Natural num_step_;
    Natural den_;
    std::vector<Natural> values_;
};

}  // namespace

EmbedSpec::EmbedSpec(unsigned h, Rational gamma_, MonotoneSequence source_, std::size_t burn_in_)
    : order(h), gamma(std::move(gamma_)), source(std::move(source_)), burn_in(burn_in_) {
    if (order < 2) throw std::invalid_argument("embedding order must be >= 2");
    if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
    if (source.size() < 2 || source.back() <= 0)
        throw std::invalid_argument("source must have at least two elements and a positive tail");
}

MonotoneSequence embedding_grid(unsigned h, const Rational& gamma, std::size_t count) {
    GridBuilder builder(h, gamma);
    if (count) builder.at(count - 1);
    return MonotoneSequence::from_sorted(builder.values());
}

EmbedResult embed_polynomial(const EmbedSpec& spec) {
    const unsigned h = spec.order;
    const auto& a = spec.source;

    // reject gamma >= alpha: the prefix statistic must stay above gamma
    const Natural gnum_h = nat_pow(Natural(spec.gamma.get_num()), h);
    const Natural gden_h = nat_pow(Natural(spec.gamma.get_den()), h);
    for (std::size_t k = spec.burn_in; k + 1 < a.size(); ++k) {
        if (a[k] <= 0) continue;
        const Natural diff = a[k + 1] - a[k];
        // (diff / a_k^{(h-1)/h}) <= gamma  <=>  diff^h * gden^h <= gnum^h * a_k^{h-1}
        if (nat_pow(diff, h) * gden_h <= gnum_h * nat_pow(a[k], h - 1))
            throw hypothesis_error(
                "prefix gap statistic at index " + std::to_string(k) +
                " does not exceed gamma; choose gamma below the source's spacing constant");
    }

    GridBuilder grid(h, spec.gamma);

    // K: one past the last grid interval (b_k, b_{k+1}] holding two or more
    // source elements, scanned over the supplied prefix.
    std::size_t K = 0;
    {
        std::size_t k = 0;
        while (grid.at(k) < a.back()) {
            std::size_t in_interval = a.count_upto(grid.at(k + 1)) - a.count_upto(grid.at(k));
            if (in_interval >= 2) K = k + 1;
            ++k;
        }
    }

    const std::size_t prefix_len = a.count_upto(grid.at(K));
    std::vector<Natural> c(a.begin(), a.begin() + prefix_len);

    std::size_t consumed = prefix_len;
    for (std::size_t i = 1; consumed < a.size(); ++i) {
        const Natural& lo = grid.at(K + i - 1);
        const Natural& hi = grid.at(K + i);
        const std::size_t upto_hi = a.count_upto(hi);
        const std::size_t in_interval = upto_hi - a.count_upto(lo);
        if (in_interval >= 2)
            throw std::logic_error("grid interval past K holds two source elements");
        if (in_interval == 1) {
            c.push_back(a[upto_hi - 1]);
            consumed = upto_hi;
        } else {
            c.push_back(hi);
        }
    }

    EmbedResult result;
    result.supersequence = MonotoneSequence::from_sorted(std::move(c));
    result.grid = MonotoneSequence::from_sorted(grid.values());
    result.K = K;
    result.L = prefix_len;
    return result;
}

}  // namespace thinbase

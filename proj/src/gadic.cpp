#include "thinbase/gadic.hpp"

#include <algorithm>

namespace thinbase {

GAdicSpec::GAdicSpec(unsigned g, MonotoneSequence W, Natural bound_)
    : radix(g), exponents(std::move(W)), bound(std::move(bound_)) {
    if (radix < 2) throw std::invalid_argument("g-adic radix must be >= 2");
    if (exponents.empty()) throw std::invalid_argument("g-adic exponent set must be nonempty");
    check_natural(bound, "g-adic bound");
}

MonotoneSequence g_adic_component(const GAdicSpec& spec) {
    // Grow the set one exponent at a time; distinct digit patterns give
    // distinct values, so the merge only ever appends new elements.
    std::vector<Natural> cur{Natural(0)};
    for (const Natural& w : spec.exponents) {
        auto wv = to_u64(w);
        if (!wv) break;
        Natural p = nat_pow(Natural(spec.radix), static_cast<unsigned long>(*wv));
        if (p > spec.bound) break;  // exponents ascend; later powers are larger
        std::vector<Natural> merged = cur;
        for (unsigned e = 1; e < spec.radix; ++e) {
            Natural t = e * p;
            if (t > spec.bound) break;
            for (const Natural& a : cur) {
                Natural v = a + t;
                if (v <= spec.bound) merged.push_back(std::move(v));
            }
        }
        std::sort(merged.begin(), merged.end());
        cur = std::move(merged);
    }
    return MonotoneSequence::from_sorted(std::move(cur));
}

MonotoneSequence residue_exponents(unsigned residue, unsigned modulus, unsigned long max_exponent) {
    std::vector<Natural> w;
    for (unsigned long e = residue; e <= max_exponent; e += modulus)
        w.emplace_back(static_cast<unsigned long>(e));
    return MonotoneSequence::from_sorted(std::move(w));
}

MonotoneSequence raikov_stohr(unsigned h, const Natural& bound) {
    if (h < 2) throw std::invalid_argument("raikov_stohr requires h >= 2");
    check_natural(bound, "raikov_stohr bound");
    const unsigned long wmax = bound >= 1 ? floor_log(bound, 2) : 0;
    std::vector<MonotoneSequence> components;
    for (unsigned i = 0; i < h; ++i) {
        MonotoneSequence w = residue_exponents(i, h, wmax);
        if (w.empty()) {
            components.push_back(MonotoneSequence::from_sorted({Natural(0)}));
            continue;
        }
        components.push_back(g_adic_component(GAdicSpec(2, std::move(w), bound)));
    }
    return union_sorted(components);
}

PartitionSpec::PartitionSpec(unsigned g, unsigned h, std::vector<MonotoneSequence> parts_,
                             Natural bound_)
    : radix(g), order(h), parts(std::move(parts_)), bound(std::move(bound_)) {
    if (radix < 2) throw std::invalid_argument("partition radix must be >= 2");
    if (order < 2) throw std::invalid_argument("partition order must be >= 2");
    if (parts.size() != order)
        throw std::invalid_argument("partition must have exactly h parts");
    check_natural(bound, "partition bound");
}

PartitionSpec PartitionSpec::residues(unsigned g, unsigned h, Natural bound) {
    const unsigned long wmax = bound >= 1 ? floor_log(bound, g) : 0;
    std::vector<MonotoneSequence> parts;
    for (unsigned i = 0; i < h; ++i) parts.push_back(residue_exponents(i, h, wmax));
    return PartitionSpec(g, h, std::move(parts), std::move(bound));
}

MonotoneSequence jia_nathanson(const PartitionSpec& spec) {
    const unsigned long wmax = spec.bound >= 1 ? floor_log(spec.bound, spec.radix) : 0;
    for (unsigned long w = 0; w <= wmax; ++w) {
        const Natural wn(static_cast<unsigned long>(w));
        bool covered = false;
        for (const auto& part : spec.parts) covered = covered || part.contains(wn);
        if (!covered)
            throw hypothesis_error("exponent " + std::to_string(w) +
                                   " <= floor(log_g bound) lies in no part");
    }
    std::vector<MonotoneSequence> components;
    components.reserve(spec.parts.size());
    for (const auto& part : spec.parts) {
        if (part.empty()) {
            components.push_back(MonotoneSequence::from_sorted({Natural(0)}));
            continue;
        }
        components.push_back(g_adic_component(GAdicSpec(spec.radix, part, spec.bound)));
    }
    return union_sorted(components);
}

}  // namespace thinbase

#include "thinbase/cassels_h.hpp"

namespace thinbase {

BlockSpec::BlockSpec(unsigned h, Natural v_, Natural L_)
    : order(h), v(std::move(v_)), L(std::move(L_)) {
    if (order < 3) throw std::invalid_argument("block order must be >= 3");
    if (v < 1) throw std::invalid_argument("block parameter v must be >= 1");
    if (L < order) throw std::invalid_argument("block parameter L must be >= h");
    g = pow2(order + 1) * v;
}

MonotoneSequence cassels_block(const BlockSpec& spec) {
    const unsigned h = spec.order;
    const Natural& g = spec.g;
    const Natural gh = nat_pow(g, h);
    const Natural gh1 = nat_pow(g, h - 1);
    const Natural gh2 = nat_pow(g, h - 2);

    std::vector<MonotoneSequence> families;

    std::vector<Natural> fam;
    for (Natural e = 0; e < g; ++e) fam.push_back(gh + e * gh1 + 2 * spec.v * gh2 + e);
    families.push_back(MonotoneSequence::from_sorted(std::move(fam)));

    for (unsigned i = 0; i + 3 <= h; ++i) {
        const Natural gi = nat_pow(g, i);
        std::vector<Natural> f;
        for (Natural e = 0; e < g; ++e) f.push_back((i + 1) * gh + e * gh1 + e * gi);
        families.push_back(MonotoneSequence::from_sorted(std::move(f)));
    }

    {
        std::vector<Natural> f;
        const Natural qmax = pow2(h - 1);
        for (Natural q = 0; q < qmax; ++q)
            for (Natural r = 0; r < 2 * spec.v; ++r) {
                Natural d = 4 * spec.v * q + r;
                f.push_back((h - 1) * gh + d * gh1 + d * gh2);
            }
        families.push_back(MonotoneSequence::from_sorted(std::move(f)));
    }

    {
        std::vector<Natural> f;
        for (Natural l = 0; l < spec.L * g; ++l) f.push_back(h * gh + l * gh1);
        families.push_back(MonotoneSequence::from_sorted(std::move(f)));
    }

    return union_sorted(families);
}

OrderHBasis cassels_order_h(unsigned h, unsigned long j_max) {
    if (h < 3) throw std::invalid_argument("cassels_order_h requires h >= 3");
    // the seed interval [0, 2^{h^2+2h}] is materialized element by element
    if (static_cast<unsigned long>(h) * h + 2 * h > 24)
        throw std::length_error(
            "cassels_order_h at h >= 5 would materialize more than 2^24 seed elements");
    OrderHBasis basis{h,
                      pow2(2 * h) - h - 1,
                      pow2(static_cast<unsigned long>(h) * h + 2 * h),
                      Interval::closed(0, 0),
                      {},
                      {}};
    basis.base_coverage = Interval::closed(Natural(0), h * basis.base_top);

    std::vector<MonotoneSequence> pieces{MonotoneSequence::iota(Natural(0), basis.base_top)};

    Natural p = 0;
    for (unsigned long j = 0; j <= j_max; ++j) {
        const Natural v = pow2(j);
        const Natural g = pow2(j + h + 1);
        p += v * nat_pow(g, h - 2);
        const Natural gh = nat_pow(g, h);
        if (p >= gh) throw std::logic_error("p_j < g_j^h violated; construction bug");
        BlockSpec spec(h, v, basis.L);
        MonotoneSequence block = cassels_block(spec);
        std::vector<Natural> shifted;
        shifted.reserve(block.size());
        for (const Natural& c : block) shifted.push_back(p + c);
        // I(j) = [h p_j + ((h^2+3h-2)/2) g^h, h p_j + (h(h+1)/2 + L) g^h)
        Natural lo = h * p + ((Natural(h) * h + 3 * h - 2) / 2) * gh;
        Natural hi = h * p + (Natural(h) * (h + 1) / 2 + basis.L) * gh;
        basis.blocks.push_back({j, v, g, p, Interval::half_open(std::move(lo), std::move(hi)),
                                MonotoneSequence::from_sorted(std::move(shifted))});
        pieces.push_back(basis.blocks.back().elements);
    }

    // runtime overlap assertions instead of trusting the inequality chain
    if (!basis.blocks.empty() && basis.blocks[0].coverage.lo > basis.base_coverage.last())
        throw std::logic_error("coverage intervals I(-1) and I(0) do not overlap");
    for (std::size_t i = 0; i + 1 < basis.blocks.size(); ++i)
        if (basis.blocks[i + 1].coverage.lo >= basis.blocks[i].coverage.hi)
            throw std::logic_error("coverage intervals I(" + std::to_string(i) + ") and I(" +
                                   std::to_string(i + 1) + ") do not overlap");

    basis.elements = union_sorted(pieces);
    return basis;
}

}  // namespace thinbase

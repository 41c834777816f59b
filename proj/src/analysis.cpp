#include "thinbase/analysis.hpp"

#include <algorithm>

namespace thinbase {

Natural counting(const MonotoneSequence& A, const Natural& x) {
    if (sgn(x) <= 0) return 0;
    std::size_t upto = A.count_upto(x);
    std::size_t zeros = (!A.empty() && A[0] == 0) ? 1 : 0;
    return Natural(static_cast<unsigned long>(upto - std::min(upto, zeros)));
}

RootRatio gap_statistic(const MonotoneSequence& A, unsigned h, std::size_t k, GapNorm norm) {
    if (k + 1 >= A.size()) throw std::out_of_range("gap_statistic index out of range");
    const Natural diff = A[k + 1] - A[k];
    if (norm == GapNorm::by_index) {
        if (k < 1) throw std::invalid_argument("by_index statistic needs k >= 1");
        return RootRatio::rational(Rational(diff, Natural(static_cast<unsigned long>(k))));
    }
    if (A[k] == 0) throw std::invalid_argument("by_power statistic undefined at a_k = 0");
    // value = diff / a_k^{(h-1)/h}; value^h = diff^h / a_k^{h-1}
    Rational power(nat_pow(diff, h), nat_pow(A[k], h - 1));
    power.canonicalize();
    return RootRatio(std::move(power), h);
}

GrowthMetrics ratio_report(const MonotoneSequence& A, unsigned h,
                           const std::vector<Natural>& sample_xs) {
    if (A.empty()) throw std::invalid_argument("ratio_report requires a nonempty sequence");
    if (h < 2) throw std::invalid_argument("ratio_report requires h >= 2");
    GrowthMetrics gm;
    gm.h = h;
    for (const Natural& x : sample_xs) {
        Natural c = counting(A, x);
        RootRatio ratio =
            sgn(x) > 0 ? RootRatio(Rational(nat_pow(c, h), x), h) : RootRatio::rational(0);
        gm.samples.push_back({x, std::move(c), std::move(ratio)});
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i] == 0) continue;
        ++k;
        Rational r(A[i], nat_pow(Natural(static_cast<unsigned long>(k)), h));
        r.canonicalize();
        gm.element_ratios.push_back({k, A[i], std::move(r)});
    }
    for (std::size_t i = 0; i + 1 < A.size(); ++i) {
        if (A[i] > 0) gm.power_gaps.push_back({i, gap_statistic(A, h, i, GapNorm::by_power)});
        if (i >= 1) gm.index_gaps.push_back({i, gap_statistic(A, h, i, GapNorm::by_index)});
    }
    return gm;
}

RootRatio max_counting_ratio(const MonotoneSequence& A, unsigned h, const Natural& x_max) {
    std::optional<RootRatio> best;
    std::size_t k = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i] == 0) continue;
        if (A[i] > x_max) break;
        ++k;
        RootRatio r(Rational(nat_pow(Natural(static_cast<unsigned long>(k)), h), A[i]), h);
        if (!best || best->less_than(r)) best = std::move(r);
    }
    if (!best) throw std::invalid_argument("no positive elements <= x_max");
    return *best;
}

Rational min_element_ratio(const MonotoneSequence& A, unsigned h, const Natural& x_max) {
    std::optional<Rational> best;
    std::size_t k = 0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i] == 0) continue;
        if (A[i] > x_max) break;
        ++k;
        Rational r(A[i], nat_pow(Natural(static_cast<unsigned long>(k)), h));
        r.canonicalize();
        if (!best || r < *best) best = std::move(r);
    }
    if (!best) throw std::invalid_argument("no positive elements <= x_max");
    return *best;
}

RootRatio min_gap_statistic(const MonotoneSequence& A, unsigned h, GapNorm norm,
                            std::size_t from, std::size_t to) {
    if (to + 1 >= A.size()) to = A.size() >= 2 ? A.size() - 2 : 0;
    std::optional<RootRatio> best;
    for (std::size_t k = from; k <= to && k + 1 < A.size(); ++k) {
        if (norm == GapNorm::by_power && A[k] == 0) continue;
        if (norm == GapNorm::by_index && k < 1) continue;
        RootRatio r = gap_statistic(A, h, k, norm);
        if (!best || r.less_than(*best)) best = std::move(r);
    }
    if (!best) throw std::invalid_argument("no valid indices in gap-statistic range");
    return *best;
}

Thin1Result thin1_check(const MonotoneSequence& A, unsigned h, const Natural& n0,
                        const Natural& N) {
    if (h < 1) throw std::invalid_argument("thin1_check requires h >= 1");
    if (n0 > N) throw std::invalid_argument("thin1_check requires n0 <= N");
    const Natural hfact = factorial(h);

    // A(n) is constant between consecutive elements, while the right-hand
    // side grows with n, so each run only needs its last point checked.
    // Runs are delimited by the positive elements of A in (n0, N].
    std::size_t idx = A.count_upto(n0);          // elements <= n0
    Natural count = counting(A, n0);             // A(n0)
    Natural run_start = n0;
    Thin1Result res{true, std::nullopt};

    auto check_run = [&](const Natural& run_end, const Natural& a_of_n) -> bool {
        // fails iff (A(n)+h)^h <= h!(n+1-n0) at n = run_end (the worst point)
        Natural lhs = nat_pow(a_of_n + h, h);
        if (lhs > hfact * (run_end + 1 - n0)) return true;
        // first failing n in the run: smallest n with n+1-n0 >= lhs/h!
        Natural t = (lhs + hfact - 1) / hfact;  // ceil(lhs / h!)
        Natural nviol = t - 1 + n0;
        if (nviol < run_start) nviol = run_start;
        res.ok = false;
        res.first_violation = nviol;
        return false;
    };

    while (run_start <= N) {
        Natural run_end = N;
        bool advance = false;
        if (idx < A.size() && A[idx] <= N) {
            run_end = A[idx] - 1;  // last n before the next element arrives
            advance = true;
        }
        if (run_end >= run_start) {
            if (!check_run(run_end, count)) return res;
        }
        if (!advance) break;
        count += 1;
        run_start = A[idx];
        ++idx;
        // the element's own position belongs to the next run with the new count
        if (!check_run(run_start, count)) return res;
        run_start += 1;
    }
    return res;
}

Rational partial_sum_ratio(const std::vector<Natural>& q, std::size_t k) {
    if (k < 1 || k > q.size()) throw std::out_of_range("partial_sum_ratio needs 1 <= k <= |q|");
    Natural sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum += q[i];
    Rational r(sum, q[k - 1]);
    r.canonicalize();
    return r;
}

namespace {

// index of the block k (1-based) with table[k-1] <= key <= table[K], by
// binary search over a nondecreasing table
std::size_t locate_block(const std::vector<Natural>& table, const Natural& key) {
    auto it = std::upper_bound(table.begin(), table.end(), key);
    if (it == table.begin()) throw std::out_of_range("value below construction range");
    return static_cast<std::size_t>(it - table.begin());  // table[k-1] <= key
}

}  // namespace

Natural cassels_element(const CasselsChain& chain, const Natural& n) {
    check_natural(n, "element index");
    if (n > chain.M.back()) throw std::out_of_range("element index beyond M_{K+1}");
    std::size_t k = locate_block(chain.M, n);
    return chain.Q[k - 1] + (n - chain.M[k - 1]) * chain.spec.q[k - 1];
}

Natural cassels_count(const CasselsChain& chain, const Natural& x) {
    check_natural(x, "counting argument");
    if (x > chain.Q.back()) throw std::out_of_range("counting argument beyond Q_{K+1}");
    std::size_t k = locate_block(chain.Q, x);
    return chain.M[k - 1] + (x - chain.Q[k - 1]) / chain.spec.q[k - 1];
}

}  // namespace thinbase

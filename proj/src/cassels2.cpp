#include "thinbase/cassels2.hpp"

#include <sstream>

namespace thinbase {

namespace {

void require_positive(const std::vector<Natural>& v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 1)
            throw std::invalid_argument(std::string(name) + "[" + std::to_string(i + 1) +
                                        "] must be a positive integer");
}

std::string join_violations(const std::vector<Violation>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << "; ";
        os << vs[i].condition << " at i=" << vs[i].index << " (" << vs[i].detail << ")";
    }
    return os.str();
}

}  // namespace

CasselsSpec2::CasselsSpec2(std::vector<Natural> q_, std::vector<Natural> m_, std::size_t K)
    : q(std::move(q_)), m(std::move(m_)), block_count(K) {
    if (K < 1) throw std::invalid_argument("block count K must be >= 1");
    if (q.size() < K || m.size() < K)
        throw std::invalid_argument("q and m need at least K entries to build the blocks");
    require_positive(q, "q");
    require_positive(m, "m");
}

std::vector<Violation> validate_cassels(const std::vector<Natural>& q,
                                        const std::vector<Natural>& m, std::size_t K) {
    if (q.empty()) throw std::invalid_argument("q must be nonempty");
    std::vector<Violation> out;
    auto qi = [&](std::size_t i) -> const Natural& { return q[i - 1]; };
    auto mi = [&](std::size_t i) -> const Natural& { return m[i - 1]; };
    if (qi(1) != 1) out.push_back({"AP1", 1, "q_1 = " + qi(1).get_str() + ", expected 1"});
    // Conditions at index i touch q up to i+1 and m up to i+1; each is
    // checked whenever the supplied prefixes reach that far, so lists of
    // length K+2 cover the full range 2 <= i <= K+1.
    for (std::size_t i = 2; i <= K + 1; ++i) {
        if (q.size() >= i + 1) {
            Natural g1 = gcd(qi(i - 1), qi(i));
            Natural g2 = gcd(qi(i - 1), qi(i + 1));
            if (g1 != 1 || g2 != 1)
                out.push_back({"AP2", i,
                               "gcd(q_" + std::to_string(i - 1) + ",q_" + std::to_string(i) +
                                   ") = " + g1.get_str() + ", gcd(q_" + std::to_string(i - 1) +
                                   ",q_" + std::to_string(i + 1) + ") = " + g2.get_str()});
            if (m.size() >= i - 1 && mi(i - 1) < qi(i) + qi(i + 1) - 2)
                out.push_back({"AP3", i,
                               "m_" + std::to_string(i - 1) + " = " + mi(i - 1).get_str() +
                                   " < q_" + std::to_string(i) + "+q_" + std::to_string(i + 1) +
                                   "-2 = " + Natural(qi(i) + qi(i + 1) - 2).get_str()});
            if (m.size() >= i + 1 && mi(i + 1) * qi(i + 1) < mi(i) * qi(i) + mi(i - 1) * qi(i - 1))
                out.push_back({"AP4", i,
                               "m_" + std::to_string(i + 1) + "q_" + std::to_string(i + 1) +
                                   " = " + Natural(mi(i + 1) * qi(i + 1)).get_str() + " < " +
                                   Natural(mi(i) * qi(i) + mi(i - 1) * qi(i - 1)).get_str()});
        }
    }
    return out;
}

CasselsChain cassels_progressions(const CasselsSpec2& spec) {
    auto violations = validate_cassels(spec.q, spec.m, spec.block_count);
    if (!violations.empty())
        throw hypothesis_error("Cassels hypotheses fail: " + join_violations(violations));

    const std::size_t K = spec.block_count;
    CasselsChain chain{spec, {}, {}, {}, {}};
    chain.Q.reserve(K + 1);
    chain.M.reserve(K + 1);
    chain.Q.emplace_back(0);  // Q_1
    chain.M.emplace_back(0);  // M_1
    for (std::size_t k = 1; k <= K; ++k) {
        chain.Q.push_back(chain.Q.back() + spec.m[k - 1] * spec.q[k - 1]);
        chain.M.push_back(chain.M.back() + spec.m[k - 1]);
    }
    std::vector<MonotoneSequence> expanded;
    expanded.reserve(K);
    for (std::size_t k = 1; k <= K; ++k) {
        chain.blocks.emplace_back(chain.Q[k - 1], spec.q[k - 1], spec.m[k - 1]);
        expanded.push_back(expand_progression(chain.blocks.back()));
    }
    chain.elements = union_sorted(expanded);
    return chain;
}

std::vector<Violation> validate_cassels_order2(const std::vector<Natural>& q, std::size_t K) {
    if (q.size() < K + 2)
        throw std::invalid_argument("order-2 construction needs at least K+2 entries of q");
    require_positive(q, "q");
    std::vector<Natural> m;
    m.reserve(q.size() - 2);
    for (std::size_t i = 0; i + 2 < q.size(); ++i) m.push_back(q[i + 1] + q[i + 2]);
    auto violations = validate_cassels(q, m, K);
    for (auto& v : violations) {
        if (v.condition == "AP2") v.condition = "C2-a";
        if (v.condition == "AP4") v.condition = "C2-b";
    }
    return violations;
}

CasselsChain cassels_order2(const std::vector<Natural>& q, std::size_t K) {
    auto violations = validate_cassels_order2(q, K);
    if (!violations.empty())
        throw hypothesis_error("Cassels order-2 hypotheses fail: " + join_violations(violations));
    std::vector<Natural> m;
    m.reserve(q.size() - 2);
    for (std::size_t i = 0; i + 2 < q.size(); ++i) m.push_back(q[i + 1] + q[i + 2]);
    return cassels_progressions(CasselsSpec2(q, std::move(m), K));
}

std::vector<Natural> fibonacci_q(std::size_t count) {
    if (count < 2) throw std::invalid_argument("fibonacci_q requires count >= 2");
    std::vector<Natural> q{Natural(1), Natural(1)};
    while (q.size() < count) q.push_back(q[q.size() - 1] + q[q.size() - 2]);
    return q;
}

}  // namespace thinbase

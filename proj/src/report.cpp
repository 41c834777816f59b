#include "thinbase/report.hpp"

#include <sstream>

#include "thinbase/cassels_h.hpp"
#include "thinbase/gadic.hpp"

namespace thinbase {

using nlohmann::json;

json natural_json(const Natural& n) { return n.get_str(); }

json rational_json(const Rational& r, std::size_t frac_digits) {
    json j;
    j["numerator"] = r.get_num().get_str();
    j["denominator"] = r.get_den().get_str();
    j["decimal"] = RootRatio::rational(r).decimal(frac_digits);
    return j;
}

json rootratio_json(const RootRatio& r, std::size_t frac_digits) {
    json j;
    j["value_power_numerator"] = r.radicand().get_num().get_str();
    j["value_power_denominator"] = r.radicand().get_den().get_str();
    j["root_degree"] = r.degree();
    j["decimal"] = r.decimal(frac_digits);
    return j;
}

json interval_json(const Interval& iv) {
    json j;
    j["lo"] = natural_json(iv.lo);
    j["hi"] = natural_json(iv.hi);
    j["hi_inclusive"] = iv.hi_inclusive;
    return j;
}

json coverage_json(const CoverageReport& rep) {
    json j;
    j["target"] = interval_json(rep.target);
    j["covered"] = rep.covered;
    json gaps = json::array();
    for (const auto& g : rep.gaps) gaps.push_back({natural_json(g.lo), natural_json(g.last())});
    j["gaps"] = std::move(gaps);
    j["gap_count"] = rep.gap_count;
    j["gaps_truncated"] = rep.gaps_truncated;
    return j;
}

Natural natural_from_json(const json& j, const char* what) {
    if (j.is_string()) return parse_natural(j.get<std::string>());
    if (j.is_number_unsigned()) return Natural(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) {
        auto v = j.get<long long>();
        if (v < 0) throw std::invalid_argument(std::string(what) + ": negative value");
        return Natural(static_cast<unsigned long>(v));
    }
    throw std::invalid_argument(std::string(what) + ": expected a nonnegative integer or string");
}

namespace {

unsigned uint_param(const json& params, const char* key, unsigned lo, unsigned hi) {
    if (!params.contains(key))
        throw std::invalid_argument(std::string("missing parameter \"") + key + "\"");
    Natural n = natural_from_json(params.at(key), key);
    auto v = to_u64(n);
    if (!v || *v < lo || *v > hi)
        throw std::invalid_argument(std::string("parameter \"") + key + "\" out of range [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<unsigned>(*v);
}

Natural natural_param(const json& params, const char* key) {
    if (!params.contains(key))
        throw std::invalid_argument(std::string("missing parameter \"") + key + "\"");
    return natural_from_json(params.at(key), key);
}

std::vector<Natural> natural_list(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<Natural> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(natural_from_json(e, what));
    return out;
}

json sequence_summary(const MonotoneSequence& s) {
    json j;
    j["size"] = s.size();
    if (!s.empty()) {
        j["min"] = natural_json(s.front());
        j["max"] = natural_json(s.back());
    }
    return j;
}

json chain_meta(const CasselsChain& chain) {
    json j;
    j["K"] = chain.spec.block_count;
    json Q = json::array(), M = json::array(), q = json::array(), m = json::array();
    for (const auto& v : chain.Q) Q.push_back(natural_json(v));
    for (const auto& v : chain.M) M.push_back(natural_json(v));
    for (std::size_t k = 0; k < chain.spec.block_count; ++k) {
        q.push_back(natural_json(chain.spec.q[k]));
        m.push_back(natural_json(chain.spec.m[k]));
    }
    j["Q"] = std::move(Q);
    j["M"] = std::move(M);
    j["q"] = std::move(q);
    j["m"] = std::move(m);
    return j;
}

BuiltConstruction build_gadic(const json& params) {
    unsigned g = uint_param(params, "g", 2, 1u << 20);
    if (!params.contains("exponents"))
        throw std::invalid_argument("g_adic requires an \"exponents\" array");
    MonotoneSequence W =
        MonotoneSequence::from_values(natural_list(params.at("exponents"), "exponents"));
    Natural bound = natural_param(params, "bound");
    BuiltConstruction out;
    out.elements = g_adic_component(GAdicSpec(g, std::move(W), std::move(bound)));
    out.meta = sequence_summary(out.elements);
    return out;
}

BuiltConstruction build_raikov_stohr(const json& params) {
    unsigned h = uint_param(params, "h", 2, 64);
    Natural bound = natural_param(params, "bound");
    BuiltConstruction out;
    out.elements = raikov_stohr(h, bound);
    out.intrinsic_order = h;
    out.meta = sequence_summary(out.elements);
    return out;
}

BuiltConstruction build_jia_nathanson(const json& params) {
    unsigned g = uint_param(params, "g", 2, 1u << 20);
    unsigned h = uint_param(params, "h", 2, 64);
    Natural bound = natural_param(params, "bound");
    BuiltConstruction out;
    if (!params.contains("parts") ||
        (params.at("parts").is_string() && params.at("parts") == "residues")) {
        out.elements = jia_nathanson(PartitionSpec::residues(g, h, bound));
    } else {
        std::vector<MonotoneSequence> parts;
        for (const auto& part : params.at("parts"))
            parts.push_back(MonotoneSequence::from_values(natural_list(part, "part")));
        out.elements = jia_nathanson(PartitionSpec(g, h, std::move(parts), bound));
    }
    out.intrinsic_order = h;
    out.meta = sequence_summary(out.elements);
    return out;
}

BuiltConstruction build_cassels_progressions(const json& params) {
    auto q = natural_list(params.at("q"), "q");
    auto m = natural_list(params.at("m"), "m");
    auto K = static_cast<std::size_t>(uint_param(params, "K", 1, 1u << 20));
    CasselsChain chain = cassels_progressions(CasselsSpec2(std::move(q), std::move(m), K));
    BuiltConstruction out;
    out.meta = chain_meta(chain);
    out.meta.update(sequence_summary(chain.elements));
    out.elements = std::move(chain.elements);
    out.intrinsic_order = 2;
    return out;
}

BuiltConstruction build_cassels_order2(const json& params) {
    auto K = static_cast<std::size_t>(uint_param(params, "K", 1, 1u << 20));
    std::vector<Natural> q;
    if (params.contains("q") && params.at("q").is_string()) {
        if (params.at("q") != "fibonacci")
            throw std::invalid_argument("q must be an array or \"fibonacci\"");
        q = fibonacci_q(K + 4);
    } else {
        q = natural_list(params.at("q"), "q");
    }
    CasselsChain chain = cassels_order2(q, K);
    BuiltConstruction out;
    out.meta = chain_meta(chain);
    out.meta.update(sequence_summary(chain.elements));
    out.elements = std::move(chain.elements);
    out.intrinsic_order = 2;
    return out;
}

BuiltConstruction build_cassels_block(const json& params) {
    unsigned h = uint_param(params, "h", 3, 64);
    BlockSpec spec(h, natural_param(params, "v"), natural_param(params, "L"));
    BuiltConstruction out;
    out.elements = cassels_block(spec);
    out.intrinsic_order = h;
    out.meta = sequence_summary(out.elements);
    out.meta["g"] = natural_json(spec.g);
    return out;
}

BuiltConstruction build_cassels_order_h(const json& params) {
    unsigned h = uint_param(params, "h", 3, 16);
    unsigned long j_max = uint_param(params, "j_max", 0, 64);
    OrderHBasis basis = cassels_order_h(h, j_max);
    BuiltConstruction out;
    out.intrinsic_order = h;
    json meta;
    meta["L"] = natural_json(basis.L);
    meta["base_top"] = natural_json(basis.base_top);
    meta["I_minus1"] = interval_json(basis.base_coverage);
    json blocks = json::array();
    for (const auto& b : basis.blocks) {
        json jb;
        jb["j"] = b.j;
        jb["v"] = natural_json(b.v);
        jb["g"] = natural_json(b.g);
        jb["p"] = natural_json(b.p);
        jb["I"] = interval_json(b.coverage);
        jb["size"] = b.elements.size();
        blocks.push_back(std::move(jb));
    }
    meta["blocks"] = std::move(blocks);
    out.meta = std::move(meta);
    out.meta.update(sequence_summary(basis.elements));
    out.elements = std::move(basis.elements);
    return out;
}

}  // namespace

BuiltConstruction build_construction(const json& spec) {
    if (!spec.is_object() || !spec.contains("construction"))
        throw std::invalid_argument("construction spec must be {\"construction\", \"params\"}");
    const std::string name = spec.at("construction").get<std::string>();
    const json params = spec.value("params", json::object());
    if (name == "g_adic") return build_gadic(params);
    if (name == "raikov_stohr") return build_raikov_stohr(params);
    if (name == "jia_nathanson") return build_jia_nathanson(params);
    if (name == "cassels_progressions") return build_cassels_progressions(params);
    if (name == "cassels_order2") return build_cassels_order2(params);
    if (name == "cassels_block") return build_cassels_block(params);
    if (name == "cassels_order_h") return build_cassels_order_h(params);
    throw std::invalid_argument("unknown construction \"" + name + "\"");
}

std::string emit_report_json(const VerificationReport& report) {
    json j;
    j["version"] = kReportSchema;
    j["artifact"] = kArtifactVersion;
    j["config"] = report.config_echo;
    j["construction_meta"] = report.construction_meta;
    if (report.coverage) j["coverage"] = coverage_json(*report.coverage);
    if (!report.metrics.is_null()) j["metrics"] = report.metrics;
    return j.dump(2) + "\n";
}

std::string growth_metrics_csv(const GrowthMetrics& gm, std::size_t frac_digits) {
    std::ostringstream os;
    os << "kind,index_or_x,value_numerator,value_denominator,value_decimal\n";
    auto row = [&](const char* kind, const std::string& ix, const std::string& num,
                   const std::string& den, const std::string& dec) {
        os << kind << ',' << ix << ',' << num << ',' << den << ',' << dec << '\n';
    };
    for (const auto& s : gm.samples) {
        row("counting", s.x.get_str(), s.count.get_str(), "1", s.count.get_str());
        row("counting_ratio", s.x.get_str(), s.ratio.radicand().get_num().get_str(),
            s.ratio.radicand().get_den().get_str(), s.ratio.decimal(frac_digits));
    }
    for (const auto& e : gm.element_ratios)
        row("element_ratio", std::to_string(e.k), e.ratio.get_num().get_str(),
            e.ratio.get_den().get_str(), RootRatio::rational(e.ratio).decimal(frac_digits));
    for (const auto& g : gm.power_gaps)
        row("gap_power", std::to_string(g.index), g.value.radicand().get_num().get_str(),
            g.value.radicand().get_den().get_str(), g.value.decimal(frac_digits));
    for (const auto& g : gm.index_gaps)
        row("gap_index", std::to_string(g.index), g.value.radicand().get_num().get_str(),
            g.value.radicand().get_den().get_str(), g.value.decimal(frac_digits));
    return os.str();
}

json growth_metrics_json(const GrowthMetrics& gm, std::size_t frac_digits) {
    json j;
    j["h"] = gm.h;
    json samples = json::array();
    for (const auto& s : gm.samples) {
        json e;
        e["x"] = natural_json(s.x);
        e["count"] = natural_json(s.count);
        e["ratio"] = rootratio_json(s.ratio, frac_digits);
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    json ratios = json::array();
    for (const auto& e : gm.element_ratios) {
        json r;
        r["k"] = e.k;
        r["a_k"] = natural_json(e.a_k);
        r["ratio"] = rational_json(e.ratio, frac_digits);
        ratios.push_back(std::move(r));
    }
    j["element_ratios"] = std::move(ratios);
    auto gaps_json = [frac_digits](const std::vector<GapSample>& gaps) {
        json out = json::array();
        for (const auto& g : gaps) {
            json e;
            e["index"] = g.index;
            e["value"] = rootratio_json(g.value, frac_digits);
            out.push_back(std::move(e));
        }
        return out;
    };
    j["gap_power"] = gaps_json(gm.power_gaps);
    j["gap_index"] = gaps_json(gm.index_gaps);
    return j;
}

}  // namespace thinbase

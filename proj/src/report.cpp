#include "conftc/report.hpp"

#include <chrono>
#include <fstream>
#include <system_error>

#include "conftc/errors.hpp"

namespace conftc {

using nlohmann::json;

WitnessReport compute_witness(int m, int l, int r) {
    WitnessReport w;
    w.m = m;
    w.l = l;
    w.r = r;
    const auto layout = TorusLayout::standard(m, l, r);
    w.value = evaluate_witness(layout);
    w.factors = static_cast<int>(witness_factors(m, l, r).size());
    w.surviving = surviving_terms(layout);
    return w;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::path_for(const ComplexParams& p) const {
    return dir_ / ("betti-" + std::string(kBoundaryConvention) + "-n" + std::to_string(p.n) + "-w" +
                   std::to_string(p.w) + ".json");
}

std::optional<BettiReport> ResultCache::load(const ComplexParams& p) const {
    std::ifstream in(path_for(p));
    if (!in) return std::nullopt;
    try {
        auto j = json::parse(in);
        if (j.value("convention", "") != kBoundaryConvention) return std::nullopt;
        auto rep = betti_from_json(j);
        if (!(rep.params == p)) return std::nullopt;
        rep.from_cache = true;
        return rep;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool ResultCache::store(const BettiReport& report) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return false;
    const auto target = path_for(report.params);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return false;
        auto j = to_json(report);
        j["convention"] = kBoundaryConvention;
        out << j.dump(2) << '\n';
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return false;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
    return !ec;
}

BettiReport compute_betti(const ComplexParams& p, const BuildOptions& options, const ResultCache* cache) {
    if (cache) {
        if (auto hit = cache->load(p)) return *hit;
    }
    const auto start = std::chrono::steady_clock::now();
    const auto complex = ChainComplexF2::build(p, options);
    BettiReport rep;
    rep.params = p;
    rep.cells = complex.cell_counts();
    rep.betti = betti(complex);
    rep.euler = euler_characteristic(rep.cells);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cache) cache->store(rep);
    return rep;
}

json to_json(const BettiReport& r) {
    return {{"n", r.params.n},       {"w", r.params.w},         {"cells", r.cells},
            {"betti", r.betti},      {"euler", r.euler},        {"top_dimension", r.params.top_dimension()},
            {"seconds", r.seconds},  {"cached", r.from_cache}};
}

BettiReport betti_from_json(const json& j) {
    BettiReport r;
    r.params = {j.at("n").get<int>(), j.at("w").get<int>()};
    r.cells = j.at("cells").get<std::vector<std::size_t>>();
    r.betti = j.at("betti").get<std::vector<std::size_t>>();
    r.euler = j.at("euler").get<long long>();
    r.seconds = j.value("seconds", 0.0);
    if (r.cells.size() != r.betti.size()) throw InvalidParams("cached report has mismatched lengths");
    return r;
}

json rational_json(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).convert_to<long long>();
    return q.str();
}

json to_json(const H1Vector& v) {
    json terms = json::array();
    for (const auto& [c, q] : v.terms()) {
        terms.push_back({{"i", c.i},
                         {"j", c.j},
                         {"left_count", c.left_count()},
                         {"left", c.left_labels()},
                         {"coeff", rational_json(q)}});
    }
    return terms;
}

json to_json(const TorusPair& p) {
    return {{"A", p.A.to_string()}, {"B", p.B.to_string()}, {"m", p.m}, {"l", p.l}};
}

json to_json(const CertificateReport& c, std::optional<int> r) {
    json chain = {{"status", to_string(c.disjoint_chain.status)}};
    if (!c.disjoint_chain.reason.empty()) chain["reason"] = c.disjoint_chain.reason;
    json j = {{"n", c.params.n},
              {"w", c.params.w},
              {"pair", to_json(c.pair)},
              {"basis_form_A", c.basis_form_A},
              {"basis_form_B", c.basis_form_B},
              {"decomposable_A", c.decomposable_A},
              {"decomposable_B", c.decomposable_B},
              {"disjoint_symbolic", c.disjoint_symbolic},
              {"structure_check", c.structure_check},
              {"structure_ok", c.structure_ok},
              {"disjoint_chain", chain},
              {"passed", c.passed()}};
    if (r) {
        j["r"] = *r;
        if (auto b = c.lower_bound(*r)) j["lower_bound"] = *b;
    }
    return j;
}

json to_json(const TCReport& t) {
    return {{"n", t.n},
            {"w", t.w},
            {"r", t.r},
            {"hdim", t.hdim},
            {"upper_bgrt", t.upper_bgrt},
            {"lower_tori", t.lower_tori ? json(*t.lower_tori) : json(nullptr)},
            {"tc", t.tc},
            {"dtc", t.dtc},
            {"case", to_string(t.kind)},
            {"provenance", t.provenance},
            {"gap_note", t.gap_note}};
}

json to_json(const WitnessReport& w) {
    json terms = json::array();
    for (const auto& s : w.surviving) {
        terms.push_back({{"ambient", s.ambient}, {"coeff", rational_json(s.ambient_coeff)},
                         {"value", rational_json(s.value)}});
    }
    return {{"m", w.m},
            {"l", w.l},
            {"r", w.r},
            {"value", rational_json(w.value)},
            {"factors", w.factors},
            {"surviving_terms", terms},
            {"ok", w.ok()}};
}

json to_json(const ReferenceValue& v) {
    return {{"space", v.space},
            {"params", v.params},
            {"invariant", v.invariant},
            {"value", v.value},
            {"citation", v.citation}};
}

}  // namespace conftc

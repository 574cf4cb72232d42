#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "conftc/certificates.hpp"
#include "conftc/chains.hpp"
#include "conftc/exterior.hpp"
#include "conftc/tc_report.hpp"
#include "conftc/wheels.hpp"

namespace conftc {

/// Tag of the boundary convention; part of every cache file name so a change
/// of convention never reads stale results.
inline constexpr const char* kBoundaryConvention = "riffle-v1";

struct BettiReport {
    ComplexParams params;
    std::vector<std::size_t> cells;
    std::vector<std::size_t> betti;
    long long euler = 0;
    double seconds = 0;
    bool from_cache = false;
};

struct WitnessReport {
    int m = 1;
    int l = 1;
    int r = 2;
    Rational value;
    int factors = 0;
    std::vector<SurvivingTerm> surviving;

    bool ok() const { return (value == 1 || value == -1) && surviving.size() == 1; }
};

WitnessReport compute_witness(int m, int l, int r);

/// One JSON file per (n, w) in a directory.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    std::filesystem::path path_for(const ComplexParams& p) const;
    std::optional<BettiReport> load(const ComplexParams& p) const;
    /// Returns false (and leaves no partial file) when the directory is not writable.
    bool store(const BettiReport& report) const;

private:
    std::filesystem::path dir_;
};

/// Builds the complex unless the cache already has the answer.
BettiReport compute_betti(const ComplexParams& p, const BuildOptions& options = {},
                          const ResultCache* cache = nullptr);

nlohmann::json to_json(const BettiReport& r);
BettiReport betti_from_json(const nlohmann::json& j);
nlohmann::json to_json(const H1Vector& v);
nlohmann::json to_json(const TorusPair& p);
/// Includes "lower_bound" for the given r when it is reported.
nlohmann::json to_json(const CertificateReport& c, std::optional<int> r = std::nullopt);
nlohmann::json to_json(const TCReport& t);
nlohmann::json to_json(const WitnessReport& w);
nlohmann::json to_json(const ReferenceValue& v);

/// Exact rational as an integer when integral, else "p/q".
nlohmann::json rational_json(const Rational& q);

}  // namespace conftc

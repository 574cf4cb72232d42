// conftc: Betti numbers, disjoint-tori certificates and TC values of conf(n, w).

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "conftc/certificates.hpp"
#include "conftc/chains.hpp"
#include "conftc/errors.hpp"
#include "conftc/exterior.hpp"
#include "conftc/report.hpp"
#include "conftc/symbols.hpp"
#include "conftc/tc_report.hpp"

using nlohmann::json;
using namespace conftc;

namespace {

enum Exit { kOk = 0, kUsage = 1, kResource = 2, kVerification = 3 };

struct RunConfig {
    std::size_t memory_budget_bytes = BuildOptions{}.memory_budget_bytes;
    std::string cache_dir;
    unsigned threads = 1;
    std::string format = "json";

    BuildOptions build() const {
        BuildOptions b;
        b.memory_budget_bytes = memory_budget_bytes;
        return b;
    }
};

// "4096", "512M", "4G"
std::optional<std::size_t> parse_bytes(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    const std::string suffix = text.substr(pos);
    int shift = 0;
    if (suffix == "K" || suffix == "k") shift = 10;
    else if (suffix == "M" || suffix == "m") shift = 20;
    else if (suffix == "G" || suffix == "g") shift = 30;
    else if (!suffix.empty()) return std::nullopt;
    if (value == 0) return std::nullopt;
    return static_cast<std::size_t>(value) << shift;
}

void emit(const RunConfig& cfg, const json& j) {
    if (cfg.format == "json") {
        std::cout << j.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

int cmd_betti(const RunConfig& cfg, int n, int w) {
    std::optional<ResultCache> cache;
    if (!cfg.cache_dir.empty()) cache.emplace(cfg.cache_dir);
    const auto rep = compute_betti({n, w}, cfg.build(), cache ? &*cache : nullptr);
    emit(cfg, to_json(rep));
    return kOk;
}

int cmd_cells(const RunConfig& cfg, int n, int w, std::optional<int> list_dimension) {
    const ComplexParams p{n, w};
    p.validate();
    std::vector<std::uint64_t> counts;
    for (int d = 0; d < n; ++d) {
        const auto c = count_cells(p, d);
        if (c == 0) break;
        counts.push_back(c);
    }
    const int top = static_cast<int>(counts.size()) - 1;
    json j = {{"n", n},
              {"w", w},
              {"cells", counts},
              {"top_dimension", top},
              {"expected_top_dimension", p.top_dimension()},
              {"formula_ok", top == p.top_dimension()}};
    if (list_dimension) {
        std::vector<std::string> names;
        for (const auto& s : enumerate_cells(p, *list_dimension)) names.push_back(s.to_string());
        j["listed"] = names;
    }
    emit(cfg, j);
    return top == p.top_dimension() ? kOk : kVerification;
}

int cmd_certify(const RunConfig& cfg, int n, int w, int r, const std::string& verify) {
    VerifyOptions o;
    o.mode = parse_verify_mode(verify);
    o.build = cfg.build();
    const auto rep = verify_certificate({n, w}, o);
    emit(cfg, to_json(rep, r));
    bool ok = rep.passed();
    if ((o.mode == VerifyMode::chain || o.mode == VerifyMode::both) &&
        rep.disjoint_chain.status != CheckStatus::passed) {
        ok = false;
    }
    return ok ? kOk : kVerification;
}

int cmd_tc(const RunConfig& cfg, int n, int w, int r) {
    TCOptions o;
    o.build = cfg.build();
    const auto rep = dtc_value(n, w, r, o);
    emit(cfg, to_json(rep));
    return rep.consistent() && rep.lower_tori ? kOk : kVerification;
}

int cmd_witness(const RunConfig& cfg, int m, int l, int r) {
    const auto rep = compute_witness(m, l, r);
    emit(cfg, to_json(rep));
    return rep.ok() ? kOk : kVerification;
}

int cmd_reference(const RunConfig& cfg, const std::string& space, int n, int k, int r) {
    json out = json::array();
    for (const auto& v : reference_values({space, n, k, r})) out.push_back(to_json(v));
    if (cfg.format == "json") {
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& v : out) std::cout << v["space"].get<std::string>() << ' ' << v["params"].dump() << ' '
                                            << v["invariant"].get<std::string>() << " = " << v["value"] << '\n';
    }
    return kOk;
}

// One (n, w) job of verify-all.
struct GridRow {
    ComplexParams p;
    std::vector<std::size_t> cells;
    std::vector<std::size_t> betti;
    bool boundary_ok = false;
    bool top_ok = false;
    bool euler_ok = false;
    std::string certificate = "n/a";
    std::string chain = "n/a";
    std::string tc = "n/a";
    std::string error;
    bool ok = false;
};

std::vector<std::size_t> falling_product(int n) {
    std::vector<std::size_t> coeffs{1};
    for (int k = 1; k < n; ++k) {
        std::vector<std::size_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i];
            next[i + 1] += coeffs[i] * static_cast<std::size_t>(k);
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

GridRow run_job(const RunConfig& cfg, ComplexParams p) {
    GridRow row;
    row.p = p;
    try {
        const auto complex = ChainComplexF2::build(p, cfg.build());
        row.cells = complex.cell_counts();
        row.betti = betti(complex);
        row.boundary_ok = complex.boundary_squared_zero();
        const int top = p.top_dimension();
        int top_betti = 0;
        for (std::size_t d = 0; d < row.betti.size(); ++d) {
            if (row.betti[d] != 0) top_betti = static_cast<int>(d);
        }
        row.top_ok = complex.top_dimension() == top && top_betti == top;
        long long alt = 0;
        for (std::size_t d = 0; d < row.betti.size(); ++d) {
            alt += (d % 2 ? -1 : 1) * static_cast<long long>(row.betti[d]);
        }
        row.euler_ok = alt == euler_characteristic(row.cells);
        bool ok = row.boundary_ok && row.top_ok && row.euler_ok;
        if (p.n == p.w && p.n <= 6) ok = ok && row.betti == falling_product(p.n);

        if (p.n >= 2 && p.w >= 2) {
            VerifyOptions vo;
            vo.build = cfg.build();
            vo.complex = &complex;
            const auto cert = verify_certificate(p, vo);
            row.certificate = cert.passed() ? "pass" : "FAIL";
            row.chain = to_string(cert.disjoint_chain.status);
            ok = ok && cert.passed();

            bool tc_ok = true;
            std::string values;
            for (int r = 2; r <= 5; ++r) {
                TCOptions to;
                to.complex = &complex;
                const auto t = dtc_value(p.n, p.w, r, to);
                const int expect = p.n > p.w ? r * top : r * (p.n - 1) - 1;
                tc_ok = tc_ok && t.consistent() && t.lower_tori && *t.lower_tori == expect && t.tc == expect &&
                        t.dtc == expect;
                values += (values.empty() ? "" : ",") + std::to_string(t.tc);
            }
            row.tc = values;
            ok = ok && tc_ok;
        }
        row.ok = ok;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_verify_all(const RunConfig& cfg, int max_n, bool with_8_2) {
    std::vector<ComplexParams> grid;
    for (int n = 1; n <= max_n; ++n) {
        for (int w = 1; w <= std::max(n, 5); ++w) {
            if (w <= n || n >= 2) grid.push_back({n, w});
        }
    }
    if (with_8_2) grid.push_back({8, 2});
    std::sort(grid.begin(), grid.end(), [](const auto& a, const auto& b) {
        return a.n != b.n ? a.n < b.n : a.w < b.w;
    });
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<GridRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) rows[i] = run_job(cfg, grid[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, cfg.threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool witnesses_ok = true;
    int witness_count = 0;
    for (int m = 1; m <= 4; ++m) {
        for (int l = 1; l <= m; ++l) {
            for (int r = 2; r <= 4; ++r) {
                witnesses_ok = witnesses_ok && compute_witness(m, l, r).ok();
                ++witness_count;
            }
        }
    }

    const bool all_ok = witnesses_ok && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok; });
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            json j = {{"n", r.p.n},         {"w", r.p.w},           {"cells", r.cells},
                      {"betti", r.betti},   {"boundary_ok", r.boundary_ok}, {"top_ok", r.top_ok},
                      {"euler_ok", r.euler_ok}, {"certificate", r.certificate}, {"chain", r.chain},
                      {"tc_r2_to_r5", r.tc}, {"ok", r.ok}};
            if (!r.error.empty()) j["error"] = r.error;
            out.push_back(j);
        }
        std::cout << json{{"grid", out}, {"witnesses", witness_count}, {"witnesses_ok", witnesses_ok},
                          {"ok", all_ok}}
                         .dump()
                  << '\n';
    } else {
        std::printf("%3s %3s %-32s %-4s %-4s %-5s %-8s %-12s %s\n", "n", "w", "betti", "d2=0", "top", "cert",
                    "chain", "tc r=2..5", "status");
        for (const auto& r : rows) {
            std::printf("%3d %3d %-32s %-4s %-4s %-5s %-8s %-12s %s\n", r.p.n, r.p.w, join(r.betti).c_str(),
                        r.boundary_ok ? "yes" : "NO", r.top_ok ? "yes" : "NO", r.certificate.c_str(),
                        r.chain.c_str(), r.tc.c_str(), r.ok ? "ok" : ("FAIL " + r.error).c_str());
        }
        std::printf("witness grid: %d evaluations, %s\n", witness_count, witnesses_ok ? "all +-1" : "FAIL");
    }
    return all_ok ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology, disjoint-tori certificates and sequential TC of disks in a strip"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* dir = std::getenv("CONFTC_CACHE_DIR")) cfg.cache_dir = dir;
    if (const char* budget = std::getenv("CONFTC_MEMORY_BUDGET")) {
        if (auto b = parse_bytes(budget)) {
            cfg.memory_budget_bytes = *b;
        } else {
            std::cerr << "error: CONFTC_MEMORY_BUDGET must be a positive byte count (suffix K, M or G allowed)\n";
            return kUsage;
        }
    }
    std::string budget_text;
    // global options may also follow the subcommand
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached Betti results");
    app.add_option("--memory-budget", budget_text, "Memory budget in bytes (K, M, G suffixes)");
    app.add_option("--threads", cfg.threads, "Parallel jobs for verify-all")->check(CLI::PositiveNumber);

    int n = 0, w = 0, r = 2, m = 0, l = 0, k = 2;
    std::string verify = "auto", space;
    std::optional<int> list_dimension;
    int max_n = 7;
    bool with_8_2 = false;

    auto* betti_cmd = app.add_subcommand("betti", "Cell counts, Betti numbers and Euler characteristic");
    betti_cmd->add_option("-n,--n", n, "Number of disks")->required();
    betti_cmd->add_option("-w,--w", w, "Strip width")->required();

    auto* cells_cmd = app.add_subcommand("cells", "Cell counts per dimension");
    cells_cmd->add_option("-n,--n", n)->required();
    cells_cmd->add_option("-w,--w", w)->required();
    cells_cmd->add_option("--list", list_dimension, "Print the cells of this dimension");

    auto* certify_cmd = app.add_subcommand("certify", "Build and verify the disjoint tori");
    certify_cmd->add_option("-n,--n", n)->required();
    certify_cmd->add_option("-w,--w", w)->required();
    certify_cmd->add_option("-r,--r", r, "Number of stops")->check(CLI::Range(2, 1000));
    certify_cmd->add_option("--verify", verify, "symbolic, chain, both or auto")
        ->check(CLI::IsMember({"symbolic", "chain", "both", "auto"}));

    auto* tc_cmd = app.add_subcommand("tc", "TC_r and dTC_r with bounds and provenance");
    tc_cmd->add_option("-n,--n", n)->required();
    tc_cmd->add_option("-w,--w", w)->required();
    tc_cmd->add_option("-r,--r", r)->required();

    auto* witness_cmd = app.add_subcommand("witness", "Evaluate the zero-divisor product on the tori");
    witness_cmd->add_option("-m,--m", m)->required();
    witness_cmd->add_option("-l,--l", l)->required();
    witness_cmd->add_option("-r,--r", r)->required();

    auto* reference_cmd = app.add_subcommand("reference", "Tabulated values for comparison spaces");
    reference_cmd->add_option("--space", space, "F, conf or uconf")->required();
    reference_cmd->add_option("-n,--n", n)->required();
    reference_cmd->add_option("-k,--k", k, "m for F_n(R^m), w for conf and uconf");
    reference_cmd->add_option("-r,--r", r);

    auto* all_cmd = app.add_subcommand("verify-all", "Run the full verification grid");
    all_cmd->add_option("--max-n", max_n, "Largest n in the grid")->check(CLI::Range(1, 8));
    all_cmd->add_flag("--with-8-2", with_8_2, "Also build cell(8,2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (!budget_text.empty()) {
        auto b = parse_bytes(budget_text);
        if (!b) {
            std::cerr << "error: --memory-budget must be a positive byte count\n";
            return kUsage;
        }
        cfg.memory_budget_bytes = *b;
    }

    try {
        if (*betti_cmd) return cmd_betti(cfg, n, w);
        if (*cells_cmd) return cmd_cells(cfg, n, w, list_dimension);
        if (*certify_cmd) return cmd_certify(cfg, n, w, r, verify);
        if (*tc_cmd) return cmd_tc(cfg, n, w, r);
        if (*witness_cmd) return cmd_witness(cfg, m, l, r);
        if (*reference_cmd) return cmd_reference(cfg, space, n, k, r);
        if (*all_cmd) return cmd_verify_all(cfg, max_n, with_8_2);
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotApplicable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnknownSpace& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return kResource;
    }
    return kUsage;
}

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.
#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conftc/certificates.hpp"
#include "conftc/chains.hpp"
#include "conftc/exterior.hpp"
#include "conftc/tc_report.hpp"

using namespace conftc;

namespace {

// Tolerances.
constexpr double kValiditySeconds = 300;
constexpr double kWitnessSeconds = 30;
constexpr double kPerfSeconds = 120;
constexpr double kPerfBytes = 4.0 * (1ull << 30);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

double peak_rss_bytes() {
    rusage u{};
    getrusage(RUSAGE_SELF, &u);
    return static_cast<double>(u.ru_maxrss) * 1024.0;  // kB on Linux
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

Outcome complex_validity() {
    Outcome o;
    const auto start = Clock::now();
    for (int n = 1; n <= 7; ++n) {
        for (int w = 1; w <= n; ++w) {
            const auto c = ChainComplexF2::build({n, w});
            o.expect(c.boundary_squared_zero(), "d^2 != 0 for (" + std::to_string(n) + "," + std::to_string(w) + ")");
        }
    }
    const double s = seconds_since(start);
    o.expect(s < kValiditySeconds, "took " + std::to_string(s) + " s");
    if (o.ok) o.detail = std::to_string(s) + " s";
    return o;
}

Outcome known_betti() {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::size_t> poly{1};
        for (int k = 1; k < n; ++k) {
            std::vector<std::size_t> next(poly.size() + 1, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i];
                next[i + 1] += poly[i] * static_cast<std::size_t>(k);
            }
            poly = next;
        }
        o.expect(betti(ChainComplexF2::build({n, n})) == poly, "n=" + std::to_string(n));
    }
    return o;
}

Outcome dimension_formula() {
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
        for (int w = 1; w <= n; ++w) {
            const int expect = n - ceil_div(n, w);
            const auto c = ChainComplexF2::build({n, w});
            const auto b = betti(c);
            int top_betti = -1;
            for (std::size_t d = 0; d < b.size(); ++d) {
                if (b[d] != 0) top_betti = static_cast<int>(d);
            }
            const std::string at = "(" + std::to_string(n) + "," + std::to_string(w) + ")";
            o.expect(c.top_dimension() == expect, "top cell dimension at " + at);
            o.expect(c.cell_count(expect) > 0, "empty top dimension at " + at);
            o.expect(top_betti == expect, "top Betti index at " + at);
        }
    }
    return o;
}

Outcome certificate_suite() {
    Outcome o;
    auto check = [&](int n, int w) {
        VerifyOptions opt;
        // the chain oracle is required for w = 2 (n <= 8) and w = 3 (n <= 7)
        const bool chain = (w == 2 && n <= 8) || (w == 3 && n <= 7);
        opt.mode = chain ? VerifyMode::both : VerifyMode::automatic;
        const auto rep = verify_certificate({n, w}, opt);
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(w) + ")";
        o.expect(rep.decomposable_A && rep.decomposable_B, "decomposability at " + at);
        o.expect(rep.disjoint_symbolic, "symbolic disjointness at " + at);
        if (chain) o.expect(rep.disjoint_chain.status == CheckStatus::passed, "chain oracle disagrees at " + at);
    };
    for (int n = 3; n <= 7; ++n) {
        for (int w = 2; w < n; ++w) check(n, w);
    }
    for (int w = 2; w <= 5; ++w) {
        for (int n = 2; n <= w; ++n) check(n, w);
    }
    check(8, 2);
    return o;
}

Outcome large_case() {
    Outcome o;
    for (int n = 3; n <= 7; ++n) {
        for (int w = 2; w < n; ++w) {
            for (int r = 2; r <= 5; ++r) {
                const auto t = dtc_value(n, w, r);
                const int expect = r * (n - ceil_div(n, w));
                const std::string at = "(" + std::to_string(n) + "," + std::to_string(w) + "," + std::to_string(r) + ")";
                o.expect(t.lower_tori && *t.lower_tori == expect, "lower bound at " + at);
                o.expect(t.upper_bgrt == expect, "upper bound at " + at);
                o.expect(t.tc == expect && t.dtc == expect, "value at " + at);
            }
        }
    }
    o.expect(tc_value(7, 3, 2).tc == 8, "(7,3,2)");
    o.expect(tc_value(7, 3, 3).tc == 12, "(7,3,3)");
    for (int r = 2; r <= 5; ++r) o.expect(tc_value(3, 2, r).tc == r, "(3,2,r)");
    return o;
}

Outcome small_case() {
    Outcome o;
    for (int w = 2; w <= 5; ++w) {
        for (int n = 2; n <= w; ++n) {
            for (int r = 2; r <= 5; ++r) {
                const auto t = dtc_value(n, w, r);
                const std::string at = "(" + std::to_string(n) + "," + std::to_string(w) + "," + std::to_string(r) + ")";
                o.expect(t.dtc == r * (n - 1) - 1, "value at " + at);
                o.expect(t.lower_tori && *t.lower_tori == (r - 1) * (n - 1) + (n - 2), "lower bound at " + at);
                o.expect(t.certificate && t.certificate->pair.A.to_string() == build_tori({n, w}).A.to_string(),
                         "pair at " + at);
            }
        }
    }
    return o;
}

Outcome witness_grid() {
    Outcome o;
    const auto start = Clock::now();
    for (int m = 1; m <= 4; ++m) {
        for (int l = 1; l <= m; ++l) {
            for (int r = 2; r <= 4; ++r) {
                const Rational v = evaluate_witness(m, l, r);
                const std::string at = "(" + std::to_string(m) + "," + std::to_string(l) + "," + std::to_string(r) + ")";
                o.expect(v == 1 || v == -1, "value at " + at);
                o.expect(surviving_terms(m, l, r).size() == 1, "surviving terms at " + at);
            }
        }
    }
    const double s = seconds_since(start);
    o.expect(s < kWitnessSeconds, "took " + std::to_string(s) + " s");
    if (o.ok) o.detail = std::to_string(s) + " s";
    return o;
}

Outcome performance() {
    Outcome o;
    const auto start = Clock::now();
    const auto c = ChainComplexF2::build({8, 2});
    const auto b = betti(c);
    const double s = seconds_since(start);
    const double rss = peak_rss_bytes();
    std::size_t cells = 0;
    for (auto k : c.cell_counts()) cells += k;
    o.expect(b.size() == 5 && b[0] == 1, "unexpected Betti vector");
    o.expect(s < kPerfSeconds, "took " + std::to_string(s) + " s");
    o.expect(rss < kPerfBytes, "peak RSS " + std::to_string(rss / (1 << 20)) + " MiB");
    if (o.ok) {
        o.detail = std::to_string(cells) + " cells, " + std::to_string(s) + " s, peak RSS " +
                   std::to_string(static_cast<long>(rss / (1 << 20))) + " MiB";
    }
    return o;
}

Outcome reference_tables() {
    Outcome o;
    auto value = [](const ReferenceQuery& q, const char* invariant) {
        for (const auto& v : reference_values(q)) {
            if (v.invariant == invariant) return v.value;
        }
        return -1;
    };
    for (int n = 2; n <= 10; ++n) {
        const std::string at = "n=" + std::to_string(n);
        o.expect(value({"F", n, 2, 2}, "TC_r") == 2 * n - 3, "TC(F_n(R^2)) " + at);
        for (int m = 2; m <= 5; ++m) {
            o.expect(value({"F", n, m, 2}, "TC_r") == (m % 2 == 0 ? 2 * n - 3 : 2 * n - 2), "TC(F_n(R^m)) " + at);
        }
        for (int r = 2; r <= 5; ++r) {
            o.expect(value({"F", n, 2, r}, "TC_r") == r * (n - 1) - 1, "TC_r, m even, " + at);
            o.expect(value({"F", n, 3, r}, "TC_r") == r * (n - 1), "TC_r, m odd, " + at);
            o.expect(value({"F", n, 2, r}, "dTC_r") == r * (n - 1) - 1, "dTC_r(F_n(R^2)) " + at);
        }
        for (int w = 2; w <= 5; ++w) {
            o.expect(value({"conf", n, w, 2}, "TC_r") == (n <= w ? 2 * n - 3 : 2 * (n - ceil_div(n, w))),
                     "TC(conf(n,w)) " + at);
        }
    }
    for (int m = 1; m <= 5; ++m) {
        for (int r = 2; r <= 5; ++r) {
            o.expect(value({"uconf", 2 * m + 1, 2, r}, "TC_r") == r * m, "TC_r(uconf)");
            o.expect(value({"uconf", 2 * m + 1, 2, r}, "dTC_r") == r * m, "dTC_r(uconf)");
        }
    }
    o.expect(value({"F", 3, 2, 2}, "TC_r") == 3, "F_3(R^2)");
    o.expect(value({"uconf", 5, 2, 3}, "TC_r") == 6, "uconf(5,2), r=3");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"complex validity", complex_validity},
        {"known-space Betti", known_betti},
        {"dimension formula", dimension_formula},
        {"certificate suite", certificate_suite},
        {"n > w values", large_case},
        {"n <= w distributional case", small_case},
        {"zero-divisor witness", witness_grid},
        {"cell(8,2) performance", performance},
        {"reference tables", reference_tables},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s %d %s%s%s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.empty() ? "" : ": ",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}

#include "conftc/certificates.hpp"

#include <algorithm>
#include <set>

#include "conftc/errors.hpp"
#include "conftc/rational.hpp"

namespace conftc {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<int> descending(int from, int to) {
    std::vector<int> out;
    for (int k = from; k >= to; --k) out.push_back(k);
    return out;
}

WheelProduct assemble(std::vector<std::vector<int>> factors, const ComplexParams& params, const char* name) {
    std::vector<Wheel> wheels;
    try {
        for (auto& f : factors) wheels.emplace_back(std::move(f));
        return WheelProduct(std::move(wheels), params);
    } catch (const InvalidParams& e) {
        throw ConstructionError(std::string("torus ") + name + " for (n,w)=(" + std::to_string(params.n) + "," +
                                std::to_string(params.w) + ") is not a valid wheel product: " + e.what());
    }
}

struct Layout {
    std::vector<std::vector<int>> a;
    std::vector<std::vector<int>> b;
    // (lead, member) coordinates of the projection check, w > 2 only
    std::vector<std::pair<int, int>> projection;
};

Layout layout_two(int n) {
    Layout t;
    if (n % 2 == 0) {
        const int h = n / 2;
        for (int k = 1; k <= h; ++k) t.a.push_back({n - k + 1, h - k + 1});
        t.b.push_back({n, 1});
        for (int k = 2; k <= h; ++k) t.b.push_back({n - k + 1, h - k + 2});
    } else {
        const int h = (n - 1) / 2;
        for (int k = 1; k <= h; ++k) t.a.push_back({n - k + 1, h - k + 1});
        t.a.push_back({(n + 1) / 2});
        for (int k = 1; k <= h; ++k) t.b.push_back({n - k, h - k + 1});
        t.b.push_back({n});
    }
    return t;
}

Layout layout_wide(int n, int w) {
    const int m = ceil_div(n, w);
    if (m < 2) throw ConstructionError("wide construction needs at least two wheels");
    std::vector<std::vector<int>> chunks;
    for (int label = n - m; label >= 1; --label) {
        if (chunks.empty() || static_cast<int>(chunks.back().size()) == w - 1) chunks.emplace_back();
        chunks.back().push_back(label);
    }
    if (static_cast<int>(chunks.size()) > m) {
        throw ConstructionError("members of (" + std::to_string(n) + "," + std::to_string(w) +
                                ") do not fit into " + std::to_string(m) + " wheels");
    }
    chunks.resize(static_cast<std::size_t>(m));

    Layout t;
    for (int k = 1; k <= m; ++k) {
        const auto& chunk = chunks[static_cast<std::size_t>(k - 1)];
        std::vector<int> wa{n - k + 1};
        wa.insert(wa.end(), chunk.begin(), chunk.end());
        for (int c : chunk) t.projection.emplace_back(n - k + 1, c);
        t.a.push_back(std::move(wa));

        std::vector<int> wb{k < m ? n - k : n};
        wb.insert(wb.end(), chunk.begin(), chunk.end());
        t.b.push_back(std::move(wb));
    }
    return t;
}

Layout layout_for(const ComplexParams& p) {
    if (p.n <= p.w) {
        Layout t;
        t.a.push_back(descending(p.n, 1));
        t.b.push_back(descending(p.n - 1, 1));
        t.b.push_back({p.n});
        return t;
    }
    return p.w == 2 ? layout_two(p.n) : layout_wide(p.n, p.w);
}

void check_applicable(const ComplexParams& p) {
    p.validate();
    if (p.n == 1) throw NotApplicable("conf(1,w) is contractible; no certificate is needed");
    if (p.w == 1) throw NotApplicable("no disjoint-tori certificate for w = 1");
    if (p.n > 32) throw InvalidParams("wheel labels are limited to n <= 32");
}

std::set<H1BasisClass> support_of(const std::vector<H1Vector>& vs) {
    std::set<H1BasisClass> out;
    for (const auto& v : vs) {
        for (const auto& [c, q] : v.terms()) out.insert(c);
    }
    return out;
}

// Coefficients of `vs` on the given coordinates.
std::vector<std::vector<Rational>> restrict_to(const std::vector<H1Vector>& vs,
                                               const std::vector<H1BasisClass>& coords) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vs) {
        std::vector<Rational> row;
        for (const auto& c : coords) {
            auto it = v.terms().find(c);
            row.push_back(it == v.terms().end() ? Rational(0) : it->second);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t total_cells(const ComplexParams& p) {
    std::size_t total = 0;
    for (int d = 0; d <= p.top_dimension(); ++d) total += count_cells(p, d);
    return total;
}

}  // namespace

TorusPair build_tori(const ComplexParams& params) {
    check_applicable(params);
    auto layout = layout_for(params);
    TorusPair pair{assemble(std::move(layout.a), params, "A"), assemble(std::move(layout.b), params, "B"), 0, 0};
    pair.m = pair.A.torus_dimension();
    pair.l = pair.B.torus_dimension();

    const bool wide = params.n > params.w;
    const int expect_m = wide ? params.top_dimension() : params.n - 1;
    const int expect_l = wide ? expect_m : params.n - 2;
    if (pair.m != expect_m || pair.l != expect_l) {
        throw ConstructionError("tori for (" + std::to_string(params.n) + "," + std::to_string(params.w) +
                                ") have dimensions " + std::to_string(pair.m) + "," + std::to_string(pair.l));
    }
    return pair;
}

int lower_bound(int m, int l, int r) {
    if (l < 0 || m < l) throw InvalidParams("lower bound needs m >= l >= 0");
    if (r < 2) throw InvalidParams("lower bound needs r >= 2");
    return (r - 1) * m + l;
}

bool chain_check_eligible(const ComplexParams& params, std::size_t cell_limit) {
    if (params.n > 12) return false;
    return total_cells(params) <= cell_limit;
}

bool CertificateReport::passed() const {
    return decomposable_A && decomposable_B && disjoint_symbolic &&
           structure_ok && disjoint_chain.status != CheckStatus::failed;
}

std::optional<int> CertificateReport::lower_bound(int r) const {
    if (!(decomposable_A && decomposable_B && disjoint_symbolic)) return std::nullopt;
    return conftc::lower_bound(pair.m, pair.l, r);
}

CertificateReport verify_certificate(const ComplexParams& params, const VerifyOptions& options) {
    check_applicable(params);
    auto layout = layout_for(params);
    CertificateReport rep{params, build_tori(params), false, false, false, false, false, "none", true, {}};
    const auto& pair = rep.pair;

    rep.basis_form_A = is_basis_form(pair.A);
    rep.basis_form_B = is_basis_form(pair.B);
    const auto image_a = product_h1_image(pair.A);
    const auto image_b = product_h1_image(pair.B);
    rep.decomposable_A = h1_rank(image_a) == static_cast<std::size_t>(pair.m);
    rep.decomposable_B = h1_rank(image_b) == static_cast<std::size_t>(pair.l);
    rep.disjoint_symbolic = spans_disjoint(image_a, image_b);

    if (params.n > params.w && params.w == 2) {
        rep.structure_check = "support";
        const auto sa = support_of(image_a);
        const auto sb = support_of(image_b);
        rep.structure_ok = std::none_of(sa.begin(), sa.end(), [&](const auto& c) { return sb.count(c) > 0; });
    } else if (params.n > params.w) {
        rep.structure_check = "projection";
        std::vector<H1BasisClass> coords;
        for (auto [lead, member] : layout.projection) coords.push_back(H1BasisClass::make(lead, member, 0, params));
        const auto rows_b = restrict_to(image_b, coords);
        const bool b_vanishes = std::all_of(rows_b.begin(), rows_b.end(), [](const auto& row) {
            return std::all_of(row.begin(), row.end(), [](const Rational& q) { return q == 0; });
        });
        rep.structure_ok = rational_rank(restrict_to(image_a, coords)) == static_cast<std::size_t>(pair.m) &&
                           b_vanishes;
    }

    bool run_chain = false;
    switch (options.mode) {
        case VerifyMode::symbolic:
            rep.disjoint_chain.reason = "not requested";
            break;
        case VerifyMode::chain:
        case VerifyMode::both:
            run_chain = true;
            break;
        case VerifyMode::automatic:
            run_chain = (options.complex && options.complex->params() == params) ||
                        chain_check_eligible(params, options.chain_cell_limit);
            if (!run_chain) {
                rep.disjoint_chain.reason =
                    "cell complex exceeds " + std::to_string(options.chain_cell_limit) + " cells";
            }
            break;
    }
    if (!run_chain) return rep;

    std::optional<ChainComplexF2> owned;
    const ChainComplexF2* complex = options.complex;
    if (!complex || !(complex->params() == params)) {
        owned.emplace(ChainComplexF2::build(params, options.build));
        complex = &*owned;
    }
    std::vector<ChainVector> cycles;
    for (const auto* image : {&image_a, &image_b}) {
        for (const auto& v : *image) cycles.push_back(vector_to_cycle(v, *complex));
    }
    const bool independent = classes_independent(cycles, *complex);
    rep.disjoint_chain.status = independent ? CheckStatus::passed : CheckStatus::failed;
    rep.disjoint_chain.reason.clear();
    return rep;
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed: return "passed";
        case CheckStatus::failed: return "failed";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

const char* to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::symbolic: return "symbolic";
        case VerifyMode::chain: return "chain";
        case VerifyMode::both: return "both";
        case VerifyMode::automatic: return "auto";
    }
    return "?";
}

VerifyMode parse_verify_mode(const std::string& text) {
    if (text == "symbolic") return VerifyMode::symbolic;
    if (text == "chain") return VerifyMode::chain;
    if (text == "both") return VerifyMode::both;
    if (text == "auto") return VerifyMode::automatic;
    throw InvalidParams("verify mode must be symbolic, chain, both or auto");
}

}  // namespace conftc

#include "conftc/tc_report.hpp"

#include "conftc/errors.hpp"

namespace conftc {

int bgrt_upper(int hdim, int conn, int r) {
    if (hdim < 0 || conn < 0) throw InvalidParams("hdim and conn must be non-negative");
    if (r < 2) throw InvalidParams("r must be at least 2");
    return r * hdim / (conn + 1);
}

const char* to_string(TCCase c) {
    switch (c) {
        case TCCase::contractible: return "n=1";
        case TCCase::small: return "n<=w";
        case TCCase::large: return "n>w";
    }
    return "?";
}

bool TCReport::consistent() const {
    if (lower_tori && *lower_tori > tc) return false;
    return tc <= upper_bgrt && dtc <= tc;
}

namespace {

TCReport assemble(int n, int w, int r, const TCOptions& options) {
    const ComplexParams params{n, w};
    params.validate();
    if (w == 1) throw NotApplicable("conf(n,1) is outside the supported domain");
    if (r < 2) throw InvalidParams("r must be at least 2");

    TCReport rep;
    rep.n = n;
    rep.w = w;
    rep.r = r;
    rep.hdim = params.top_dimension();
    if (options.complex) {
        if (!(options.complex->params() == params)) throw DimensionMismatch("complex built for other (n,w)");
        if (options.complex->top_dimension() != rep.hdim) {
            throw DimensionMismatch("complex top dimension " + std::to_string(options.complex->top_dimension()) +
                                    " differs from n - ceil(n/w) = " + std::to_string(rep.hdim));
        }
        rep.provenance.push_back("hdim read from the cell complex");
    } else {
        rep.provenance.push_back("hdim = n - ceil(n/w)");
    }
    rep.upper_bgrt = bgrt_upper(rep.hdim, rep.conn, r);

    if (n == 1) {
        rep.kind = TCCase::contractible;
        rep.lower_tori = 0;
        rep.provenance.push_back("conf(1,w) is contractible");
        return rep;
    }

    VerifyOptions vo;
    vo.mode = options.verify;
    vo.build = options.build;
    vo.complex = options.complex;
    rep.certificate = verify_certificate(params, vo);
    if (rep.certificate->passed()) rep.lower_tori = rep.certificate->lower_bound(r);
    const auto& pair = rep.certificate->pair;
    const std::string tori = "lower bound (r-1)m+l with m=" + std::to_string(pair.m) + ", l=" +
                             std::to_string(pair.l) + " from tori A=" + pair.A.to_string() + ", B=" +
                             pair.B.to_string();

    if (n <= w) {
        rep.kind = TCCase::small;
        rep.tc = r * (n - 1) - 1;
        rep.provenance.push_back(tori);
        rep.provenance.push_back("upper bound r(n-1)-1 from the sequential TC of F_n(R^2) (external citation)");
        rep.gap_note = "the homotopy-dimension bound gives only " + std::to_string(rep.upper_bgrt) +
                       "; the upper bound " + std::to_string(rep.tc) + " is cited, not derived here";
    } else {
        rep.kind = TCCase::large;
        rep.tc = rep.upper_bgrt;
        rep.provenance.push_back("upper bound r*hdim from homotopy dimension, conn = 0");
        rep.provenance.push_back(tori);
    }
    rep.dtc = rep.tc;
    if (!rep.lower_tori) {
        rep.gap_note += std::string(rep.gap_note.empty() ? "" : "; ") + "certificate failed, lower bound unverified";
    } else if (*rep.lower_tori != rep.tc) {
        rep.gap_note += std::string(rep.gap_note.empty() ? "" : "; ") + "lower bound " +
                        std::to_string(*rep.lower_tori) + " does not reach " + std::to_string(rep.tc);
    }
    return rep;
}

}  // namespace

TCReport tc_value(int n, int w, int r, const TCOptions& options) {
    return assemble(n, w, r, options);
}

TCReport dtc_value(int n, int w, int r, const TCOptions& options) {
    auto rep = assemble(n, w, r, options);
    switch (rep.kind) {
        case TCCase::contractible:
            break;
        case TCCase::small:
            rep.provenance.push_back("dtc lower bound from the same tori; upper bound via dTC <= TC");
            break;
        case TCCase::large:
            rep.provenance.push_back("dtc closed by the tori lower bound and dTC <= TC <= r*hdim");
            break;
    }
    if (rep.kind != TCCase::contractible) {
        rep.provenance.push_back(
            "dtc lower bound taken as (r-1)m+l; the variant r(m-1)+l is treated as a misprint");
    }
    return rep;
}

std::vector<ReferenceValue> reference_values(const ReferenceQuery& q) {
    if (q.r < 2) throw InvalidParams("r must be at least 2");
    if (q.n < 1) throw InvalidParams("n must be at least 1");
    std::vector<ReferenceValue> out;
    const int n = q.n;
    const int r = q.r;

    if (q.space == "F") {
        if (q.k < 2) throw UnknownSpace("F_n(R^m) is tabulated for m >= 2");
        const std::map<std::string, int> params{{"n", n}, {"m", q.k}};
        const int tc = n == 1 ? 0 : (q.k % 2 == 0 ? r * (n - 1) - 1 : r * (n - 1));
        out.push_back({"F_n(R^m)", params, "TC_r", tc, "gonzalez-grant"});
        if (q.k == 2) out.push_back({"F_n(R^m)", params, "dTC_r", n == 1 ? 0 : r * (n - 1) - 1, "planar-distributional"});
        return out;
    }
    if (q.space == "conf") {
        if (q.k < 2 || r != 2) throw UnknownSpace("conf(n,w) is tabulated for w >= 2 and r = 2");
        const int tc = n == 1 ? 0 : (n <= q.k ? 2 * n - 3 : 2 * (n - (n + q.k - 1) / q.k));
        out.push_back({"conf(n,w)", {{"n", n}, {"w", q.k}}, "TC_r", tc, "strip-classical"});
        return out;
    }
    if (q.space == "uconf") {
        if (q.k != 2 || n % 2 == 0) throw UnknownSpace("uconf(n,w) is tabulated for odd n and w = 2");
        const int half = (n - 1) / 2;
        const std::map<std::string, int> params{{"n", n}, {"w", 2}};
        out.push_back({"uconf(n,2)", params, "TC_r", r * half, "unordered-strip-odd"});
        out.push_back({"uconf(n,2)", params, "dTC_r", r * half, "unordered-strip-odd"});
        return out;
    }
    throw UnknownSpace("no reference table for space '" + q.space + "'");
}

}  // namespace conftc

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conftc/certificates.hpp"
#include "conftc/chains.hpp"

namespace conftc {

/// floor(r * hdim / (conn + 1)). Requires hdim >= 0, conn >= 0, r >= 2.
int bgrt_upper(int hdim, int conn, int r);

enum class TCCase { contractible, small, large };  // n = 1, 1 < n <= w, n > w

const char* to_string(TCCase c);

struct TCReport {
    int n = 1;
    int w = 1;
    int r = 2;
    int hdim = 0;
    int conn = 0;
    int upper_bgrt = 0;
    /// (r-1)m + l from a verified certificate; empty if the certificate failed.
    std::optional<int> lower_tori;
    int tc = 0;
    int dtc = 0;
    TCCase kind = TCCase::contractible;
    std::vector<std::string> provenance;
    std::string gap_note;
    /// Present when a certificate was checked.
    std::optional<CertificateReport> certificate;

    /// lower_tori <= tc <= upper_bgrt and dtc <= tc.
    bool consistent() const;
};

struct TCOptions {
    VerifyMode verify = VerifyMode::symbolic;
    BuildOptions build;
    /// When given, hdim is read from its top dimension (and must match n - ceil(n/w)).
    const ChainComplexF2* complex = nullptr;
};

/// Bounds and exact values of TC_r and dTC_r for conf(n, w). Throws
/// NotApplicable for w = 1 and InvalidParams for r < 2.
TCReport tc_value(int n, int w, int r, const TCOptions& options = {});
/// Same values; provenance explains how the distributional case is closed.
TCReport dtc_value(int n, int w, int r, const TCOptions& options = {});

/// A tabulated value for a space outside the cell model.
struct ReferenceValue {
    std::string space;  // "F_n(R^m)", "conf(n,w)", "uconf(n,2)"
    std::map<std::string, int> params;
    std::string invariant;  // "TC_r" or "dTC_r"
    int value = 0;
    std::string citation;
};

/// `space` is one of "F" (params n, m), "conf" (n, w; r = 2 only) or
/// "uconf" (n odd, w = 2). Throws UnknownSpace otherwise.
struct ReferenceQuery {
    std::string space;
    int n = 1;
    int k = 2;  // m for F, w for conf and uconf
    int r = 2;
};

std::vector<ReferenceValue> reference_values(const ReferenceQuery& query);

}  // namespace conftc

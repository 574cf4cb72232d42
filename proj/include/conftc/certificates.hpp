#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conftc/chains.hpp"
#include "conftc/symbols.hpp"
#include "conftc/wheels.hpp"

namespace conftc {

/// Two tori in conf(n, w) whose first-homology images meet only in zero.
struct TorusPair {
    WheelProduct A;
    WheelProduct B;
    int m = 0;  // dimension of A
    int l = 0;  // dimension of B, l <= m
};

/// The explicit pair for (n, w): the w = 2 construction, the w > 2
/// construction for n > w, and A = W(n,...,1), B = W(n-1,...,1)W(n) for
/// n <= w. Throws NotApplicable for n = 1 or w = 1 and ConstructionError if
/// the factors do not partition a set of distinct labels in 1..n.
TorusPair build_tori(const ComplexParams& params);

/// (r-1)m + l. Requires m >= l >= 0 and r >= 2.
int lower_bound(int m, int l, int r);

enum class VerifyMode { symbolic, chain, both, automatic };

enum class CheckStatus { passed, failed, skipped };

struct ChainCheck {
    CheckStatus status = CheckStatus::skipped;
    std::string reason;  // set when skipped
};

/// Complexes with more cells than this are not built by `automatic` mode.
/// cell(8,2) (1.37M cells) fits; cell(8,3) (3.3M) does not.
inline constexpr std::size_t kChainCellLimit = 1'500'000;

struct VerifyOptions {
    VerifyMode mode = VerifyMode::automatic;
    BuildOptions build;
    std::size_t chain_cell_limit = kChainCellLimit;
    /// Reused instead of building when its params match.
    const ChainComplexF2* complex = nullptr;
};

/// Whether `automatic` mode would run the chain check.
bool chain_check_eligible(const ComplexParams& params, std::size_t cell_limit = kChainCellLimit);

struct CertificateReport {
    ComplexParams params;
    TorusPair pair;
    /// Informational: a product of 1-wheels (a point) need not be in basis form.
    bool basis_form_A = false;
    bool basis_form_B = false;
    bool decomposable_A = false;
    bool decomposable_B = false;
    bool disjoint_symbolic = false;
    /// "support" (w = 2: images use disjoint sets of basis classes),
    /// "projection" (w > 2, n > w) or "none".
    std::string structure_check = "none";
    bool structure_ok = true;
    ChainCheck disjoint_chain;

    /// Symbolic checks hold and the chain check, when run, agrees.
    bool passed() const;
    /// (r-1)m + l, present only when the symbolic checks hold.
    std::optional<int> lower_bound(int r) const;
};

CertificateReport verify_certificate(const ComplexParams& params, const VerifyOptions& options = {});

const char* to_string(CheckStatus s);
const char* to_string(VerifyMode m);
VerifyMode parse_verify_mode(const std::string& text);

}  // namespace conftc

#ifndef CERING_VERIFY_HPP
#define CERING_VERIFY_HPP

#include "cering/report.hpp"

namespace cering {

enum class CheckStatus { Pass, Fail, Warn };

inline const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Warn: return "WARN";
    }
    return "?";
}

struct VerifyCheck {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

struct VerifySummary {
    uint64_t seed = 0;
    std::vector<VerifyCheck> checks;

    size_t failures() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) n++;
        return n;
    }
    size_t warnings() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == CheckStatus::Warn) n++;
        return n;
    }
};

/// The curated verification suite over the bundled example rings:
/// centers, radicals, socles, cores, essentiality verdicts, criterion
/// agreement, regularity laws, and the differential matrix ring checks.
/// Discrepancies between the computed facts and commonly quoted
/// statements about these rings are reported as WARN entries, never
/// silently corrected.
VerifySummary verify_paper(uint64_t seed);

Json verify_to_json(const VerifySummary& s);

/// Lightweight scan over all principal two-sided quotients: how many
/// proper ones exist, how many are centrally essential, and whether any
/// centrally essential one is non-commutative.
struct QuotientScanOutcome {
    size_t proper_quotients = 0;
    size_t centrally_essential = 0;
    size_t noncommutative_centrally_essential = 0;

    bool all_centrally_essential_commutative() const {
        return noncommutative_centrally_essential == 0;
    }
};

QuotientScanOutcome scan_principal_quotients_ce(AlgebraPtr base, uint64_t seed);

}  // namespace cering

#endif

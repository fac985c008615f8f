#ifndef POWSUM_VERIFY_HPP
#define POWSUM_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "powsum/rational.hpp"

namespace powsum {

struct Divergence {
    std::string index;      // "x = 0" or "m = 4, k = 1"
    std::string lhs_name;
    std::string lhs_value;
    std::string rhs_name;   // the reference side
    std::string rhs_value;
};

struct CheckResult {
    std::string name;
    long cells = 0;  // exact comparisons performed
    bool pass = false;
    std::optional<Divergence> first_divergence;
    double wall_ms = 0.0;
};

/// Outcome of one cross-backend equivalence run. FAIL if and only if at
/// least one exact inequality was found.
struct VerifyReport {
    int max_m = 0;
    int max_x = 0;
    bool paper_literal = false;
    double oracle_ms = 0.0;  // shared reference construction
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

/// Compares every coefficient path (strong, closed, condensed) and every D
/// backend against the brute-force oracle. paper_literal swaps the three
/// recursive D backends for the printed, uncorrected forms. parallel fans
/// the independent pieces out over OpenMP; results are identical either way.
VerifyReport run_verify(int max_m, int max_x, bool paper_literal, bool parallel = true);

/// Plain-text report. Data lines are byte-deterministic; timings sit in a
/// trailing section of '#'-marked lines.
std::string render(const VerifyReport& report);

}  // namespace powsum

#endif

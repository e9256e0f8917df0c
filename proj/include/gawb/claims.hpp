#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gawb/groebner.hpp"

namespace gawb {

inline constexpr const char* kReportSchema = "gawb.verify-paper/1";
inline constexpr const char* kEngineVersion = "0.1.0";

enum class ClaimStatus { pass, fail, discrepancy };
/// "pass", "fail", "discrepancy-documented".
std::string to_string(ClaimStatus s);

/// Where a claim is made: a named location and a verbatim excerpt of the
/// LaTeX source (compared up to whitespace).
struct Anchor {
    std::string location;
    std::string quote;
};

struct ClaimContext {
    std::uint64_t seed = 42;
    /// Sampled points per evaluation oracle.
    int points = 20;
    int nilpotency_bound = 64;
    int power_bound = 12;
    GroebnerOptions groebner;
};

/// Result of running a claim, before a status is assigned.
struct ClaimOutcome {
    /// The computation agrees with the quoted text.
    bool agrees = false;
    std::string actual;
    /// The identity both verdicts below refer to.
    std::string check;
    std::vector<std::string> residuals;
    std::optional<bool> symbolic;
    std::optional<bool> oracle;
    int points = 0;
};

struct Claim {
    std::string id;
    Anchor anchor;
    std::string invocation;
    std::string expected;
    std::function<ClaimOutcome(const ClaimContext&)> run;
};

struct ClaimRecord {
    std::string id;
    Anchor anchor;
    std::string invocation;
    std::string expected;
    std::string actual;
    std::string check;
    ClaimStatus status = ClaimStatus::fail;
    std::vector<std::string> residuals;
    std::optional<bool> symbolic;
    std::optional<bool> oracle;
    int points = 0;
    std::uint64_t seed = 0;
    double seconds = 0;
};

struct Report {
    std::string schema = kReportSchema;
    std::string engine_version = kEngineVersion;
    std::uint64_t seed = 0;
    std::vector<ClaimRecord> records;
    int count(ClaimStatus s) const;
};

/// Registry in report order. Ids are unique.
const std::vector<Claim>& claim_registry();

/// Seed used by a claim: depends on the run seed and the claim id only.
std::uint64_t claim_seed(std::uint64_t seed, const std::string& id);

/// Engine errors become status fail; so does a symbolic/oracle disagreement.
ClaimRecord run_claim(const Claim& claim, const ClaimContext& ctx);

/// Runs the registry (or the `only` subset, in registry order) on up to
/// `jobs` threads. Throws DomainError for an unknown id.
Report verify_paper(const ClaimContext& ctx, const std::vector<std::string>& only = {}, unsigned jobs = 1);

/// Fixed-width table, one row per claim plus a summary line.
std::string report_table(const Report& r, bool timings = false);

}  // namespace gawb

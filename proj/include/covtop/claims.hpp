#pragma once

// Registry of the paper-level claims checked on concrete coverings, and the
// suite runner that sweeps them over enumerated or sampled coverings.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covtop/covering.hpp"
#include "covtop/topology.hpp"

namespace covtop {

enum class Verdict { Holds, Fails, NotApplicable };

std::string verdict_name(Verdict v);

struct Counterexample {
    std::string note;
    std::vector<std::string> sets;  // rendered subsets/families involved
    std::string lhs;
    std::string rhs;
};

struct ClaimReport {
    std::string id;
    std::string fingerprint;
    Verdict verdict = Verdict::NotApplicable;
    std::optional<Counterexample> counterexample;
    std::map<std::string, bool> details;  // e.g. forward/reverse directions
};

struct Claim {
    std::string id;
    std::string title;
    // Flagged claims are reported but never fail a run; used where the
    // stated containment direction disagrees with exhaustive evaluation.
    bool flagged = false;
};

const std::vector<Claim>& claim_registry();
bool is_known_claim(const std::string& id);
bool is_flagged_claim(const std::string& id);

ClaimReport check_claim(const std::string& id, const Covering& c,
                        const SweepBudget& budget = {});

struct SuiteConfig {
    int n_max = 3;
    bool sampled = false;
    long sample_count = 1000;
    std::uint64_t seed = 0;
};

struct ClaimTally {
    long holds = 0;
    long fails = 0;
    long not_applicable = 0;
};

struct SuiteFailure {
    int n = 0;
    std::string covering;  // rendered block family
    ClaimReport report;
};

struct SuiteReport {
    int n_max = 0;
    std::string mode;  // "exhaustive" | "sampled"
    std::uint64_t seed = 0;
    long sample_count = 0;
    long coverings_evaluated = 0;
    std::map<int, long> coverings_per_n;
    std::map<int, std::uint64_t> oracle_counts;  // exhaustive mode only
    std::map<std::string, ClaimTally> tallies;
    std::vector<SuiteFailure> failures;
    double duration_seconds = 0;  // human output only; kept out of machine reports

    /// True iff some non-flagged claim failed anywhere.
    bool has_unflagged_failure() const;
};

SuiteReport run_suite(const SuiteConfig& config, const SweepBudget& budget = {});

}  // namespace covtop

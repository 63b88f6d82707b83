#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrowperm/bigint.hpp"
#include "arrowperm/enumerate.hpp"

namespace arrowperm {

// One enumeration claim: exhaustive counts for every query are predicted by
// the formula registered under `id` (see predicted_count). Open rows carry no
// prediction and only report data. Grouped claims hold several queries that
// must all match the same prediction.
struct TheoremRecord {
    std::string id;         // stable class id, e.g. "T-12-13"
    std::string statement;  // the claim as a formula, e.g. "a_n = n! - d_n"
    std::string oeis;       // public cross-reference, "" when none applies
    std::vector<AvoidanceQuery> queries;
    int n_min = 1;          // first size the claim speaks about
    bool has_prediction = true;
};

// Every registered claim, ordered by id. Contents are fixed at build time.
const std::vector<TheoremRecord>& registry();
const TheoremRecord& record(std::string_view id);  // throws InvalidInput

struct VerifyRow {
    int n = 0;
    BigInt brute;
    std::optional<BigInt> predicted;  // empty for open rows
    bool match = true;                // open rows cannot mismatch
};

struct RecordResult {
    std::string id;
    std::string statement;
    std::string status;  // "match" | "mismatch" | "no-prediction"
    // Query-major, then n ascending from the record's n_min.
    std::vector<VerifyRow> rows;
};

struct VerificationReport {
    int n_max = 0;
    std::vector<RecordResult> records;  // sorted by id
    bool all_match = true;              // over rows that carry predictions
};

// Exhaustively count every query of the selected records for
// n = n_min..n_max and compare against the registered formulas.
// An empty id list selects the whole registry.
VerificationReport verify(const std::vector<std::string>& ids, int n_max,
                          const CountOptions& opt = {});

// Conjectured identities checked as evidence for 2 <= n <= n_max. Statuses
// are "consistent" / "inconsistent"; agreement is never reported as proof.
struct ConjectureResult {
    std::string id;
    std::string statement;
    std::string status;
    std::vector<VerifyRow> rows;
};
struct ConjectureReport {
    int n_max = 0;
    std::vector<ConjectureResult> conjectures;
    bool all_consistent = true;
};
ConjectureReport check_conjectures(int n_max, const CountOptions& opt = {});

// JSON object keyed by class id; each row has fields n / brute / predicted /
// status, with integers rendered as decimal strings. Key order is fixed.
std::string to_json(const VerificationReport& report);
std::string to_json(const ConjectureReport& report);

}  // namespace arrowperm

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrowperm/bigint.hpp"
#include "arrowperm/pattern.hpp"

namespace arrowperm {

// Thrown when a requested size exceeds the configured enumeration cap.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A conjunction of avoidance constraints; a permutation counts when it avoids
// every listed pattern. At least one pattern is required.
struct AvoidanceQuery {
    std::vector<ClassicalPattern> classical;
    std::vector<VincularPattern> vincular;
    std::vector<ArrowPattern> arrows;

    bool empty() const;
    std::string str() const;  // patterns joined with " + "
};

struct CountOptions {
    // Exhaustive search is n! work; sizes above the cap are refused so a typo
    // cannot wedge a session. Raise it explicitly for bigger runs.
    int cap = 10;
    int threads = 0;  // 0 = hardware concurrency
};

struct CountVector {
    std::string query;
    std::vector<BigInt> counts;  // counts[i] = count at n = i + 1
    int n_max = 0;

    const BigInt& at(int n) const { return counts.at(static_cast<size_t>(n) - 1); }
};

// Exact number of avoiders in S_n. The n! word space is split into shards by
// the first one or two entries; shard results are summed in shard order, so
// the count is identical for any worker count.
BigInt count_avoiders(const AvoidanceQuery& q, int n, const CountOptions& opt = {});

CountVector count_vector(const AvoidanceQuery& q, int n_max, const CountOptions& opt = {});

// Visit every avoider in S_n in lexicographic order (single-threaded).
void for_each_avoider(const AvoidanceQuery& q, int n,
                      const std::function<void(const Permutation&)>& fn,
                      const CountOptions& opt = {});
std::vector<Permutation> enumerate_avoiders(const AvoidanceQuery& q, int n,
                                            const CountOptions& opt = {});

// Patterns grouped by equal count vectors for n = 1..n_max. Agreement up to
// n_max is evidence of a shared class, never a proof, and the report says so.
struct WilfClass {
    std::vector<ArrowPattern> members;  // sorted by canonical string
    std::vector<BigInt> counts;
};
struct WilfClassReport {
    int n_max = 0;
    std::vector<WilfClass> classes;  // sorted by first member's string
    std::string note;
};
WilfClassReport wilf_classify(const std::vector<ArrowPattern>& patterns, int n_max,
                              const CountOptions& opt = {});

}  // namespace arrowperm

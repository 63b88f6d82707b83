#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrowperm/bigint.hpp"

namespace arrowperm {

enum class SequenceId {
    derangement,
    bell,
    catalan,
    riordan,
    gould,
    schroeder_large,
    motzkin,
    fibonacci,
    bell_no_singletons,
};

// Term n (n >= 0) of the sequence. Every function here is pure and builds
// its small table per call, so concurrent use needs no coordination.
BigInt sequence_term(SequenceId id, int n);

struct SequenceTable {
    SequenceId id;
    std::vector<BigInt> terms;  // terms[i] is term i, 0 <= i <= n_max
    std::string offset_note;    // how the indexing lines up with its uses
};
SequenceTable sequence_table(SequenceId id, int n_max);

std::string sequence_name(SequenceId id);

BigInt factorial(int n);
BigInt binomial(int n, int k);  // 0 outside 0 <= k <= n
BigInt stirling2(int n, int k);

// f_n = B_n - sum_{k=1..n} f_{k-1} B_{n-k}; the count of hosts avoiding the
// bonded pattern [23]1 whose hat image has no fixed point.
BigInt aux_f_21_23(int n);

// Avoiders of (13;2->3) that end in 1. Base cases b_1 = b_2 = 1 are pinned
// by exhaustive count; the recursion applies from n = 3.
BigInt aux_b_13_23(int n);

// c_{r,k} = sum_{m=1..r-1} S(r-2, m-1) m^k. The sum starts at m = 1: for
// r = 2 the only left-to-right-minimum count is m = 1 (the S(0,0) term);
// for r >= 3 that term is zero anyway.
BigInt aux_c_rk(int r, int k);

// Coefficients 0..n_max of (1 + x - sqrt(1 - 2x - 3x^2)) / (2x(1 + x)),
// computed exactly; every division is checked.
std::vector<BigInt> riordan_gf_coefficients(int n_max);

// The predicted avoider count for a registry class at size n (n >= 1);
// nullopt for open classes that have no formula. Unknown ids throw.
std::optional<BigInt> predicted_count(std::string_view class_id, int n);

}  // namespace arrowperm

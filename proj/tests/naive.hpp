#pragma once

// Deliberately slow reference implementations used only by the tests. Nothing
// here shares algorithmic machinery with the library: permutations are grown
// recursively instead of via std::next_permutation, the hat map is obtained by
// inverting the forward fundamental map through a lookup table instead of by
// cutting at left-to-right maxima, and containment checks scan candidate
// subsets with no precomputed position arrays. Keep it dumb; speed belongs in
// the library.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "arrowperm/enumerate.hpp"

namespace naive {

// Calls fn with every permutation of {1..n} in lexicographic order.
void each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn);

// Forward fundamental map: write q in standard cycle form, erase parentheses.
std::vector<int> theta(const std::vector<int>& q);

// hat(p) = theta^{-1}(p), realized as a table of (theta(q), q) pairs over all
// q of a fixed size. Words are nibble-packed into uint64 keys, so n <= 15.
class HatTable {
  public:
    explicit HatTable(int n);
    std::vector<int> hat(const std::vector<int>& p) const;

  private:
    int n_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_;
};

bool contains_classical(const std::vector<int>& p, const std::vector<int>& pat);
bool contains_vincular(const std::vector<int>& p, const std::vector<int>& word,
                       const std::vector<int>& bonds);
// hat_p is the one-line word of hat(p), from HatTable::hat.
bool contains_arrow(const std::vector<int>& p, const std::vector<int>& hat_p,
                    const arrowperm::ArrowPattern& pat);

bool avoids(const std::vector<int>& p, const std::vector<int>& hat_p,
            const arrowperm::AvoidanceQuery& query);

arrowperm::BigInt count(const arrowperm::AvoidanceQuery& query, int n);
std::vector<arrowperm::BigInt> count_vector(const arrowperm::AvoidanceQuery& query,
                                            int n_max);

}  // namespace naive

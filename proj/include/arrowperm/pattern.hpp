#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrowperm/perm.hpp"

namespace arrowperm {

// Thrown when pattern / permutation text fails to parse; the message names
// the offending token.
struct ParseError : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A permutation of [k] matched as a scattered order-isomorphic subsequence.
struct ClassicalPattern {
    Permutation word;

    explicit ClassicalPattern(Permutation w);
    bool operator==(const ClassicalPattern&) const = default;
};

// Classical pattern with bond constraints: bond j (1 <= j <= k-1) forces the
// occurrence's positions for pattern entries j and j+1 to be adjacent in the
// host. Bonds join adjacent pattern positions only; there are no boundary
// anchors.
struct VincularPattern {
    Permutation word;
    std::vector<int> bonds;  // sorted, unique

    VincularPattern(Permutation w, std::vector<int> bond_list);
    bool operator==(const VincularPattern&) const = default;
};

struct Arrow {
    int from = 0;
    int to = 0;

    bool operator==(const Arrow&) const = default;
    auto operator<=>(const Arrow&) const = default;
};

// An arrow pattern (nu; H) of size k: nu is a word with distinct values, H a
// set of arrows, and the values appearing across nu and H are exactly [k].
// A host p contains it when some value set X = {x_1 < ... < x_k} satisfies
//   (a) the values x_{nu_1}, ..., x_{nu_m} occur in p in that order, and
//   (b) hat(x_from) = x_to for every arrow, where hat is the image of p
//       under the inverse of the fundamental bijection.
// nu may be empty (condition (a) is vacuous). Arrows may repeat a source
// with different targets; such a pattern is simply never contained.
class ArrowPattern {
public:
    ArrowPattern(std::vector<int> nu, std::vector<Arrow> arrows);

    int size() const { return size_; }
    const std::vector<int>& nu() const { return nu_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool operator==(const ArrowPattern&) const = default;

private:
    std::vector<int> nu_;
    std::vector<Arrow> arrows_;  // sorted, deduplicated
    int size_ = 0;
};

// One containment witness: the chosen values X (ascending) and the host
// positions where x_{nu_1}, ..., x_{nu_m} appear (increasing).
struct ArrowOccurrence {
    std::vector<int> values;
    std::vector<int> positions;

    bool operator==(const ArrowOccurrence&) const = default;
};

bool classical_contains(const Permutation& p, const ClassicalPattern& pat);
bool vincular_contains(const Permutation& p, const VincularPattern& pat);
bool arrow_contains(const Permutation& p, const ArrowPattern& pat);

// Every witness, ordered lexicographically by value set. The positions of a
// witness are determined by its value set, so there is one entry per viable X.
std::vector<ArrowOccurrence> arrow_occurrences(const Permutation& p,
                                               const ArrowPattern& pat);

// For a single arrow b -> c with b not in nu, c in nu, and b > c, containment
// forces c to sit immediately right of b in the host, so the pattern equals
// the vincular pattern nu with b inserted before c and the pair bonded.
// Returns nullopt when those hypotheses do not hold (use the general checker).
std::optional<VincularPattern> arrow_to_vincular(const ArrowPattern& pat);

// For (nu; k -> 1) with nu a permutation of [k-1]: a pattern with the same
// avoider count for every n, namely (one_complement(reverse(nu)); k -> 1).
// Throws InvalidInput when the pattern does not have that shape.
ArrowPattern c1_reverse_partner(const ArrowPattern& pat);

// All arrow patterns of size k with exactly one arrow, sorted by their
// canonical string (90 patterns at k = 3).
std::vector<ArrowPattern> all_single_arrow_patterns(int k);

// Pattern grammar.
//   classical: "231"            or comma-separated values when k > 9
//   vincular:  "1[32]"          brackets group bonded adjacent entries
//   arrow:     "12;3->2,4->1"   "<nu>;<b>-><c>[,<b>-><c>]*", nu = "-" if empty;
//              a bare "<nu>" (no semicolon) is accepted as an arrow pattern
//              with no arrows
ClassicalPattern parse_classical_pattern(std::string_view text);
VincularPattern parse_vincular_pattern(std::string_view text);
ArrowPattern parse_arrow_pattern(std::string_view text);

// Comma-joined list of arrow patterns. A segment containing "->" but no ";"
// continues the previous pattern's arrow list; a segment with neither starts
// the next pattern's comma-form nu.
std::vector<ArrowPattern> parse_arrow_pattern_list(std::string_view text);

std::string to_string(const ClassicalPattern& pat);
std::string to_string(const VincularPattern& pat);
std::string to_string(const ArrowPattern& pat);

// Hot-loop kernels shared with the enumerator. They take raw words and do no
// validation; the public checkers above are thin wrappers around them.
namespace detail {

// pos[v] = 1-based position of value v in w; pos[0] unused.
std::vector<int> positions_word(const std::vector<int>& w);

// image[v] of w under the inverse fundamental map: cut w before each
// left-to-right maximum, read the pieces as cycles.
std::vector<int> hat_word(const std::vector<int>& w);

// Order-isomorphic occurrence of pat in w; bond_after[i] != 0 forces the host
// slots of pattern entries i and i + 1 (0-based) to be adjacent.
bool vinc_match(const std::vector<int>& w, const std::vector<int>& pat,
                const std::vector<char>& bond_after);

// Arrow containment given precomputed pos and hat tables for the host.
bool arrow_match(const std::vector<int>& pos, const std::vector<int>& hat,
                 const ArrowPattern& pat);

}  // namespace detail

}  // namespace arrowperm

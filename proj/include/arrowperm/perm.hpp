#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arrowperm {

// Thrown for structurally invalid values: words that are not permutations,
// malformed patterns, out-of-range sizes, and the like.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A permutation of [n] in one-line notation. Values and positions are
// 1-based throughout; n = 0 (the empty permutation) is valid everywhere.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    Permutation(std::initializer_list<int> word);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    // Value at position i (the image of i when the word is read as a map).
    int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

// Cycles in standard form: every cycle is rotated so its largest element
// comes first, and cycles are listed in increasing order of first elements.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    std::string str() const;  // "(3)(5214)(6)(8)(97)"
};

CycleDecomposition standard_cycle_form(const Permutation& p);

// The fundamental bijection: write p in standard cycle form and erase the
// parentheses. fundamental_inverse recovers the preimage by cutting the word
// before each left-to-right maximum and reading the pieces as cycles.
Permutation fundamental_map(const Permutation& p);
Permutation fundamental_inverse(const Permutation& p);

// Order-isomorphic relabeling of a word with distinct entries onto [k],
// e.g. 784 -> 231. Repeated entries are rejected.
Permutation reduce(std::span<const int> word);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

// Complement away from a fixed set: the j-th smallest entry of [n] \ fixed
// is replaced by the j-th largest, entries of `fixed` stay put. `fixed`
// must be a subset of [n] without repeats.
Permutation relative_complement(const Permutation& p, const std::vector<int>& fixed);

// relative_complement with fixed = {1}: every x != 1 maps to (n + 2) - x.
Permutation one_complement(const Permutation& p);

// Values x with p(x) = x, ascending.
std::vector<int> fixed_points(const Permutation& p);

// "352146897" while all values fit one digit, comma-separated otherwise;
// the empty permutation renders as "e".
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace arrowperm

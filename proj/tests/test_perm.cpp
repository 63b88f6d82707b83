#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "arrowperm/perm.hpp"

using namespace arrowperm;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(Permutation(w));
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int left_to_right_maxima(const Permutation& p) {
    int count = 0, best = 0;
    for (int v : p.word())
        if (v > best) {
            best = v;
            ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("construction validates words") {
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_NOTHROW(Permutation());
    CHECK_THROWS_AS(Permutation({1, 3}), InvalidInput);
    CHECK_THROWS_AS(Permutation({2, 2}), InvalidInput);
    CHECK_THROWS_AS(Permutation({0, 1}), InvalidInput);
    CHECK(Permutation::identity(4) == P("1234"));
    CHECK(Permutation::identity(0).size() == 0);
}

TEST_CASE("standard cycle form puts maxima first, ordered by them") {
    CHECK(standard_cycle_form(P("413526987")).str() == "(3)(5214)(6)(8)(97)");
    CHECK(standard_cycle_form(P("123")).str() == "(1)(2)(3)");
    CHECK(standard_cycle_form(P("231")).str() == "(312)");
    CHECK(standard_cycle_form(Permutation()).str() == "");
}

TEST_CASE("fundamental map worked example") {
    CHECK(fundamental_map(P("413526987")) == P("352146897"));
    CHECK(fundamental_inverse(P("352146897")) == P("413526987"));
    CHECK(fundamental_map(Permutation()) == Permutation());
    CHECK(fundamental_inverse(Permutation()) == Permutation());
    CHECK(fundamental_map(P("1")) == P("1"));
}

TEST_CASE("fundamental map is a bijection with the maxima/cycle correspondence") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : all_perms(n)) {
            CHECK(fundamental_inverse(fundamental_map(p)) == p);
            CHECK(fundamental_map(fundamental_inverse(p)) == p);
        }
    // left-to-right maxima of theta(q) are exactly the cycle maxima of q
    for (int n = 1; n <= 6; ++n)
        for (const auto& q : all_perms(n)) {
            const auto cycles = standard_cycle_form(q).cycles.size();
            CHECK(left_to_right_maxima(fundamental_map(q)) ==
                  static_cast<int>(cycles));
        }
}

TEST_CASE("reduce relabels onto [k]") {
    const std::vector<int> a{7, 8, 4};
    CHECK(reduce(a) == P("231"));
    const std::vector<int> b{9, 2, 7};
    CHECK(reduce(b) == P("312"));
    const std::vector<int> dup{5, 5};
    CHECK_THROWS_AS(reduce(dup), InvalidInput);
    CHECK(reduce(std::vector<int>{}) == Permutation());
}

TEST_CASE("reverse and complement") {
    CHECK(reverse(P("623154")) == P("451326"));
    CHECK(complement(P("623154")) == P("154623"));
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : all_perms(n)) {
            CHECK(reverse(reverse(p)) == p);
            CHECK(complement(complement(p)) == p);
            CHECK(reverse(complement(p)) == complement(reverse(p)));
        }
}

TEST_CASE("relative complement fixes the given set and reflects the rest") {
    CHECK(relative_complement(P("623154"), {1}) == P("265134"));
    CHECK(relative_complement(P("623154"), {1, 6}) == P("654123"));
    CHECK(relative_complement(P("623154"), {}) == complement(P("623154")));
    CHECK_THROWS_AS(relative_complement(P("321"), {4}), InvalidInput);
    CHECK_THROWS_AS(relative_complement(P("321"), {2, 2}), InvalidInput);
    for (const auto& p : all_perms(5)) {
        CHECK(relative_complement(relative_complement(p, {2, 4}), {2, 4}) == p);
        CHECK(one_complement(p) == relative_complement(p, {1}));
    }
}

TEST_CASE("one complement maps x to n + 2 - x away from 1") {
    CHECK(one_complement(P("623154")) == P("265134"));
    CHECK(one_complement(Permutation()) == Permutation());
    const auto p = P("35241");
    const auto c = one_complement(p);
    const int n = p.size();
    for (size_t i = 0; i < p.word().size(); ++i) {
        const int v = p.word()[i];
        CHECK(c.word()[i] == (v == 1 ? 1 : n + 2 - v));
    }
}

TEST_CASE("fixed points") {
    CHECK(fixed_points(P("413526987")) == std::vector<int>{3, 6, 8});
    CHECK(fixed_points(P("321")) == std::vector<int>{2});
    CHECK(fixed_points(Permutation::identity(3)) == std::vector<int>{1, 2, 3});
    CHECK(fixed_points(P("21")).empty());
}

TEST_CASE("parse and print round trip") {
    CHECK(to_string(P("352146897")) == "352146897");
    CHECK(to_string(Permutation()) == "e");
    CHECK(parse_permutation("e") == Permutation());
    const auto wide = parse_permutation("10,1,2,3,4,5,6,7,8,9");
    CHECK(wide.size() == 10);
    CHECK(to_string(wide) == "10,1,2,3,4,5,6,7,8,9");
    CHECK(parse_permutation(to_string(wide)) == wide);
    CHECK_THROWS_AS(parse_permutation(""), InvalidInput);
    CHECK_THROWS_AS(parse_permutation("321x"), InvalidInput);
    CHECK_THROWS_AS(parse_permutation("0"), InvalidInput);
    CHECK_THROWS_AS(parse_permutation("122"), InvalidInput);
    CHECK_THROWS_AS(parse_permutation("1,,2"), InvalidInput);
}

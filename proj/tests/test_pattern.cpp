#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "arrowperm/pattern.hpp"

using namespace arrowperm;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }
ArrowPattern AP(const char* text) { return parse_arrow_pattern(text); }
VincularPattern VP(const char* text) { return parse_vincular_pattern(text); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(Permutation(w));
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

TEST_CASE("classical containment") {
    CHECK(classical_contains(P("35241"), ClassicalPattern(P("321"))));
    CHECK(classical_contains(P("35241"), ClassicalPattern(P("132"))));
    CHECK_FALSE(classical_contains(P("35241"), ClassicalPattern(P("123"))));
    CHECK(classical_contains(P("1"), ClassicalPattern(P("1"))));
    CHECK_FALSE(classical_contains(P("21"), ClassicalPattern(P("321"))));
    CHECK_THROWS_AS(ClassicalPattern{Permutation()}, InvalidInput);
}

TEST_CASE("vincular bonds force adjacent positions") {
    // 35241 has a scattered 132 but no occurrence with the 3 and the 2 adjacent
    CHECK_FALSE(vincular_contains(P("35241"), VP("1[32]")));
    CHECK(vincular_contains(P("1432"), VP("1[32]")));
    CHECK(vincular_contains(P("213"), VP("[21]3")));
    CHECK_FALSE(vincular_contains(P("231"), VP("[21]3")));
    // with no bonds, vincular equals classical
    for (const auto& p : all_perms(5)) {
        CHECK(vincular_contains(p, VP("132")) ==
              classical_contains(p, ClassicalPattern(P("132"))));
    }
}

TEST_CASE("vincular constructor sorts, dedupes, and range-checks bonds") {
    const VincularPattern pat(P("321"), {2, 1, 2});
    CHECK(pat.bonds == std::vector<int>{1, 2});
    CHECK_THROWS_AS(VincularPattern(P("12"), {2}), InvalidInput);
    CHECK_THROWS_AS(VincularPattern(P("12"), {0}), InvalidInput);
    CHECK_THROWS_AS(VincularPattern(Permutation(), {}), InvalidInput);
}

TEST_CASE("arrow pattern constructor normalizes and validates") {
    const auto pat = AP("12;1->3");
    CHECK(pat.size() == 3);
    CHECK(pat.nu() == std::vector<int>{1, 2});
    CHECK(pat.arrows() == std::vector<Arrow>{{1, 3}});

    CHECK(ArrowPattern({2, 1}, {}).size() == 2);
    CHECK(ArrowPattern({}, {{1, 1}}).size() == 1);
    // arrows are sorted and deduplicated
    const ArrowPattern two({2}, {{1, 2}, {1, 2}});
    CHECK(two.arrows().size() == 1);
    const ArrowPattern sorted({3}, {{2, 1}, {1, 2}});
    CHECK(sorted.arrows() == std::vector<Arrow>{{1, 2}, {2, 1}});

    CHECK_THROWS_AS(ArrowPattern({1}, {{3, 1}}), InvalidInput);  // 2 missing
    CHECK_THROWS_AS(ArrowPattern({1, 1}, {}), InvalidInput);
    CHECK_THROWS_AS(ArrowPattern({}, {}), InvalidInput);
    CHECK_THROWS_AS(ArrowPattern({0, 1}, {}), InvalidInput);
}

TEST_CASE("a source arrowed to two targets is never contained") {
    const ArrowPattern pat({3}, {{1, 2}, {1, 3}});
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : all_perms(n)) CHECK_FALSE(arrow_contains(p, pat));
}

TEST_CASE("arrow containment worked example") {
    const auto pat = AP("231;1->4");
    CHECK(arrow_contains(P("639245781"), pat));
    CHECK_FALSE(arrow_contains(P("3627154"), pat));

    const auto occs = arrow_occurrences(P("639245781"), pat);
    REQUIRE_FALSE(occs.empty());
    bool found = false;
    for (const auto& occ : occs) {
        CHECK(std::is_sorted(occ.positions.begin(), occ.positions.end()));
        if (occ.values == std::vector<int>{1, 2, 4, 9}) {
            found = true;
            CHECK(occ.positions == std::vector<int>{4, 5, 9});
        }
    }
    CHECK(found);
    // occurrences are ordered by value set
    auto sorted = occs;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.values < b.values; });
    CHECK(occs == sorted);

    CHECK(arrow_occurrences(P("3627154"), pat).empty());
}

TEST_CASE("arrowless patterns coincide with classical containment") {
    for (const auto& nu : all_perms(3)) {
        const ArrowPattern apat(nu.word(), {});
        const ClassicalPattern cpat(nu);
        for (int n = 1; n <= 6; ++n)
            for (const auto& p : all_perms(n))
                CHECK(arrow_contains(p, apat) == classical_contains(p, cpat));
    }
}

TEST_CASE("the loop pattern detects fixed points of hat") {
    const auto pat = AP("1;1->1");
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : all_perms(n)) {
            const bool has_fix = !fixed_points(fundamental_inverse(p)).empty();
            CHECK(arrow_contains(p, pat) == has_fix);
        }
    // nu is empty here, so a witness has values but no forced positions
    const auto occs = arrow_occurrences(P("213"), AP("-;1->1"));
    REQUIRE(occs.size() == 1);
    CHECK(occs[0].values == std::vector<int>{3});
    CHECK(occs[0].positions.empty());
}

TEST_CASE("arrow_to_vincular rewrites qualifying single-arrow patterns") {
    struct Pair {
        const char* arrow;
        const char* vincular;
    };
    const Pair pairs[] = {
        {"341;2->1", "34[21]"},
        {"12;3->2", "1[32]"},
        {"12;3->1", "[31]2"},
    };
    for (const auto& [a, v] : pairs) {
        const auto got = arrow_to_vincular(AP(a));
        REQUIRE(got.has_value());
        CHECK(*got == VP(v));
        for (int n = 1; n <= 7; ++n)
            for (const auto& p : all_perms(n))
                CHECK(arrow_contains(p, AP(a)) == vincular_contains(p, *got));
    }
    CHECK(arrow_to_vincular(AP("1;2->1")) == VP("[21]"));

    CHECK_FALSE(arrow_to_vincular(AP("12;1->3")).has_value());  // source in nu
    CHECK_FALSE(arrow_to_vincular(AP("12;3->3")).has_value());  // target not in nu
    CHECK_FALSE(arrow_to_vincular(AP("23;1->2")).has_value());  // source below target
    CHECK_FALSE(arrow_to_vincular(AP("12;3->2,3->1")).has_value());  // two arrows
    CHECK_FALSE(arrow_to_vincular(AP("123")).has_value());  // no arrow
}

TEST_CASE("c1_reverse_partner") {
    CHECK(to_string(c1_reverse_partner(AP("24153;6->1"))) == "42135;6->1");
    CHECK(c1_reverse_partner(AP("1;2->1")) == AP("1;2->1"));
    CHECK(c1_reverse_partner(AP("21;3->1")) == AP("12;3->1"));
    // the map is an involution
    for (const char* s : {"24153;6->1", "213;4->1", "2134;5->1"}) {
        const auto pat = AP(s);
        CHECK(c1_reverse_partner(c1_reverse_partner(pat)) == pat);
    }
    CHECK_THROWS_AS(c1_reverse_partner(AP("12;3->2")), InvalidInput);
    CHECK_THROWS_AS(c1_reverse_partner(AP("132;4->2")), InvalidInput);
    CHECK_THROWS_AS(c1_reverse_partner(AP("2;3->1")), InvalidInput);
    CHECK_THROWS_AS(c1_reverse_partner(AP("123")), InvalidInput);
}

TEST_CASE("all_single_arrow_patterns enumerates each size once") {
    const auto k1 = all_single_arrow_patterns(1);
    CHECK(k1.size() == 2);
    const auto k2 = all_single_arrow_patterns(2);
    CHECK(k2.size() == 16);
    const auto k3 = all_single_arrow_patterns(3);
    CHECK(k3.size() == 90);
    std::set<std::string> names;
    for (const auto& pat : k3) {
        CHECK(pat.size() == 3);
        CHECK(pat.arrows().size() == 1);
        names.insert(to_string(pat));
    }
    CHECK(names.size() == k3.size());
    std::vector<std::string> listed(names.begin(), names.end());
    for (size_t i = 0; i < k3.size(); ++i) CHECK(to_string(k3[i]) == listed[i]);
    CHECK_THROWS_AS(all_single_arrow_patterns(0), InvalidInput);
    CHECK_THROWS_AS(all_single_arrow_patterns(9), InvalidInput);
}

TEST_CASE("pattern grammar round trips") {
    CHECK(to_string(AP("12;1->3")) == "12;1->3");
    CHECK(to_string(AP("-;1->1")) == "-;1->1");
    CHECK(AP(to_string(AP("2,4,1,5,3;6->1")).c_str()) == AP("24153;6->1"));
    CHECK(to_string(VP("1[32]")) == "1[32]");
    CHECK(to_string(VP("[123]")) == "[123]");
    CHECK(to_string(VP("34[21]")) == "34[21]");
    CHECK(VP("4,1,[3,2]") == VP("41[32]"));
    CHECK(to_string(ClassicalPattern(P("231"))) == "231");
}

TEST_CASE("pattern list parsing disambiguates segments") {
    const auto three = parse_arrow_pattern_list("12;1->2,12;3->2,21;3->2");
    REQUIRE(three.size() == 3);
    CHECK(three[0] == AP("12;1->2"));
    CHECK(three[2] == AP("21;3->2"));

    const auto multi = parse_arrow_pattern_list("12;3->2,4->1");
    REQUIRE(multi.size() == 1);
    CHECK(multi[0].arrows().size() == 2);

    const auto bare = parse_arrow_pattern_list("12");
    REQUIRE(bare.size() == 1);
    CHECK(bare[0] == AP("12"));

    const auto comma_nu = parse_arrow_pattern_list("2,4,1,5,3;6->1");
    REQUIRE(comma_nu.size() == 1);
    CHECK(comma_nu[0].nu().size() == 5);

    CHECK_THROWS_AS(parse_arrow_pattern_list("1->2"), ParseError);
    CHECK_THROWS_AS(parse_arrow_pattern_list(""), ParseError);
}

TEST_CASE("grammar rejects malformed text") {
    CHECK_THROWS_AS(AP("12;1>2"), ParseError);
    CHECK_THROWS_AS(AP("12;1->"), ParseError);
    CHECK_THROWS_AS(AP("0;1->1"), ParseError);
    CHECK_THROWS_AS(AP("12;1->3,"), ParseError);
    CHECK(AP(";1->1") == AP("-;1->1"));  // bare semicolon reads as empty nu
    CHECK_THROWS_AS(VP("1[32"), ParseError);
    CHECK_THROWS_AS(VP("1]2"), ParseError);
    CHECK_THROWS_AS(VP("[1]2"), ParseError);
    CHECK_THROWS_AS(VP("1[[32]]"), ParseError);
    CHECK_THROWS_AS(VP("1x2"), ParseError);
    CHECK_THROWS_AS(VP("122"), ParseError);
}

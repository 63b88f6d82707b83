#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "arrowperm/enumerate.hpp"
#include "arrowperm/sequences.hpp"

#include "naive.hpp"

using namespace arrowperm;

namespace {

AvoidanceQuery arrow_q(const char* spec) {
    AvoidanceQuery q;
    for (auto& pat : parse_arrow_pattern_list(spec)) q.arrows.push_back(std::move(pat));
    return q;
}

std::vector<long long> counts_upto(const char* spec, int n_max) {
    const auto cv = count_vector(arrow_q(spec), n_max);
    std::vector<long long> out;
    for (const auto& c : cv.counts) out.push_back(c.convert_to<long long>());
    return out;
}

}  // namespace

TEST_CASE("size cap refuses oversized runs") {
    const auto q = arrow_q("1;1->1");
    CHECK_THROWS_AS(count_avoiders(q, 11), ResourceLimit);
    CountOptions opt;
    opt.cap = 4;
    CHECK_THROWS_AS(count_avoiders(q, 5, opt), ResourceLimit);
    CHECK_NOTHROW(count_avoiders(q, 4, opt));
    CHECK_THROWS_AS(count_vector(q, 5, opt), ResourceLimit);
    CHECK_THROWS_AS(count_avoiders(q, -1), InvalidInput);
    CHECK_THROWS_AS(count_avoiders(AvoidanceQuery{}, 3), InvalidInput);
}

TEST_CASE("counts on the worked examples") {
    CHECK(count_avoiders(arrow_q("12;2->1"), 4) == 24);
    CHECK(count_avoiders(arrow_q("1;1->1"), 4) == 9);
    CHECK(count_avoiders(arrow_q("12;2->3"), 3) == 4);
    CHECK(count_avoiders(arrow_q("21;1->2"), 5) == 1);
    CHECK(count_avoiders(arrow_q("12;2->2"), 5) == 76);
    CHECK(count_avoiders(arrow_q("231;1->4"), 4) == 21);
    CHECK(counts_upto("12;1->2", 6) ==
          std::vector<long long>{1, 2, 5, 15, 52, 203});
    CHECK(counts_upto("1;2->3", 6) == std::vector<long long>{1, 2, 4, 8, 16, 32});
    CHECK(counts_upto("231;1->4", 6) ==
          std::vector<long long>{1, 2, 6, 21, 82, 349});
    // the empty permutation avoids everything
    CHECK(count_avoiders(arrow_q("1;1->1"), 0) == 1);
}

TEST_CASE("count vector bookkeeping") {
    const auto cv = count_vector(arrow_q("12;1->2"), 5);
    CHECK(cv.n_max == 5);
    CHECK(cv.query == "12;1->2");
    CHECK(cv.at(1) == 1);
    CHECK(cv.at(5) == 52);
    CHECK_THROWS(cv.at(6));

    AvoidanceQuery mixed;
    mixed.classical.push_back(ClassicalPattern(parse_permutation("321")));
    mixed.vincular.push_back(parse_vincular_pattern("1[32]"));
    mixed.arrows.push_back(parse_arrow_pattern("12;1->2"));
    CHECK(mixed.str() == "321 + 1[32] + 12;1->2");
}

TEST_CASE("avoider enumeration is lexicographic and matches the count") {
    const auto avoiders = enumerate_avoiders(arrow_q("1;1->1"), 3);
    REQUIRE(avoiders.size() == 2);
    CHECK(avoiders[0] == parse_permutation("312"));
    CHECK(avoiders[1] == parse_permutation("321"));

    for (const char* spec : {"1;1->1", "12;1->2", "21;2->3"})
        for (int n = 1; n <= 6; ++n) {
            const auto q = arrow_q(spec);
            const auto list = enumerate_avoiders(q, n);
            CHECK(BigInt(list.size()) == count_avoiders(q, n));
            CHECK(std::is_sorted(list.begin(), list.end()));
            for (size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] != list[i]);
        }
}

TEST_CASE("thread count never changes a count") {
    const auto q = arrow_q("21;2->3");
    std::vector<BigInt> seen;
    for (int t : {1, 2, 3, 8}) {
        CountOptions opt;
        opt.threads = t;
        seen.push_back(count_avoiders(q, 7, opt));
    }
    for (const auto& c : seen) CHECK(c == 2146);
}

TEST_CASE("avoider counts never exceed n factorial") {
    for (const char* spec : {"12;1->1", "21;3->2", "-;1->1"})
        for (int n = 1; n <= 6; ++n) {
            const auto c = count_avoiders(arrow_q(spec), n);
            CHECK(c >= 0);
            CHECK(c <= factorial(n));
        }
}

TEST_CASE("agreement with the naive reference on seeded random queries") {
    std::mt19937 rng(20240917u);
    const auto pool2 = all_single_arrow_patterns(2);
    const auto pool3 = all_single_arrow_patterns(3);
    const char* classical_pool[] = {"132", "321", "213", "3142"};
    const char* vincular_pool[] = {"1[32]", "[21]3", "2[31]"};

    for (int trial = 0; trial < 20; ++trial) {
        AvoidanceQuery q;
        q.arrows.push_back(rng() % 2 == 0 ? pool2[rng() % pool2.size()]
                                          : pool3[rng() % pool3.size()]);
        if (rng() % 3 == 0)
            q.arrows.push_back(pool3[rng() % pool3.size()]);
        if (rng() % 3 == 0)
            q.classical.push_back(
                ClassicalPattern(parse_permutation(classical_pool[rng() % 4])));
        if (rng() % 3 == 0)
            q.vincular.push_back(parse_vincular_pattern(vincular_pool[rng() % 3]));
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(q.str());
            CAPTURE(n);
            CHECK(count_avoiders(q, n) == naive::count(q, n));
        }
    }
}

TEST_CASE("single-arrow avoidance rewrites as a vincular pair") {
    // avoiding (21;2->3) is the same as avoiding both [41][32] and [32][41]
    AvoidanceQuery pair;
    pair.vincular.push_back(parse_vincular_pattern("[41][32]"));
    pair.vincular.push_back(parse_vincular_pattern("[32][41]"));
    for (int n = 1; n <= 8; ++n)
        CHECK(count_avoiders(pair, n) == count_avoiders(arrow_q("21;2->3"), n));
}

TEST_CASE("wilf classification groups equal count vectors") {
    const auto pats = parse_arrow_pattern_list(
        "12;1->2,12;3->2,21;3->2,13;1->2,13;2->1,13;3->2");
    const auto report = wilf_classify(pats, 7);
    CHECK(report.n_max == 7);
    REQUIRE(report.classes.size() == 1);
    CHECK(report.classes[0].members.size() == 6);
    CHECK(report.classes[0].counts[4] == 52);
    CHECK_FALSE(report.note.empty());

    const auto same = wilf_classify(parse_arrow_pattern_list("12;2->1,21;1->1"), 6);
    CHECK(same.classes.size() == 1);

    const auto split = wilf_classify(parse_arrow_pattern_list("12;1->2,12;2->1"), 3);
    REQUIRE(split.classes.size() == 2);
    // classes come sorted by their first member's canonical string
    CHECK(to_string(split.classes[0].members[0]) == "12;1->2");
    CHECK(to_string(split.classes[1].members[0]) == "12;2->1");
    CHECK(split.classes[0].counts == std::vector<BigInt>{1, 2, 5});
    CHECK(split.classes[1].counts == std::vector<BigInt>{1, 2, 6});
}

#include "arrowperm/verify.hpp"

#include <algorithm>

#include <json.hpp>

#include "arrowperm/sequences.hpp"

namespace arrowperm {

namespace {

AvoidanceQuery arrow_query(std::string_view spec) {
    AvoidanceQuery q;
    q.arrows.push_back(parse_arrow_pattern(spec));
    return q;
}

AvoidanceQuery pair_query(std::string_view first, std::string_view second) {
    AvoidanceQuery q;
    q.arrows.push_back(parse_arrow_pattern(first));
    q.arrows.push_back(parse_arrow_pattern(second));
    return q;
}

AvoidanceQuery vincular_query(std::string_view spec) {
    AvoidanceQuery q;
    q.vincular.push_back(parse_vincular_pattern(spec));
    return q;
}

std::vector<TheoremRecord> build_registry() {
    std::vector<TheoremRecord> r;
    auto add = [&r](std::string id, std::string statement, std::string oeis,
                    std::vector<AvoidanceQuery> queries, int n_min = 1) {
        r.push_back(TheoremRecord{std::move(id), std::move(statement), std::move(oeis),
                                  std::move(queries), n_min, true});
    };

    add("T-1-11", "a_n = d_n", "A000166", {arrow_query("1;1->1")});
    add("T-A2-fix", "a_n = d_n + d_{n-1}", "A000255",
        {arrow_query("1;2->2"), arrow_query("2;1->1")}, 2);
    add("T-A2-one", "a_n = 1", "A000012",
        {arrow_query("1;1->2"), arrow_query("2;2->1"), arrow_query("2;1->2"),
         arrow_query("1;2->1")});
    add("T-A3", "a_n = 2^{n-1}", "A000079",
        {arrow_query("1;2->3"), arrow_query("1;3->2"), arrow_query("2;1->3"),
         arrow_query("2;3->1"), arrow_query("3;1->2"), arrow_query("3;2->1")});

    add("T-12-11", "a_n = d_n + d_{n-1}", "A000255", {arrow_query("12;1->1")}, 2);
    add("T-12-22", "a_n = n! - d_n", "A002467", {arrow_query("12;2->2")});
    add("T-12-12", "a_n = B_n", "A000110", {arrow_query("12;1->2")});
    add("T-12-21", "a_n = n!", "A000142", {arrow_query("12;2->1")});
    add("T-12-13", "a_n = S_{n-1}, the large Schroeder numbers", "A006318",
        {arrow_query("12;1->3")});
    add("T-12-31", "a_n = C_n", "A000108", {arrow_query("12;3->1")});
    add("T-12-23", "a_1 = 1, a_n = 2 B_{n-1} for n >= 2", "A186021",
        {arrow_query("12;2->3")});
    add("T-12-32", "a_n = B_n", "A000110", {arrow_query("12;3->2")});

    add("T-21-11", "a_n = n!", "A000142", {arrow_query("21;1->1")});
    add("T-21-22", "a_0 = 1, a_n = d_n + sum_{i=1..n} d_{n-i} a_{i-1}", "A259870",
        {arrow_query("21;2->2")});
    add("T-21-12/21", "a_n = 1", "A000012",
        {arrow_query("21;1->2"), arrow_query("21;2->1")});
    add("T-21-13", "a_n = 2^{n-1}", "A000079", {arrow_query("21;1->3")});
    add("T-21-31", "a_n = C_n", "A000108", {arrow_query("21;3->1")});
    add("T-21-23", "a_n = sum_{k=0..n} C(n,k) f_{n-k} with f the singleton-free "
        "bonded-pattern auxiliary", "A074664", {arrow_query("21;2->3")});
    add("T-21-32", "a_n = B_n", "A000110", {arrow_query("21;3->2")});

    add("T-13-12", "a_n = B_n", "A000110", {arrow_query("13;1->2")});
    add("T-13-21", "a_n = B_n", "A000110", {arrow_query("13;2->1")});
    add("T-13-32", "a_n = B_n", "A000110", {arrow_query("13;3->2")});
    add("T-13-23", "a_n = a_{n-1} + b_n + sum_{r=2..n-1} sum_{k=0..n-r-1} "
        "C(n-r-1,k) b_{n-k-r+1} c_{r,k}", "", {arrow_query("13;2->3")});
    add("T-13-22", "a_n = d_n + d_{n-1} + sum_{k=1..n-1} (d_{n-k} + d_{n-k-1}) (k-1)!",
        "", {arrow_query("13;2->2")}, 3);

    add("P-12-12", "a_n = number of partitions of [n] with no singleton block",
        "A000296", {pair_query("12;1->2", "1;1->1")});
    add("P-12-13", "a_0 = 1, a_n = sum_{k=1..n-1} (a_k + a_{k-1})(a_{n-k} + a_{n-k-1})",
        "A052705", {pair_query("12;1->3", "1;1->1")});
    add("P-12-31", "a_n = r_n, the Riordan numbers", "A005043",
        {pair_query("12;3->1", "1;1->1")});
    add("P-12-23", "a_n = G_{n-2}, the Gould numbers", "A040027",
        {pair_query("12;2->3", "1;1->1")}, 2);
    add("P-12-32", "a_0 = 1, a_1 = 0, a_n = sum_{k=0..n-1} C(n-1,k) a_k", "A032347",
        {pair_query("12;3->2", "1;1->1")}, 2);

    for (const char* spec : {"1[23]", "3[21]", "[12]3", "[32]1",
                             "1[32]", "3[12]", "[21]3", "[23]1"})
        add(std::string("V-") + spec, "a_n = B_n", "A000110", {vincular_query(spec)});
    for (const char* spec : {"2[13]", "2[31]", "[13]2", "[31]2"})
        add(std::string("V-") + spec, "a_n = C_n", "A000108", {vincular_query(spec)});

    r.push_back(TheoremRecord{"OPEN-12-33",
                              "no formula registered; counts reported as data", "",
                              {arrow_query("12;3->3")}, 1, false});
    r.push_back(TheoremRecord{"OPEN-21-33",
                              "no formula registered; counts reported as data", "",
                              {arrow_query("21;3->3")}, 1, false});

    std::sort(r.begin(), r.end(), [](const TheoremRecord& a, const TheoremRecord& b) {
        return a.id < b.id;
    });
    return r;
}

std::string canonical_id(std::string_view id) {
    // The two one-avoider patterns share a claim; accept either half's name.
    if (id == "T-21-12" || id == "T-21-21") return "T-21-12/21";
    return std::string(id);
}

RecordResult run_record(const TheoremRecord& rec, int n_max, const CountOptions& opt) {
    RecordResult res;
    res.id = rec.id;
    res.statement = rec.statement;
    bool any_mismatch = false;
    for (const auto& q : rec.queries) {
        for (int n = rec.n_min; n <= n_max; ++n) {
            VerifyRow row;
            row.n = n;
            row.brute = count_avoiders(q, n, opt);
            if (rec.has_prediction) row.predicted = predicted_count(rec.id, n);
            row.match = !row.predicted || *row.predicted == row.brute;
            if (!row.match) any_mismatch = true;
            res.rows.push_back(std::move(row));
        }
    }
    res.status = !rec.has_prediction ? "no-prediction"
                 : any_mismatch      ? "mismatch"
                                     : "match";
    return res;
}

nlohmann::ordered_json rows_json(const std::vector<VerifyRow>& rows,
                                 const char* good, const char* bad) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["n"] = row.n;
        j["brute"] = row.brute.str();
        if (row.predicted) {
            j["predicted"] = row.predicted->str();
            j["status"] = row.match ? good : bad;
        } else {
            j["predicted"] = nullptr;
            j["status"] = "no-prediction";
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

const std::vector<TheoremRecord>& registry() {
    static const std::vector<TheoremRecord> reg = build_registry();
    return reg;
}

const TheoremRecord& record(std::string_view id) {
    const std::string wanted = canonical_id(id);
    for (const auto& rec : registry())
        if (rec.id == wanted) return rec;
    throw InvalidInput("unknown class id \"" + std::string(id) + "\"");
}

VerificationReport verify(const std::vector<std::string>& ids, int n_max,
                          const CountOptions& opt) {
    std::vector<const TheoremRecord*> selected;
    if (ids.empty()) {
        for (const auto& rec : registry()) selected.push_back(&rec);
    } else {
        for (const auto& id : ids) selected.push_back(&record(id));
        std::sort(selected.begin(), selected.end(),
                  [](const TheoremRecord* a, const TheoremRecord* b) { return a->id < b->id; });
        selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    }
    VerificationReport report;
    report.n_max = n_max;
    for (const TheoremRecord* rec : selected) {
        report.records.push_back(run_record(*rec, n_max, opt));
        if (report.records.back().status == "mismatch") report.all_match = false;
    }
    return report;
}

ConjectureReport check_conjectures(int n_max, const CountOptions& opt) {
    if (n_max < 2) throw InvalidInput("conjectures are stated from n = 2");
    struct Spec {
        const char* id;
        const char* statement;
        const char* classical;
        const char* arrow;
        BigInt (*predicted)(int);
    };
    static const Spec specs[] = {
        {"C-123-12-13", "a_n(123, (12;1->3)) = 2^n - n", "123", "12;1->3",
         [](int n) {
             BigInt p = 1;
             for (int i = 0; i < n; ++i) p *= 2;
             return BigInt(p - n);
         }},
        {"C-321-12-13", "a_n(321, (12;1->3)) = F_{2n-1}", "321", "12;1->3",
         [](int n) { return sequence_term(SequenceId::fibonacci, 2 * n - 1); }},
        {"C-321-12-12", "a_n(321, (12;1->2)) = M_n", "321", "12;1->2",
         [](int n) { return sequence_term(SequenceId::motzkin, n); }},
    };
    ConjectureReport report;
    report.n_max = n_max;
    for (const Spec& spec : specs) {
        ConjectureResult res;
        res.id = spec.id;
        res.statement = spec.statement;
        AvoidanceQuery q;
        q.classical.push_back(parse_classical_pattern(spec.classical));
        q.arrows.push_back(parse_arrow_pattern(spec.arrow));
        bool consistent = true;
        for (int n = 2; n <= n_max; ++n) {
            VerifyRow row;
            row.n = n;
            row.brute = count_avoiders(q, n, opt);
            row.predicted = spec.predicted(n);
            row.match = *row.predicted == row.brute;
            if (!row.match) consistent = false;
            res.rows.push_back(std::move(row));
        }
        res.status = consistent ? "consistent" : "inconsistent";
        if (!consistent) report.all_consistent = false;
        report.conjectures.push_back(std::move(res));
    }
    return report;
}

std::string to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["n_max"] = report.n_max;
    j["all_match"] = report.all_match;
    nlohmann::ordered_json records = nlohmann::ordered_json::object();
    for (const auto& rec : report.records) {
        nlohmann::ordered_json rj;
        rj["statement"] = rec.statement;
        rj["oeis"] = record(rec.id).oeis;
        rj["status"] = rec.status;
        rj["rows"] = rows_json(rec.rows, "match", "mismatch");
        records[rec.id] = std::move(rj);
    }
    j["records"] = std::move(records);
    return j.dump(2) + "\n";
}

std::string to_json(const ConjectureReport& report) {
    nlohmann::ordered_json j;
    j["n_max"] = report.n_max;
    j["all_consistent"] = report.all_consistent;
    nlohmann::ordered_json conj = nlohmann::ordered_json::object();
    for (const auto& res : report.conjectures) {
        nlohmann::ordered_json rj;
        rj["statement"] = res.statement;
        rj["status"] = res.status;
        rj["rows"] = rows_json(res.rows, "consistent", "inconsistent");
        conj[res.id] = std::move(rj);
    }
    j["conjectures"] = std::move(conj);
    return j.dump(2) + "\n";
}

}  // namespace arrowperm

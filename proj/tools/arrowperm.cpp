#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrowperm/enumerate.hpp"
#include "arrowperm/verify.hpp"

namespace {

using arrowperm::AvoidanceQuery;
using arrowperm::BigInt;
using arrowperm::CountOptions;

// All output goes through these helpers so the bytes are fixed given flags.

void emit_vector(const std::string& query, const std::vector<BigInt>& counts,
                 int n_lo, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["query"] = query;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (size_t i = 0; i < counts.size(); ++i) {
            nlohmann::ordered_json row;
            row["n"] = n_lo + static_cast<int>(i);
            row["count"] = counts[i].str();
            rows.push_back(std::move(row));
        }
        j["counts"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,a(n)\n";
        for (size_t i = 0; i < counts.size(); ++i)
            std::cout << n_lo + static_cast<int>(i) << "," << counts[i].str() << "\n";
    } else {
        // bfile, and the plain default for vectors: "n a(n)" per line
        for (size_t i = 0; i < counts.size(); ++i)
            std::cout << n_lo + static_cast<int>(i) << " " << counts[i].str() << "\n";
    }
}

int enumeration_cap() {
    const char* env = std::getenv("ARROWPERM_MAX_N");
    if (!env) return CountOptions{}.cap;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > 1000)
        throw arrowperm::InvalidInput("ARROWPERM_MAX_N must be a small nonnegative "
                                      "integer, got \"" + std::string(env) + "\"");
    return static_cast<int>(v);
}

struct CountArgs {
    std::vector<std::string> arrow, vincular, classical;
    int n = 0, n_max = 0;
    std::string format = "plain";
    int threads = 0;
};

int run_count(const CountArgs& args, bool have_n, bool have_n_max) {
    if (have_n == have_n_max)
        throw arrowperm::InvalidInput("pass exactly one of --n and --n-max");
    AvoidanceQuery q;
    for (const auto& spec : args.arrow)
        for (auto& pat : arrowperm::parse_arrow_pattern_list(spec))
            q.arrows.push_back(std::move(pat));
    for (const auto& spec : args.vincular)
        q.vincular.push_back(arrowperm::parse_vincular_pattern(spec));
    for (const auto& spec : args.classical)
        q.classical.push_back(arrowperm::parse_classical_pattern(spec));
    if (q.empty()) throw arrowperm::InvalidInput("no patterns given");
    CountOptions opt;
    opt.cap = enumeration_cap();
    opt.threads = args.threads;
    if (have_n) {
        const BigInt c = arrowperm::count_avoiders(q, args.n, opt);
        if (args.format == "plain") {
            std::cout << c.str() << "\n";
        } else if (args.format == "json") {
            nlohmann::ordered_json j;
            j["query"] = q.str();
            j["n"] = args.n;
            j["count"] = c.str();
            std::cout << j.dump(2) << "\n";
        } else {
            emit_vector(q.str(), {c}, args.n, args.format);
        }
    } else {
        const auto cv = arrowperm::count_vector(q, args.n_max, opt);
        emit_vector(cv.query, cv.counts, 1, args.format);
    }
    return 0;
}

int run_verify(bool all, const std::vector<std::string>& ids, int n_max,
               const std::string& format, int threads) {
    if (!all && ids.empty())
        throw arrowperm::InvalidInput("pass --all or at least one --id");
    CountOptions opt;
    opt.cap = enumeration_cap();
    opt.threads = threads;
    const auto report = arrowperm::verify(all ? std::vector<std::string>{} : ids,
                                          n_max, opt);
    if (format == "json") {
        std::cout << arrowperm::to_json(report);
    } else {
        for (const auto& rec : report.records) {
            std::cout << rec.id << ": " << rec.status << "\n";
            if (rec.status == "mismatch") {
                for (const auto& row : rec.rows)
                    if (!row.match) {
                        std::cout << "  first divergence at n=" << row.n << ": brute="
                                  << row.brute.str() << " predicted="
                                  << row.predicted->str() << "\n";
                        break;
                    }
            } else if (rec.status == "no-prediction") {
                std::cout << "  counts:";
                for (const auto& row : rec.rows) std::cout << " " << row.brute.str();
                std::cout << "\n";
            }
        }
        std::cout << (report.all_match ? "all predicted rows match"
                                       : "MISMATCH in at least one record")
                  << " (n_max=" << report.n_max << ")\n";
    }
    return report.all_match ? 0 : 1;
}

int run_classify(const std::string& patterns, int size, int n_max,
                 const std::string& format, int threads) {
    if (patterns.empty() == (size == 0))
        throw arrowperm::InvalidInput("pass exactly one of --patterns and --size");
    std::vector<arrowperm::ArrowPattern> pats;
    if (!patterns.empty()) pats = arrowperm::parse_arrow_pattern_list(patterns);
    else pats = arrowperm::all_single_arrow_patterns(size);
    CountOptions opt;
    opt.cap = enumeration_cap();
    opt.threads = threads;
    const auto report = arrowperm::wilf_classify(pats, n_max, opt);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n_max"] = report.n_max;
        j["note"] = report.note;
        nlohmann::ordered_json classes = nlohmann::ordered_json::array();
        for (const auto& cls : report.classes) {
            nlohmann::ordered_json cj;
            nlohmann::ordered_json members = nlohmann::ordered_json::array();
            for (const auto& pat : cls.members) members.push_back(to_string(pat));
            cj["members"] = std::move(members);
            nlohmann::ordered_json counts = nlohmann::ordered_json::array();
            for (const auto& c : cls.counts) counts.push_back(c.str());
            cj["counts"] = std::move(counts);
            classes.push_back(std::move(cj));
        }
        j["classes"] = std::move(classes);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report.classes.size() << " class(es) at n_max=" << report.n_max
                  << "\n";
        for (size_t i = 0; i < report.classes.size(); ++i) {
            const auto& cls = report.classes[i];
            std::cout << "class " << i + 1 << ":";
            for (const auto& pat : cls.members) std::cout << " " << to_string(pat);
            std::cout << " | counts:";
            for (const auto& c : cls.counts) std::cout << " " << c.str();
            std::cout << "\n";
        }
        std::cout << report.note << "\n";
    }
    return 0;
}

int run_conjectures(int n_max, const std::string& format, int threads) {
    CountOptions opt;
    opt.cap = enumeration_cap();
    opt.threads = threads;
    const auto report = arrowperm::check_conjectures(n_max, opt);
    if (format == "json") {
        std::cout << arrowperm::to_json(report);
    } else {
        for (const auto& res : report.conjectures)
            std::cout << res.id << ": " << res.status << "  [" << res.statement << "]\n";
        std::cout << (report.all_consistent ? "all conjectures consistent"
                                            : "INCONSISTENT conjecture data")
                  << " for 2 <= n <= " << report.n_max << "\n";
    }
    return report.all_consistent ? 0 : 1;
}

int run_show(const std::string& op, const std::string& word) {
    const arrowperm::Permutation p = arrowperm::parse_permutation(word);
    arrowperm::Permutation out;
    if (op == "theta") out = arrowperm::fundamental_map(p);
    else if (op == "theta-inv") out = arrowperm::fundamental_inverse(p);
    else if (op == "c1") out = arrowperm::one_complement(p);
    else if (op == "reverse") out = arrowperm::reverse(p);
    else if (op == "complement") out = arrowperm::complement(p);
    else throw arrowperm::InvalidInput("unknown operation \"" + op + "\"");
    std::cout << arrowperm::to_string(out) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arrow pattern avoidance: exact counting, verification, and "
                 "classification over permutations"};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"plain", "json", "csv", "bfile"};

    CountArgs count_args;
    auto* cmd_count = app.add_subcommand("count", "count avoiders of a query");
    cmd_count->add_option("--arrow", count_args.arrow, "arrow pattern(s), e.g. 12;1->3");
    cmd_count->add_option("--vincular", count_args.vincular,
                          "vincular pattern(s), e.g. 1[32]");
    cmd_count->add_option("--classical", count_args.classical,
                          "classical pattern(s), e.g. 231");
    auto* opt_n = cmd_count->add_option("--n", count_args.n, "single size n");
    auto* opt_n_max = cmd_count->add_option("--n-max", count_args.n_max,
                                            "vector for n = 1..n_max");
    opt_n->excludes(opt_n_max);
    cmd_count->add_option("--format", count_args.format, "plain, json, csv, or bfile")
        ->check(CLI::IsMember(formats));
    cmd_count->add_option("--threads", count_args.threads, "worker count, 0 = auto");

    bool verify_all = false;
    std::vector<std::string> verify_ids;
    int verify_n_max = 7;
    std::string verify_format = "plain";
    int verify_threads = 0;
    auto* cmd_verify = app.add_subcommand("verify",
                                          "brute-force counts vs registered formulas");
    cmd_verify->add_flag("--all", verify_all, "verify the whole registry");
    cmd_verify->add_option("--id", verify_ids, "registry class id(s)");
    cmd_verify->add_option("--n-max", verify_n_max, "largest size to check");
    cmd_verify->add_option("--format", verify_format, "plain or json")
        ->check(CLI::IsMember(std::vector<std::string>{"plain", "json"}));
    cmd_verify->add_option("--threads", verify_threads, "worker count, 0 = auto");

    std::string classify_patterns;
    int classify_size = 0;
    int classify_n_max = 7;
    std::string classify_format = "plain";
    int classify_threads = 0;
    auto* cmd_classify = app.add_subcommand(
        "classify", "group arrow patterns by equal count vectors");
    cmd_classify->add_option("--patterns", classify_patterns,
                             "comma-joined arrow patterns");
    cmd_classify->add_option("--size", classify_size,
                             "all single-arrow patterns of this size");
    cmd_classify->add_option("--n-max", classify_n_max, "largest size to compare");
    cmd_classify->add_option("--format", classify_format, "plain or json")
        ->check(CLI::IsMember(std::vector<std::string>{"plain", "json"}));
    cmd_classify->add_option("--threads", classify_threads, "worker count, 0 = auto");

    int conj_n_max = 8;
    std::string conj_format = "plain";
    int conj_threads = 0;
    auto* cmd_conj = app.add_subcommand("conjectures",
                                        "evidence runs for the open conjectures");
    cmd_conj->add_option("--n-max", conj_n_max, "largest size to check");
    cmd_conj->add_option("--format", conj_format, "plain or json")
        ->check(CLI::IsMember(std::vector<std::string>{"plain", "json"}));
    cmd_conj->add_option("--threads", conj_threads, "worker count, 0 = auto");

    std::string show_op, show_word;
    auto* cmd_show = app.add_subcommand("show", "apply a core transform to a word");
    cmd_show->add_option("op", show_op, "theta, theta-inv, c1, reverse, or complement")
        ->required();
    cmd_show->add_option("word", show_word, "permutation in one-line notation")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_count->parsed())
            return run_count(count_args, opt_n->count() > 0, opt_n_max->count() > 0);
        if (cmd_verify->parsed())
            return run_verify(verify_all, verify_ids, verify_n_max, verify_format,
                              verify_threads);
        if (cmd_classify->parsed())
            return run_classify(classify_patterns, classify_size, classify_n_max,
                                classify_format, classify_threads);
        if (cmd_conj->parsed())
            return run_conjectures(conj_n_max, conj_format, conj_threads);
        if (cmd_show->parsed()) return run_show(show_op, show_word);
    } catch (const arrowperm::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arrowperm::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

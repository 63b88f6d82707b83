#include "arrowperm/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <thread>

namespace arrowperm {

namespace {

// A query compiled for the hot loop: vincular jobs (classical patterns are
// the bond-free case) plus arrow patterns, with one schedule sorted by
// ascending pattern size so the cheapest checks run first.
struct VincJob {
    std::vector<int> word;
    std::vector<char> bond_after;
};

struct Step {
    int k = 0;
    bool is_arrow = false;
    size_t idx = 0;
};

struct CompiledQuery {
    std::vector<VincJob> vinc;
    std::vector<ArrowPattern> arrows;
    std::vector<Step> steps;
};

CompiledQuery compile(const AvoidanceQuery& q) {
    if (q.empty()) throw InvalidInput("avoidance query needs at least one pattern");
    CompiledQuery cq;
    auto add_vinc = [&cq](const Permutation& word, const std::vector<int>& bonds) {
        VincJob job;
        job.word = word.word();
        job.bond_after.assign(job.word.size(), 0);
        for (int b : bonds) job.bond_after[static_cast<size_t>(b) - 1] = 1;
        cq.steps.push_back(Step{word.size(), false, cq.vinc.size()});
        cq.vinc.push_back(std::move(job));
    };
    for (const auto& pat : q.classical) add_vinc(pat.word, {});
    for (const auto& pat : q.vincular) add_vinc(pat.word, pat.bonds);
    for (const auto& pat : q.arrows) {
        cq.steps.push_back(Step{pat.size(), true, cq.arrows.size()});
        cq.arrows.push_back(pat);
    }
    std::stable_sort(cq.steps.begin(), cq.steps.end(),
                     [](const Step& a, const Step& b) { return a.k < b.k; });
    return cq;
}

bool contains_any(const std::vector<int>& w, const CompiledQuery& cq) {
    // The hat and position tables are shared across arrow patterns and only
    // built if a vincular step did not already decide the word.
    std::vector<int> pos;
    std::vector<int> hat;
    for (const Step& st : cq.steps) {
        if (st.is_arrow) {
            if (hat.empty()) {
                pos = detail::positions_word(w);
                hat = detail::hat_word(w);
            }
            if (detail::arrow_match(pos, hat, cq.arrows[st.idx])) return true;
        } else {
            const VincJob& job = cq.vinc[st.idx];
            if (detail::vinc_match(w, job.word, job.bond_after)) return true;
        }
    }
    return false;
}

void check_limits(int n, const CountOptions& opt) {
    if (n < 0) throw InvalidInput("size must be nonnegative");
    if (n > opt.cap)
        throw ResourceLimit("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(opt.cap) + "; raise the cap explicitly for "
                            "larger runs");
}

// Words of S_n sharing a fixed prefix, scanned in lexicographic order.
// The shard count at n = 8 and up is n(n-1), plenty for any worker pool.
std::vector<std::vector<int>> shard_prefixes(int n) {
    std::vector<std::vector<int>> out;
    if (n < 8) {
        for (int a = 1; a <= n; ++a) out.push_back({a});
    } else {
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (b != a) out.push_back({a, b});
    }
    return out;
}

std::uint64_t count_shard(const std::vector<int>& prefix, int n, const CompiledQuery& cq) {
    std::vector<int> word = prefix;
    for (int v = 1; v <= n; ++v)
        if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) word.push_back(v);
    const auto suffix = word.begin() + static_cast<long>(prefix.size());
    std::uint64_t c = 0;
    do {
        if (!contains_any(word, cq)) ++c;
    } while (std::next_permutation(suffix, word.end()));
    return c;
}

BigInt count_compiled(const CompiledQuery& cq, int n, const CountOptions& opt) {
    if (n == 0) return contains_any({}, cq) ? 0 : 1;
    const auto prefixes = shard_prefixes(n);
    unsigned workers = opt.threads > 0 ? static_cast<unsigned>(opt.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(prefixes.size()));
    std::vector<std::uint64_t> partial(prefixes.size(), 0);
    if (workers <= 1) {
        for (size_t i = 0; i < prefixes.size(); ++i)
            partial[i] = count_shard(prefixes[i], n, cq);
    } else {
        std::atomic<size_t> next{0};
        auto run = [&] {
            for (size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1))
                partial[i] = count_shard(prefixes[i], n, cq);
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    // Summed in shard order so the result is bit-for-bit independent of the
    // worker count (it would be anyway for integers; the order removes doubt).
    BigInt total = 0;
    for (std::uint64_t c : partial) total += c;
    return total;
}

}  // namespace

bool AvoidanceQuery::empty() const {
    return classical.empty() && vincular.empty() && arrows.empty();
}

std::string AvoidanceQuery::str() const {
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) out += " + ";
        out += s;
    };
    for (const auto& pat : classical) append(to_string(pat));
    for (const auto& pat : vincular) append(to_string(pat));
    for (const auto& pat : arrows) append(to_string(pat));
    return out;
}

BigInt count_avoiders(const AvoidanceQuery& q, int n, const CountOptions& opt) {
    check_limits(n, opt);
    return count_compiled(compile(q), n, opt);
}

CountVector count_vector(const AvoidanceQuery& q, int n_max, const CountOptions& opt) {
    check_limits(n_max, opt);
    const CompiledQuery cq = compile(q);
    CountVector cv;
    cv.query = q.str();
    cv.n_max = n_max;
    cv.counts.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) cv.counts.push_back(count_compiled(cq, n, opt));
    return cv;
}

void for_each_avoider(const AvoidanceQuery& q, int n,
                      const std::function<void(const Permutation&)>& fn,
                      const CountOptions& opt) {
    check_limits(n, opt);
    const CompiledQuery cq = compile(q);
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        if (!contains_any(word, cq)) fn(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> enumerate_avoiders(const AvoidanceQuery& q, int n,
                                            const CountOptions& opt) {
    std::vector<Permutation> out;
    for_each_avoider(q, n, [&out](const Permutation& p) { out.push_back(p); }, opt);
    return out;
}

WilfClassReport wilf_classify(const std::vector<ArrowPattern>& patterns, int n_max,
                              const CountOptions& opt) {
    WilfClassReport report;
    report.n_max = n_max;
    report.note = "count vectors agree for n = 1.." + std::to_string(n_max) +
                  "; agreement up to a finite size is evidence of arrow-Wilf "
                  "equivalence, not a proof";
    std::map<std::vector<BigInt>, std::vector<ArrowPattern>> groups;
    for (const auto& pat : patterns) {
        AvoidanceQuery q;
        q.arrows.push_back(pat);
        groups[count_vector(q, n_max, opt).counts].push_back(pat);
    }
    for (auto& [counts, members] : groups) {
        WilfClass cls;
        cls.counts = counts;
        cls.members = std::move(members);
        std::sort(cls.members.begin(), cls.members.end(),
                  [](const ArrowPattern& a, const ArrowPattern& b) {
                      return to_string(a) < to_string(b);
                  });
        report.classes.push_back(std::move(cls));
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const WilfClass& a, const WilfClass& b) {
                  return to_string(a.members.front()) < to_string(b.members.front());
              });
    return report;
}

}  // namespace arrowperm

#include "arrowperm/pattern.hpp"

#include <algorithm>
#include <cctype>

namespace arrowperm {

namespace {

constexpr int kMaxPatternSize = 64;  // practical cap; n! search dies far earlier

// Backtracking search for an order-isomorphic occurrence honoring bonds.
// chosen holds 0-based host indices for pattern positions 0..level-1.
bool vinc_search(const std::vector<int>& w, const std::vector<int>& pat,
                 const std::vector<char>& bond_after, std::vector<int>& chosen,
                 int level) {
    const int k = static_cast<int>(pat.size());
    const int n = static_cast<int>(w.size());
    if (level == k) return true;
    int lo = level ? chosen[static_cast<size_t>(level) - 1] + 1 : 0;
    int hi = n - (k - level);
    if (level && bond_after[static_cast<size_t>(level) - 1]) hi = std::min(hi, lo);
    for (int i = lo; i <= hi; ++i) {
        bool ok = true;
        for (int r = 0; r < level; ++r) {
            if ((w[static_cast<size_t>(chosen[static_cast<size_t>(r)])] <
                 w[static_cast<size_t>(i)]) != (pat[static_cast<size_t>(r)] <
                                                pat[static_cast<size_t>(level)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen[static_cast<size_t>(level)] = i;
        if (vinc_search(w, pat, bond_after, chosen, level + 1)) return true;
    }
    return false;
}

bool contains_word_pattern(const Permutation& p, const Permutation& pat,
                           const std::vector<int>& bonds) {
    std::vector<char> bond_after(static_cast<size_t>(pat.size()), 0);
    for (int b : bonds) bond_after[static_cast<size_t>(b) - 1] = 1;
    return detail::vinc_match(p.word(), pat.word(), bond_after);
}

// Advance an ascending k-subset of [n] to its lexicographic successor.
bool next_subset(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + 1;
    return true;
}

// Check one value set X against (nu; H); fills witness positions on success.
bool subset_matches(const std::vector<int>& X, const ArrowPattern& pat,
                    const std::vector<int>& pos, const std::vector<int>& hat,
                    std::vector<int>* witness_positions) {
    int last = 0;
    if (witness_positions) witness_positions->clear();
    for (int a : pat.nu()) {
        const int t = pos[static_cast<size_t>(X[static_cast<size_t>(a) - 1])];
        if (t <= last) return false;
        last = t;
        if (witness_positions) witness_positions->push_back(t);
    }
    for (const Arrow& ar : pat.arrows())
        if (hat[static_cast<size_t>(X[static_cast<size_t>(ar.from) - 1])] !=
            X[static_cast<size_t>(ar.to) - 1])
            return false;
    return true;
}

}  // namespace

namespace detail {

std::vector<int> positions_word(const std::vector<int>& w) {
    std::vector<int> pos(w.size() + 1, 0);
    for (size_t i = 0; i < w.size(); ++i)
        pos[static_cast<size_t>(w[i])] = static_cast<int>(i) + 1;
    return pos;
}

std::vector<int> hat_word(const std::vector<int>& w) {
    std::vector<int> image(w.size() + 1, 0);
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i + 1;
        while (j < w.size() && w[j] < w[i]) ++j;
        for (size_t t = i; t + 1 < j; ++t) image[static_cast<size_t>(w[t])] = w[t + 1];
        image[static_cast<size_t>(w[j - 1])] = w[i];
        i = j;
    }
    return image;
}

bool vinc_match(const std::vector<int>& w, const std::vector<int>& pat,
                const std::vector<char>& bond_after) {
    if (pat.size() > w.size()) return false;
    std::vector<int> chosen(pat.size(), 0);
    return vinc_search(w, pat, bond_after, chosen, 0);
}

bool arrow_match(const std::vector<int>& pos, const std::vector<int>& hat,
                 const ArrowPattern& pat) {
    const int n = static_cast<int>(pos.size()) - 1;
    const int k = pat.size();
    if (k > n) return false;
    std::vector<int> X(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) X[static_cast<size_t>(i)] = i + 1;
    do {
        if (subset_matches(X, pat, pos, hat, nullptr)) return true;
    } while (next_subset(X, n));
    return false;
}

}  // namespace detail

ClassicalPattern::ClassicalPattern(Permutation w) : word(std::move(w)) {
    if (word.size() < 1) throw InvalidInput("classical pattern must be nonempty");
    if (word.size() > kMaxPatternSize) throw InvalidInput("pattern size above 64");
}

VincularPattern::VincularPattern(Permutation w, std::vector<int> bond_list)
    : word(std::move(w)), bonds(std::move(bond_list)) {
    if (word.size() < 1) throw InvalidInput("vincular pattern must be nonempty");
    if (word.size() > kMaxPatternSize) throw InvalidInput("pattern size above 64");
    std::sort(bonds.begin(), bonds.end());
    bonds.erase(std::unique(bonds.begin(), bonds.end()), bonds.end());
    for (int b : bonds)
        if (b < 1 || b >= word.size())
            throw InvalidInput("bond " + std::to_string(b) + " outside [1, " +
                               std::to_string(word.size() - 1) + "]");
}

ArrowPattern::ArrowPattern(std::vector<int> nu, std::vector<Arrow> arrows)
    : nu_(std::move(nu)), arrows_(std::move(arrows)) {
    std::sort(arrows_.begin(), arrows_.end());
    arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
    int mx = 0;
    for (int v : nu_) {
        if (v < 1) throw InvalidInput("nu value " + std::to_string(v) + " not positive");
        mx = std::max(mx, v);
    }
    for (const Arrow& a : arrows_) {
        if (a.from < 1 || a.to < 1) throw InvalidInput("arrow endpoint not positive");
        mx = std::max(mx, std::max(a.from, a.to));
    }
    if (mx == 0) throw InvalidInput("arrow pattern has no values");
    if (mx > kMaxPatternSize) throw InvalidInput("pattern size above 64");
    std::vector<char> in_nu(static_cast<size_t>(mx) + 1, 0);
    std::vector<char> used(static_cast<size_t>(mx) + 1, 0);
    for (int v : nu_) {
        if (in_nu[static_cast<size_t>(v)])
            throw InvalidInput("nu value " + std::to_string(v) + " repeats");
        in_nu[static_cast<size_t>(v)] = 1;
        used[static_cast<size_t>(v)] = 1;
    }
    for (const Arrow& a : arrows_) {
        used[static_cast<size_t>(a.from)] = 1;
        used[static_cast<size_t>(a.to)] = 1;
    }
    for (int v = 1; v <= mx; ++v)
        if (!used[static_cast<size_t>(v)])
            throw InvalidInput("values must cover [k]: " + std::to_string(v) +
                               " is missing below " + std::to_string(mx));
    size_ = mx;
}

bool classical_contains(const Permutation& p, const ClassicalPattern& pat) {
    return contains_word_pattern(p, pat.word, {});
}

bool vincular_contains(const Permutation& p, const VincularPattern& pat) {
    return contains_word_pattern(p, pat.word, pat.bonds);
}

bool arrow_contains(const Permutation& p, const ArrowPattern& pat) {
    if (pat.size() > p.size()) return false;
    return detail::arrow_match(detail::positions_word(p.word()),
                               detail::hat_word(p.word()), pat);
}

std::vector<ArrowOccurrence> arrow_occurrences(const Permutation& p,
                                               const ArrowPattern& pat) {
    std::vector<ArrowOccurrence> out;
    const int n = p.size();
    const int k = pat.size();
    if (k > n) return out;
    const auto pos = detail::positions_word(p.word());
    const auto hat = detail::hat_word(p.word());
    std::vector<int> X(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) X[static_cast<size_t>(i)] = i + 1;
    std::vector<int> witness;
    do {
        if (subset_matches(X, pat, pos, hat, &witness))
            out.push_back(ArrowOccurrence{X, witness});
    } while (next_subset(X, n));
    return out;
}

std::optional<VincularPattern> arrow_to_vincular(const ArrowPattern& pat) {
    if (pat.arrows().size() != 1) return std::nullopt;
    const Arrow a = pat.arrows().front();
    const auto& nu = pat.nu();
    if (std::find(nu.begin(), nu.end(), a.from) != nu.end()) return std::nullopt;
    auto target = std::find(nu.begin(), nu.end(), a.to);
    if (target == nu.end()) return std::nullopt;
    if (a.from <= a.to) return std::nullopt;
    std::vector<int> word(nu.begin(), target);
    const int bond = static_cast<int>(word.size()) + 1;
    word.push_back(a.from);
    word.insert(word.end(), target, nu.end());
    return VincularPattern(Permutation(std::move(word)), {bond});
}

ArrowPattern c1_reverse_partner(const ArrowPattern& pat) {
    const int k = pat.size();
    const bool shape_ok =
        pat.arrows().size() == 1 && pat.arrows().front() == Arrow{k, 1} &&
        static_cast<int>(pat.nu().size()) == k - 1 &&
        std::find(pat.nu().begin(), pat.nu().end(), k) == pat.nu().end();
    if (!shape_ok)
        throw InvalidInput("partner needs shape (nu; k->1) with nu a permutation of [k-1]");
    Permutation nu(pat.nu());
    Permutation partner = one_complement(reverse(nu));
    return ArrowPattern(partner.word(), {Arrow{k, 1}});
}

std::vector<ArrowPattern> all_single_arrow_patterns(int k) {
    if (k < 1) throw InvalidInput("size must be positive");
    if (k > 8) throw InvalidInput("single-arrow family above size 8 is unreasonably large");
    std::vector<ArrowPattern> out;
    for (int b = 1; b <= k; ++b) {
        for (int c = 1; c <= k; ++c) {
            std::vector<int> required, optional;
            for (int v = 1; v <= k; ++v) {
                if (v == b || v == c) optional.push_back(v);
                else required.push_back(v);
            }
            const int extra = static_cast<int>(optional.size());
            for (int mask = 0; mask < (1 << extra); ++mask) {
                std::vector<int> nu = required;
                for (int i = 0; i < extra; ++i)
                    if (mask & (1 << i)) nu.push_back(optional[static_cast<size_t>(i)]);
                std::sort(nu.begin(), nu.end());
                do {
                    out.emplace_back(nu, std::vector<Arrow>{Arrow{b, c}});
                } while (std::next_permutation(nu.begin(), nu.end()));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ArrowPattern& a, const ArrowPattern& b) {
        return to_string(a) < to_string(b);
    });
    return out;
}

// ---- grammar ----

namespace {

int parse_int_token(std::string_view tok, const char* what) {
    if (tok.empty()) throw ParseError(std::string("missing ") + what);
    int v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(std::string("bad ") + what + " \"" + std::string(tok) + "\"");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw ParseError(std::string("oversized ") + what);
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) next = text.size();
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

// "341" as digits, "10,2,3" when a comma appears, "-" for the empty word.
std::vector<int> parse_value_word(std::string_view text) {
    std::vector<int> out;
    if (text == "-" || text.empty()) return out;
    if (text.find(',') != std::string_view::npos) {
        for (auto tok : split(text, ',')) out.push_back(parse_int_token(tok, "value"));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw ParseError(std::string("bad value digit \"") + c + "\"");
            out.push_back(c - '0');
        }
    }
    return out;
}

Arrow parse_arrow_token(std::string_view tok) {
    const size_t sep = tok.find("->");
    if (sep == std::string_view::npos)
        throw ParseError("bad arrow \"" + std::string(tok) + "\" (expected b->c)");
    return Arrow{parse_int_token(tok.substr(0, sep), "arrow source"),
                 parse_int_token(tok.substr(sep + 2), "arrow target")};
}

}  // namespace

ClassicalPattern parse_classical_pattern(std::string_view text) {
    try {
        return ClassicalPattern(Permutation(parse_value_word(text)));
    } catch (const InvalidInput& e) {
        throw ParseError("pattern \"" + std::string(text) + "\": " + e.what());
    }
}

VincularPattern parse_vincular_pattern(std::string_view text) {
    std::vector<int> word;
    std::vector<int> bonds;
    const bool comma_form = text.find(',') != std::string_view::npos;
    int group_start = -1;  // word index where the open bracket began
    size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '[') {
            if (group_start >= 0) throw ParseError("nested \"[\"");
            group_start = static_cast<int>(word.size());
            ++i;
        } else if (c == ']') {
            if (group_start < 0) throw ParseError("unmatched \"]\"");
            const int len = static_cast<int>(word.size()) - group_start;
            if (len < 2) throw ParseError("bond group needs at least 2 entries");
            for (int j = group_start + 1; j < static_cast<int>(word.size()); ++j)
                bonds.push_back(j);  // 1-based bond between positions j and j+1
            group_start = -1;
            ++i;
        } else if (c == ',') {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (comma_form) {
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                word.push_back(parse_int_token(text.substr(i, j - i), "value"));
                i = j;
            } else {
                if (c == '0') throw ParseError("bad value digit \"0\"");
                word.push_back(c - '0');
                ++i;
            }
        } else {
            throw ParseError(std::string("unexpected character \"") + c + "\"");
        }
    }
    if (group_start >= 0) throw ParseError("unmatched \"[\"");
    try {
        return VincularPattern(Permutation(std::move(word)), std::move(bonds));
    } catch (const InvalidInput& e) {
        throw ParseError("pattern \"" + std::string(text) + "\": " + e.what());
    }
}

ArrowPattern parse_arrow_pattern(std::string_view text) {
    try {
        const size_t sep = text.find(';');
        std::vector<int> nu = parse_value_word(text.substr(0, sep));
        std::vector<Arrow> arrows;
        if (sep != std::string_view::npos) {
            auto rest = text.substr(sep + 1);
            if (!rest.empty())
                for (auto tok : split(rest, ',')) arrows.push_back(parse_arrow_token(tok));
        }
        return ArrowPattern(std::move(nu), std::move(arrows));
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw ParseError("pattern \"" + std::string(text) + "\": " + e.what());
    }
}

std::vector<ArrowPattern> parse_arrow_pattern_list(std::string_view text) {
    std::vector<std::string> specs;
    std::vector<std::string> pending;  // comma-form nu segments of the next pattern
    for (auto seg : split(text, ',')) {
        const std::string s(seg);
        if (s.find(';') != std::string::npos) {
            std::string full;
            for (const auto& part : pending) full += part + ",";
            full += s;
            pending.clear();
            specs.push_back(full);
        } else if (s.find("->") != std::string::npos) {
            if (specs.empty() || !pending.empty())
                throw ParseError("arrow \"" + s + "\" without a pattern to extend");
            specs.back() += "," + s;
        } else {
            pending.push_back(s);
        }
    }
    if (!pending.empty()) {
        // trailing arrowless pattern, e.g. "12" or a comma-form nu
        std::string full;
        for (size_t i = 0; i < pending.size(); ++i) {
            if (i) full += ",";
            full += pending[i];
        }
        specs.push_back(full);
    }
    if (specs.empty()) throw ParseError("empty pattern list");
    std::vector<ArrowPattern> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back(parse_arrow_pattern(s));
    return out;
}

namespace {

std::string value_word_str(const std::vector<int>& vals, bool wide) {
    std::string out;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (wide && i) out += ',';
        out += std::to_string(vals[i]);
    }
    return out;
}

}  // namespace

std::string to_string(const ClassicalPattern& pat) { return to_string(pat.word); }

std::string to_string(const VincularPattern& pat) {
    const auto& w = pat.word.word();
    const bool wide = pat.word.size() > 9;
    std::string out;
    std::vector<char> bonded(w.size() + 1, 0);  // bonded[j]: bond between j and j+1
    for (int b : pat.bonds) bonded[static_cast<size_t>(b)] = 1;
    bool open = false;
    for (size_t i = 0; i < w.size(); ++i) {
        const bool bond_next = i + 1 < w.size() && bonded[i + 1];
        if (!open && bond_next) {
            out += '[';
            open = true;
        }
        out += std::to_string(w[i]);
        if (open && !bond_next) {
            out += ']';
            open = false;
        } else if (wide && i + 1 < w.size()) {
            out += ',';
        }
    }
    return out;
}

std::string to_string(const ArrowPattern& pat) {
    const bool wide = pat.size() > 9;
    std::string out = pat.nu().empty() ? "-" : value_word_str(pat.nu(), wide);
    out += ';';
    for (size_t i = 0; i < pat.arrows().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(pat.arrows()[i].from) + "->" +
               std::to_string(pat.arrows()[i].to);
    }
    return out;
}

}  // namespace arrowperm

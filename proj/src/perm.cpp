#include "arrowperm/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace arrowperm {

namespace {

std::vector<int> validate_word(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n)
            throw InvalidInput("not a permutation of [" + std::to_string(n) +
                               "]: value " + std::to_string(v) + " out of range");
        if (seen[static_cast<size_t>(v)])
            throw InvalidInput("not a permutation: value " + std::to_string(v) +
                               " repeats");
        seen[static_cast<size_t>(v)] = 1;
    }
    return word;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(validate_word(std::move(word))) {}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::vector<int>(word)) {}

Permutation Permutation::identity(int n) {
    if (n < 0) throw InvalidInput("negative size");
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    Permutation p;
    p.word_ = std::move(w);  // already valid by construction
    return p;
}

std::string CycleDecomposition::str() const {
    bool wide = false;
    for (const auto& c : cycles)
        for (int v : c)
            if (v > 9) wide = true;
    std::string out;
    for (const auto& c : cycles) {
        out += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (wide && i) out += ',';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

CycleDecomposition standard_cycle_form(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    CycleDecomposition cd;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            cyc.push_back(x);
            seen[static_cast<size_t>(x)] = 1;
            x = p(x);
        } while (x != start);
        // rotate the largest element to the front
        auto mx = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mx, cyc.end());
        cd.cycles.push_back(std::move(cyc));
    }
    // first elements are the cycle maxima; order cycles by them
    std::sort(cd.cycles.begin(), cd.cycles.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return cd;
}

Permutation fundamental_map(const Permutation& p) {
    auto cd = standard_cycle_form(p);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(p.size()));
    for (const auto& c : cd.cycles) out.insert(out.end(), c.begin(), c.end());
    return Permutation(std::move(out));
}

Permutation fundamental_inverse(const Permutation& p) {
    const int n = p.size();
    const auto& w = p.word();
    std::vector<int> image(static_cast<size_t>(n) + 1, 0);
    size_t i = 0;
    while (i < w.size()) {
        // the running maximum is always the current segment's first entry,
        // so the next left-to-right maximum is the next entry above it
        size_t j = i + 1;
        while (j < w.size() && w[j] < w[i]) ++j;
        for (size_t t = i; t + 1 < j; ++t) image[static_cast<size_t>(w[t])] = w[t + 1];
        image[static_cast<size_t>(w[j - 1])] = w[i];
        i = j;
    }
    std::vector<int> out(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) out[static_cast<size_t>(v) - 1] = image[static_cast<size_t>(v)];
    return Permutation(std::move(out));
}

Permutation reduce(std::span<const int> word) {
    std::vector<int> sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("reduce needs distinct entries");
    std::vector<int> out;
    out.reserve(word.size());
    for (int v : word) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int v : p.word()) w.push_back(n + 1 - v);
    return Permutation(std::move(w));
}

Permutation relative_complement(const Permutation& p, const std::vector<int>& fixed) {
    const int n = p.size();
    std::vector<char> is_fixed(static_cast<size_t>(n) + 1, 0);
    for (int v : fixed) {
        if (v < 1 || v > n)
            throw InvalidInput("fixed set entry " + std::to_string(v) +
                               " outside [" + std::to_string(n) + "]");
        if (is_fixed[static_cast<size_t>(v)])
            throw InvalidInput("fixed set entry " + std::to_string(v) + " repeats");
        is_fixed[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> movable;
    for (int v = 1; v <= n; ++v)
        if (!is_fixed[static_cast<size_t>(v)]) movable.push_back(v);
    std::vector<int> image(static_cast<size_t>(n) + 1);
    std::iota(image.begin(), image.end(), 0);
    for (size_t j = 0; j < movable.size(); ++j)
        image[static_cast<size_t>(movable[j])] = movable[movable.size() - 1 - j];
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int v : p.word()) w.push_back(image[static_cast<size_t>(v)]);
    return Permutation(std::move(w));
}

Permutation one_complement(const Permutation& p) {
    if (p.size() == 0) return p;
    return relative_complement(p, {1});
}

std::vector<int> fixed_points(const Permutation& p) {
    std::vector<int> out;
    for (int v = 1; v <= p.size(); ++v)
        if (p(v) == v) out.push_back(v);
    return out;
}

std::string to_string(const Permutation& p) {
    if (p.size() == 0) return "e";
    bool wide = false;
    for (int v : p.word())
        if (v > 9) wide = true;
    std::string out;
    for (size_t i = 0; i < p.word().size(); ++i) {
        if (wide && i) out += ',';
        out += std::to_string(p.word()[i]);
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    if (text == "e") return Permutation();
    if (text.empty()) throw InvalidInput("empty permutation word");
    std::vector<int> w;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string tok(text.substr(pos, next - pos));
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                w.push_back(v);
            } catch (const std::exception&) {
                throw InvalidInput("bad permutation entry \"" + tok + "\"");
            }
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw InvalidInput(std::string("bad permutation digit \"") + c + "\"");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << to_string(p);
}

}  // namespace arrowperm

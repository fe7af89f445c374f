#include "charconj/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "charconj/errors.hpp"
#include "cycle_notation.hpp"

namespace charconj {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
            throw error("InvalidPermutation", "image table is not a bijection on {0.." +
                                                  std::to_string(degree() - 1) + "}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        int a = start;
        do {
            seen[static_cast<std::size_t>(a)] = 1;
            cyc.push_back(a);
            a = images_[static_cast<std::size_t>(a)];
        } while (a != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++count;
        for (int a = start; !seen[static_cast<std::size_t>(a)]; a = images_[static_cast<std::size_t>(a)])
            seen[static_cast<std::size_t>(a)] = 1;
    }
    return count;
}

std::string Permutation::to_string() const {
    std::string out;
    for (const auto& cyc : cycles()) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(cyc[i] + 1);
        }
        out += ')';
    }
    return out;
}

namespace detail {

ParsedCycles scan_cycles(const std::string& text, bool want_colors) {
    ParsedCycles out;
    std::size_t pos = 0;
    auto read_int = [&](const char* what) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw error("BadCycleNotation", std::string("expected ") + what + " at offset " +
                                                std::to_string(start) + " in \"" + text + "\"");
        return std::stoi(text.substr(start, pos - start));
    };
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw error("BadCycleNotation",
                        "expected '(' at offset " + std::to_string(pos) + " in \"" + text + "\"");
        ++pos;
        std::vector<int> cyc;
        cyc.push_back(read_int("element"));
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            cyc.push_back(read_int("element"));
        }
        if (pos >= text.size() || text[pos] != ')')
            throw error("BadCycleNotation", "unterminated cycle in \"" + text + "\"");
        ++pos;
        int color = 0;
        if (want_colors) {
            if (pos >= text.size() || text[pos] != '^')
                throw error("BadCycleNotation", "missing color suffix in \"" + text + "\"");
            ++pos;
            color = read_int("color");
            if (color < 1) throw error("BadCycleNotation", "colors start at 1");
        }
        out.cycles.push_back(std::move(cyc));
        out.colors.push_back(color);
    }
    if (out.cycles.empty()) throw error("BadCycleNotation", "no cycles in \"" + text + "\"");
    return out;
}

Permutation permutation_from_cycles(const std::vector<std::vector<int>>& cycles) {
    int degree = 0;
    for (const auto& cyc : cycles)
        for (int a : cyc) degree = std::max(degree, a);
    std::vector<int> img(static_cast<std::size_t>(degree), -1);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            if (img[static_cast<std::size_t>(from)] != -1)
                throw error("InvalidPermutation", "element " + std::to_string(from + 1) + " appears twice");
            img[static_cast<std::size_t>(from)] = to;
        }
    }
    for (int v : img)
        if (v == -1)
            throw error("InvalidPermutation", "cycles do not cover {1..max}; write fixed points explicitly");
    return Permutation(std::move(img));
}

}  // namespace detail

Permutation Permutation::parse(const std::string& text) {
    return detail::permutation_from_cycles(detail::scan_cycles(text, false).cycles);
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree())
        throw error("DegreeMismatch", "composing degree " + std::to_string(u.degree()) + " with degree " +
                                          std::to_string(v.degree()));
    std::vector<int> img(static_cast<std::size_t>(u.degree()));
    for (int i = 0; i < u.degree(); ++i) img[static_cast<std::size_t>(i)] = v(u(i));
    return Permutation(std::move(img));
}

Partition cycle_type(const Permutation& u) {
    std::vector<int> lengths;
    for (const auto& cyc : u.cycles()) lengths.push_back(static_cast<int>(cyc.size()));
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

Permutation canonical_permutation(const Partition& mu) {
    if (mu.size() < 1) throw error("BadArgument", "canonical permutation needs a partition of k >= 1");
    std::vector<int> img(static_cast<std::size_t>(mu.size()));
    int base = 0;
    for (int part : mu.parts()) {
        for (int j = 0; j < part; ++j) img[static_cast<std::size_t>(base + j)] = base + (j + 1) % part;
        base += part;
    }
    return Permutation(std::move(img));
}

}  // namespace charconj

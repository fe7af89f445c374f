#include "charconj/colored.hpp"

#include <algorithm>
#include <numeric>

#include "charconj/errors.hpp"
#include "charconj/numeric.hpp"
#include "cycle_notation.hpp"

namespace charconj {

ColoredPermutation::ColoredPermutation(Permutation perm, std::vector<int> colors)
    : perm_(std::move(perm)), colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != perm_.degree())
        throw error("InvalidColoring", "need one color per element");
    for (int c : colors_)
        if (c < 1) throw error("InvalidColoring", "colors start at 1");
    for (const auto& cyc : perm_.cycles())
        for (int a : cyc)
            if (colors_[static_cast<std::size_t>(a)] != colors_[static_cast<std::size_t>(cyc.front())])
                throw error("InvalidColoring", "color not constant on the cycle containing " +
                                                   std::to_string(cyc.front() + 1));
}

ColoredPermutation ColoredPermutation::parse(const std::string& text) {
    auto parsed = detail::scan_cycles(text, true);
    Permutation perm = detail::permutation_from_cycles(parsed.cycles);
    std::vector<int> colors(static_cast<std::size_t>(perm.degree()));
    for (std::size_t c = 0; c < parsed.cycles.size(); ++c)
        for (int a : parsed.cycles[c]) colors[static_cast<std::size_t>(a - 1)] = parsed.colors[c];
    return ColoredPermutation(std::move(perm), std::move(colors));
}

std::string ColoredPermutation::to_string() const {
    std::string out;
    for (const auto& cyc : perm_.cycles()) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(cyc[i] + 1);
        }
        out += ")^";
        out += std::to_string(colors_[static_cast<std::size_t>(cyc.front())]);
    }
    return out;
}

ColoredPermutation colored_multiply(const ColoredPermutation& alpha, const Permutation& v) {
    Permutation w = compose(alpha.perm(), v);
    std::vector<int> colors(static_cast<std::size_t>(w.degree()));
    for (const auto& cyc : w.cycles()) {
        int c = 0;
        for (int a : cyc) c = std::max(c, alpha.colors()[static_cast<std::size_t>(a)]);
        for (int a : cyc) colors[static_cast<std::size_t>(a)] = c;
    }
    return ColoredPermutation(std::move(w), std::move(colors));
}

std::vector<int> kappa_vector(const ColoredPermutation& alpha, int m) {
    std::vector<int> kappa(static_cast<std::size_t>(m), 0);
    for (const auto& cyc : alpha.perm().cycles()) {
        int c = alpha.colors()[static_cast<std::size_t>(cyc.front())];
        if (c > m) throw error("ColorOutOfRange", "cycle colored " + std::to_string(c) + " with m = " + std::to_string(m));
        ++kappa[static_cast<std::size_t>(c - 1)];
    }
    return kappa;
}

std::vector<ColoredPermutation> enumerate_colored(int k, int m) {
    if (k < 1 || m < 1) throw error("BadArgument", "enumeration needs k >= 1 and m >= 1");
    std::vector<ColoredPermutation> out;
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    do {
        Permutation u(img);
        auto cycs = u.cycles();
        std::vector<int> digit(cycs.size(), 1);
        while (true) {
            std::vector<int> colors(static_cast<std::size_t>(k));
            for (std::size_t c = 0; c < cycs.size(); ++c)
                for (int a : cycs[c]) colors[static_cast<std::size_t>(a)] = digit[c];
            out.emplace_back(u, std::move(colors));
            std::size_t pos = digit.size();
            while (pos > 0 && digit[pos - 1] == m) digit[--pos] = 1;
            if (pos == 0) break;
            ++digit[pos - 1];
        }
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace charconj

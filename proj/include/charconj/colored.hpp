#pragma once

#include <string>
#include <vector>

#include "charconj/permutation.hpp"

namespace charconj {

// Permutation with every cycle colored from {1..m}. Colors are stored per
// element and must be constant on each cycle; composition then needs no cycle
// identity bookkeeping.
class ColoredPermutation {
public:
    ColoredPermutation(Permutation perm, std::vector<int> colors);

    static ColoredPermutation parse(const std::string& text);

    const Permutation& perm() const noexcept { return perm_; }
    const std::vector<int>& colors() const noexcept { return colors_; }
    int degree() const noexcept { return perm_.degree(); }

    std::string to_string() const;  // "(1,2,3)^1(4,5)^2"

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    Permutation perm_;
    std::vector<int> colors_;
};

// alpha * v: compose the underlying permutations left-to-right; each cycle of
// the product takes the maximum color among the alpha-cycles it meets. This is
// not an action of S_k: bracketing matters.
ColoredPermutation colored_multiply(const ColoredPermutation& alpha, const Permutation& v);

// Component i-1 counts the cycles colored i; components sum to the cycle count.
std::vector<int> kappa_vector(const ColoredPermutation& alpha, int m);

// Every cycle-colored permutation of degree k exactly once: permutations in
// lexicographic image order, colorings odometer-style over cycles sorted by
// smallest element (last cycle fastest). Count is (k+m-1)_k.
std::vector<ColoredPermutation> enumerate_colored(int k, int m);

}  // namespace charconj

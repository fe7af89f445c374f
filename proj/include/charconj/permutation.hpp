#pragma once

#include <string>
#include <vector>

#include "charconj/partition.hpp"

namespace charconj {

// Bijection on {0..k-1} stored as an image table. Text I/O speaks the 1-based
// cycle notation "(1,2,3)(4,5)"; fixed points are always written, so a printed
// permutation parses back to the same degree.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int k);
    static Permutation parse(const std::string& text);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    // Cycles ordered by smallest element, each written from its smallest element.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// Left-to-right product, (uv)(i) = v(u(i)). This convention is fixed repo-wide;
// the colored-product examples depend on it.
Permutation compose(const Permutation& u, const Permutation& v);

// Multiset of cycle lengths, as a partition of the degree.
Partition cycle_type(const Permutation& u);

// w_mu with cycles (1..mu1)(mu1+1..mu1+mu2)... for mu a partition of k >= 1.
Permutation canonical_permutation(const Partition& mu);

}  // namespace charconj

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "charconj/numeric.hpp"

namespace charconj {

// Weakly decreasing sequence of positive integer parts. The empty sequence is
// the unique partition of 0. Unsorted input is rejected, never sorted silently.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "4,2,1"; "" (or all blanks) is the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }  // sum of parts
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    Partition conjugate() const;

    std::string to_string() const;  // "(4,2,1)", "()" for empty

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of n, each exactly once, in reverse lexicographic order:
// (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

}  // namespace charconj

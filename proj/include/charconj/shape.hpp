#pragma once

#include <string>
#include <vector>

#include "charconj/partition.hpp"

namespace charconj {

// Union of m stacked rectangles p_i x q_i with q_1 >= q_2 >= ... >= q_m.
// Zero heights and widths are legal; the corresponding rows drop out.
struct RectangleUnionShape {
    std::vector<int> p;  // heights
    std::vector<int> q;  // widths

    RectangleUnionShape(std::vector<int> p_in, std::vector<int> q_in);

    // "2x3,1x2" -> p=(2,1), q=(3,2)
    static RectangleUnionShape parse(const std::string& text);

    int m() const noexcept { return static_cast<int>(p.size()); }
    int n() const noexcept;  // cell count, sum p_i q_i

    std::string to_string() const;
};

// The partition with q_i repeated p_i times; zero-width rows are dropped.
Partition shape_to_partition(const RectangleUnionShape& s);

}  // namespace charconj

#pragma once

#include <string>
#include <vector>

#include "charconj/permutation.hpp"

namespace charconj::detail {

// Shared scanner for "(1,2,3)(4,5)" and "(1,2,3)^1(4,5)^2": 1-based cycles
// plus a color per cycle (0 when colors are not requested).
struct ParsedCycles {
    std::vector<std::vector<int>> cycles;
    std::vector<int> colors;
};

ParsedCycles scan_cycles(const std::string& text, bool want_colors);

Permutation permutation_from_cycles(const std::vector<std::vector<int>>& cycles);

}  // namespace charconj::detail

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace charconj {

struct Mismatch {
    nlohmann::json inputs;
    std::string lhs;
    std::string rhs;
};

// Outcome of one verification campaign. Passing is synonymous with an empty
// mismatch list.
struct VerificationReport {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    long long cases = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_ms = 0.0;

    bool pass() const noexcept { return mismatches.empty(); }

    nlohmann::json to_json() const;
    std::string summary() const;  // one human-readable line
};

}  // namespace charconj

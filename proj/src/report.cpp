#include "charconj/report.hpp"

namespace charconj {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json mms = nlohmann::json::array();
    for (const auto& mm : mismatches)
        mms.push_back({{"inputs", mm.inputs}, {"lhs", mm.lhs}, {"rhs", mm.rhs}});
    return {{"identity", identity}, {"params", params},     {"cases", cases},
            {"mismatches", mms},    {"elapsed_ms", elapsed_ms}, {"pass", pass()}};
}

std::string VerificationReport::summary() const {
    std::string out = (pass() ? "PASS " : "FAIL ") + identity + ": " + std::to_string(cases) + " cases, " +
                      std::to_string(mismatches.size()) + " mismatches, " +
                      std::to_string(elapsed_ms) + " ms";
    return out;
}

}  // namespace charconj

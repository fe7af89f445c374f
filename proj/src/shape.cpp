#include "charconj/shape.hpp"

#include "charconj/errors.hpp"

namespace charconj {

RectangleUnionShape::RectangleUnionShape(std::vector<int> p_in, std::vector<int> q_in)
    : p(std::move(p_in)), q(std::move(q_in)) {
    if (p.size() != q.size()) throw error("LengthMismatch", "p and q must have the same length");
    for (int v : p)
        if (v < 0) throw error("BadArgument", "negative rectangle height");
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] < 0) throw error("BadArgument", "negative rectangle width");
        if (i > 0 && q[i] > q[i - 1])
            throw error("QNotWeaklyDecreasing", "q_" + std::to_string(i + 1) + " = " + std::to_string(q[i]) +
                                                    " exceeds q_" + std::to_string(i) + " = " +
                                                    std::to_string(q[i - 1]));
    }
}

RectangleUnionShape RectangleUnionShape::parse(const std::string& text) {
    std::vector<int> p, q;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const auto sep = token.find('x');
        if (sep == std::string::npos)
            throw error("BadShape", "expected \"PxQ\" but got \"" + token + "\"");
        try {
            std::size_t used_p = 0, used_q = 0;
            const int pv = std::stoi(token.substr(0, sep), &used_p);
            const int qv = std::stoi(token.substr(sep + 1), &used_q);
            if (used_p != sep || used_q != token.size() - sep - 1) throw std::invalid_argument(token);
            p.push_back(pv);
            q.push_back(qv);
        } catch (const std::exception&) {
            throw error("BadShape", "expected \"PxQ\" but got \"" + token + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return RectangleUnionShape(std::move(p), std::move(q));
}

int RectangleUnionShape::n() const noexcept {
    int total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) total += p[i] * q[i];
    return total;
}

std::string RectangleUnionShape::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]) + "x" + std::to_string(q[i]);
    }
    return out;
}

Partition shape_to_partition(const RectangleUnionShape& s) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < s.p.size(); ++i) {
        if (s.q[i] == 0) continue;  // zero-width rows drop out
        parts.insert(parts.end(), static_cast<std::size_t>(s.p[i]), s.q[i]);
    }
    return Partition(std::move(parts));
}

}  // namespace charconj

#include "charconj/partition.hpp"

#include <algorithm>
#include <numeric>

#include "charconj/errors.hpp"

namespace charconj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw error("NonPositivePart", "part " + std::to_string(parts_[i]) + " at position " + std::to_string(i + 1));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw error("NotWeaklyDecreasing",
                        "part " + std::to_string(parts_[i]) + " follows " + std::to_string(parts_[i - 1]));
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    auto trim = [](const std::string& s) {
        auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    if (trim(text).empty()) return Partition();

    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = trim(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (token.empty()) throw error("EmptyToken", "empty token in partition \"" + text + "\"");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw error("NonPositivePart", "token \"" + token + "\" is not a positive integer");
        }
        if (used != token.size() || value < 1)
            throw error("NonPositivePart", "token \"" + token + "\" is not a positive integer");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw error("EmptyToken", "trailing comma in partition \"" + text + "\"");
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) conj.resize(static_cast<std::size_t>(parts_[0]));
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw error("BadArgument", "partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(n, n, prefix, out);
    return out;
}

}  // namespace charconj

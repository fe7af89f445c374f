#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace charconj {

// All domain errors carry a short machine-checkable kind tag
// ("NotWeaklyDecreasing", "DegreeMismatch", ...) plus a human message.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

}  // namespace charconj

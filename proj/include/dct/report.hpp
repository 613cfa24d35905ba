#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dct {

/// Identifier of an element, morphism, cell, or declaration.
using Id = std::string;

/// One violated law or structural defect, with the witnesses spelled out
/// in the message.
struct Issue {
    std::string code;     // e.g. "assoc", "comm", "UnknownElement"
    std::string message;  // human-readable, names the witnessing ids

    bool operator==(const Issue&) const = default;
};

/// Result of an exhaustive law check. Empty means every law holds.
struct ValidationReport {
    std::vector<Issue> issues;

    [[nodiscard]] bool ok() const { return issues.empty(); }

    void add(std::string code, std::string message) {
        issues.push_back({std::move(code), std::move(message)});
    }

    void merge(const ValidationReport& other) {
        issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    }

    [[nodiscard]] bool has(const std::string& code) const {
        for (const auto& i : issues)
            if (i.code == code) return true;
        return false;
    }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (const auto& i : issues) {
            out += i.code;
            out += ": ";
            out += i.message;
            out += '\n';
        }
        return out;
    }
};

/// Error thrown by operations whose preconditions are violated
/// (dangling references, non-composable arguments, exceeded budgets).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    [[nodiscard]] const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace dct

#pragma once

#include <string>
#include <vector>

namespace hyperdeg {

struct CheckEntry {
    std::string check;
    /// Short tag naming the claim being checked.
    std::string ref;
    std::string expected;
    std::string got;
    bool pass = false;
};

/// Ordered list of named checks; order is insertion order and therefore deterministic.
class Report {
public:
    void add(std::string check, std::string ref, std::string expected, std::string got, bool pass);
    void append(const Report& other);

    const std::vector<CheckEntry>& checks() const { return checks_; }
    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    /// First entry with this name, or nullptr.
    const CheckEntry* find(const std::string& check) const;

private:
    std::vector<CheckEntry> checks_;
};

}  // namespace hyperdeg

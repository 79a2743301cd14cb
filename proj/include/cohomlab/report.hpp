#pragma once

#include <string>
#include <vector>

namespace cohomlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on success unless informative
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const CheckReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
};

}  // namespace cohomlab

#pragma once

#include <string>
#include <vector>

namespace jacksym {

/// One named check with an optional human-readable detail on failure.
struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Result of a verification pass: every individual check is recorded so a
/// failure names the exact witness.
struct CheckReport {
    std::string title;
    std::vector<CheckItem> items;

    void add(std::string name, bool passed, std::string detail = "") {
        items.push_back({std::move(name), passed, std::move(detail)});
    }

    bool all_passed() const {
        for (const auto& it : items)
            if (!it.passed) return false;
        return true;
    }

    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.passed) return &it;
        return nullptr;
    }

    size_t passed_count() const {
        size_t n = 0;
        for (const auto& it : items) n += it.passed ? 1 : 0;
        return n;
    }
};

} // namespace jacksym
